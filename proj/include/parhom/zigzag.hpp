#pragma once

#include <map>
#include <vector>

#include "parhom/barcodes.hpp"
#include "parhom/complex.hpp"

namespace parhom {

// One arrow of a zigzag of GF(2) vector spaces. Forward arrows map node i to
// node i+1, backward arrows map node i+1 to node i.
struct zigzag_arrow {
	gf2_matrix map;
	bool forward = true;
};

// Zigzag module over the levelset node sequence
//   L(s_0) -> slab_0 <- L(s_1) -> slab_1 <- ... -> slab_{m-1} <- L(s_m)
// with regular values s_i interleaving the grid. Node indices are 1-based in
// the rank/multiplicity API; odd nodes are levelsets, even nodes slabs.
struct zigzag_module {
	std::vector<size_t> node_dims;
	std::vector<zigzag_arrow> arrows; // arrows.size() == node_dims.size() - 1 (or both empty)
	size_t nodes() const { return node_dims.size(); }
	bool node_is_slab(size_t one_based) const { return one_based % 2 == 0; }
	void check_shapes() const; // throws on inconsistent matrix shapes
};

// Interlevel-set zigzag of a complex of dimension <= 1 in homology degree r.
// Every edge is subdivided at each regular and critical level it crosses, so
// levelsets and slabs are honest full subcomplexes.
zigzag_module build_levelset_zigzag(const simplicial_complex& k, const vertex_function& f, int r);

// dim of the image of the canonical map lim -> colim of the zigzag
// restricted to nodes p..q (1-based, inclusive).
size_t generalized_rank(const zigzag_module& zz, size_t p, size_t q);

// Interval multiplicities of the module, as a map from 1-based node ranges.
class interval_multiplicities {
public:
	using table = std::map<std::pair<size_t, size_t>, long long>;
	table counts;
	long long at(size_t p, size_t q) const {
		auto it = counts.find({p, q});
		return it == counts.end() ? 0 : it->second;
	}
	bool operator==(const interval_multiplicities&) const = default;
};

// Four-term inclusion-exclusion of the generalized rank over all ranges.
// Throws on a negative multiplicity (an internal inconsistency).
interval_multiplicities compute_interval_multiplicities(const zigzag_module& zz);

// Checks that the interval decomposition reproduces every node dimension and
// every generalized rank of the module.
bool decomposition_is_valid(const zigzag_module& zz, const interval_multiplicities& m);

// Decodes node ranges into decorated bars: endpoints at slabs are closed at
// the grid value inside the slab; endpoints at levelsets are open at the
// adjacent grid value.
barcode_set decode_zigzag(const interval_multiplicities& m, const level_grid& grid, int r);

// All bars of the zigzag oracle in degrees 0 and 1.
barcode_set zigzag_route_barcodes(const simplicial_complex& k, const vertex_function& f);

} // namespace parhom
