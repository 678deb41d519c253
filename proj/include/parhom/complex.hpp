#pragma once

#include <map>
#include <vector>

#include "parhom/gf2.hpp"
#include "parhom/rational.hpp"

namespace parhom {

using vertex_id = int;
using simplex = std::vector<vertex_id>; // sorted ascending, no repeats

// Finite simplicial complex on vertex ids 0..vertex_count-1. A vertex is in
// the complex iff its singleton appears as a simplex, so proper subcomplexes
// share the ambient id space.
class simplicial_complex {
public:
	simplicial_complex() : vertex_count_(0) {}
	simplicial_complex(int vertex_count, std::vector<simplex> simplices);

	int vertex_count() const { return vertex_count_; }
	int dimension() const { return static_cast<int>(by_dim_.size()) - 1; } // -1 if empty
	bool empty() const { return by_dim_.empty(); }

	size_t count(int d) const;
	const std::vector<simplex>& simplices(int d) const;
	int index_of(int d, const simplex& s) const; // -1 if absent
	bool has_vertex(vertex_id v) const { return index_of(0, {v}) >= 0; }
	size_t total_count() const;

	bool contains(const simplicial_complex& sub) const;
	bool is_face_closed() const;

	// Boundary map C_r -> C_{r-1}; rows index (r-1)-simplices, columns
	// r-simplices.
	gf2_matrix boundary(int r) const;

	long long euler_characteristic() const;

	// Full subcomplex induced on the vertices accepted by keep.
	template <typename Pred>
	simplicial_complex full_subcomplex(Pred keep) const {
		std::vector<simplex> kept;
		for (int d = 0; d <= dimension(); ++d) {
			for (const simplex& s : simplices(d)) {
				bool all = true;
				for (vertex_id v : s)
					if (!keep(v)) {
						all = false;
						break;
					}
				if (all) kept.push_back(s);
			}
		}
		return simplicial_complex(vertex_count_, std::move(kept));
	}

private:
	int vertex_count_;
	std::vector<std::vector<simplex>> by_dim_;
	std::vector<std::map<simplex, int>> index_;
	static const std::vector<simplex> empty_list_;
};

// One exact value per vertex id.
class vertex_function {
public:
	vertex_function() = default;
	explicit vertex_function(std::vector<rational> values) : values_(std::move(values)) {}
	size_t size() const { return values_.size(); }
	const rational& operator[](size_t v) const { return values_[v]; }
	const std::vector<rational>& values() const { return values_; }

private:
	std::vector<rational> values_;
};

// Symbolic position on the level grid: the chain
//   neg_inf < at(0) < mid(0) < at(1) < ... < at(m-1) < pos_inf
// where at(i) is the i-th critical value and mid(i) the open gap above it.
struct grid_pos {
	enum class kind : uint8_t { neg_inf, at, mid, pos_inf };
	kind k = kind::neg_inf;
	int i = 0;

	static grid_pos neg_inf() { return {kind::neg_inf, 0}; }
	static grid_pos at(int i) { return {kind::at, i}; }
	static grid_pos mid(int i) { return {kind::mid, i}; }
	static grid_pos pos_inf() { return {kind::pos_inf, 0}; }

	long long key() const {
		switch (k) {
		case kind::neg_inf: return -1;
		case kind::at: return 2LL * i;
		case kind::mid: return 2LL * i + 1;
		default: return 1LL << 40;
		}
	}
	auto operator<=>(const grid_pos& o) const { return key() <=> o.key(); }
	bool operator==(const grid_pos& o) const { return key() == o.key(); }
	std::string str() const;
};

// Sorted distinct vertex values c_0 < ... < c_{m-1}.
class level_grid {
public:
	level_grid() = default;
	explicit level_grid(std::vector<rational> sorted_distinct) : values_(std::move(sorted_distinct)) {}

	size_t size() const { return values_.size(); }
	const rational& value(size_t i) const { return values_[i]; }
	const std::vector<rational>& values() const { return values_; }
	int index_of(const rational& v) const; // -1 if absent

	bool valid(grid_pos p) const;
	grid_pos pred(grid_pos p) const; // neg_inf/pos_inf are sinks
	grid_pos succ(grid_pos p) const;

	// Position of an arbitrary extended value: grid values map to at(i),
	// anything in the open gap to mid(i), below/above the grid to the
	// infinities.
	grid_pos position_of(const ext_rational& v) const;

	// All finite positions in order: at(0), mid(0), ..., at(m-1).
	std::vector<grid_pos> finite_positions() const;
	// neg_inf, all finite positions, pos_inf.
	std::vector<grid_pos> all_positions() const;

private:
	std::vector<rational> values_;
};

// Checks face closure and value-array coherence; returns the level grid.
level_grid validate(const simplicial_complex& k, const vertex_function& f);

enum class level_side { sub, super };

// Full subcomplex on the vertices below (sub) or above (super) the level
// position. at(i) and mid(i) agree on the sub side; mid(i) matches at(i+1)
// on the super side.
simplicial_complex level_subcomplex(const simplicial_complex& k, const vertex_function& f,
                                    level_side side, grid_pos p, const level_grid& grid);

// Homology of a complex in one degree: dimension plus explicit cycle
// representatives, with a solver to express any cycle in the chosen classes.
class homology_basis {
public:
	homology_basis() = default;
	homology_basis(size_t chain_dim, gf2_matrix reps, gf2_matrix boundary_reps);

	size_t dim() const { return reps_.cols(); }
	size_t chain_dim() const { return chain_dim_; }
	const gf2_matrix& cycle_basis() const { return reps_; }

	// Coordinates of [cycle] in the representative basis; throws if the
	// chain is not a cycle of this complex (internal consistency error).
	gf2_vector class_coords(const gf2_vector& cycle) const;

private:
	size_t chain_dim_ = 0;
	gf2_matrix reps_;
	gf2_solver solver_; // over [reps | boundary basis]
};

homology_basis homology(const simplicial_complex& k, int r);

// Matrix of H_r(sub) -> H_r(ambient) in the given bases.
gf2_matrix induced_map(const simplicial_complex& sub, const homology_basis& sub_h,
                       const simplicial_complex& ambient, const homology_basis& ambient_h, int r);
gf2_matrix induced_map(const simplicial_complex& sub, const simplicial_complex& ambient, int r);

} // namespace parhom
