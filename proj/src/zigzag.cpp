#include "parhom/zigzag.hpp"

#include <algorithm>
#include <stdexcept>

namespace parhom {

void zigzag_module::check_shapes() const {
	if (node_dims.empty()) {
		if (!arrows.empty()) throw std::invalid_argument("zigzag: arrows without nodes");
		return;
	}
	if (arrows.size() != node_dims.size() - 1)
		throw std::invalid_argument("zigzag: need exactly one arrow between consecutive nodes");
	for (size_t i = 0; i < arrows.size(); ++i) {
		size_t src = arrows[i].forward ? i : i + 1;
		size_t dst = arrows[i].forward ? i + 1 : i;
		if (arrows[i].map.cols() != node_dims[src] || arrows[i].map.rows() != node_dims[dst])
			throw std::invalid_argument("zigzag: arrow " + std::to_string(i) + " shape mismatch");
	}
}

zigzag_module build_levelset_zigzag(const simplicial_complex& k, const vertex_function& f, int r) {
	if (k.dimension() > 1)
		throw std::invalid_argument("build_levelset_zigzag: only complexes of dimension <= 1");
	if (r < 0 || r > 1) throw std::invalid_argument("build_levelset_zigzag: degree must be 0 or 1");
	level_grid grid = validate(k, f);
	zigzag_module zz;
	if (k.empty()) return zz;

	size_t m = grid.size();
	// regular values interleaving the grid
	std::vector<rational> regular(m + 1);
	regular[0] = grid.value(0) - rational(1);
	for (size_t i = 1; i < m; ++i)
		regular[i] = (grid.value(i - 1) + grid.value(i)) / rational(2);
	regular[m] = grid.value(m - 1) + rational(1);

	// all cut levels in order: s_0, c_0, s_1, c_1, ..., c_{m-1}, s_m
	std::vector<rational> cuts;
	for (size_t i = 0; i < m; ++i) {
		cuts.push_back(regular[i]);
		cuts.push_back(grid.value(i));
	}
	cuts.push_back(regular[m]);

	// subdivided graph: original vertices plus one vertex per (edge, crossed cut)
	std::vector<rational> values;
	for (int v = 0; v < k.vertex_count(); ++v) values.push_back(f[static_cast<size_t>(v)]);
	std::vector<simplex> simplices;
	for (const simplex& s : k.simplices(0)) simplices.push_back(s);
	auto add_vertex = [&](const rational& val) -> vertex_id {
		values.push_back(val);
		vertex_id id = static_cast<vertex_id>(values.size()) - 1;
		simplices.push_back({id});
		return id;
	};
	for (const simplex& e : k.simplices(1)) {
		vertex_id u = e[0], v = e[1];
		rational fu = f[static_cast<size_t>(u)], fv = f[static_cast<size_t>(v)];
		if (fu == fv) {
			simplices.push_back({u, v});
			continue;
		}
		vertex_id lo = fu < fv ? u : v;
		vertex_id hi = fu < fv ? v : u;
		rational flo = std::min(fu, fv), fhi = std::max(fu, fv);
		vertex_id prev = lo;
		for (const rational& c : cuts) {
			if (!(flo < c)) continue;
			if (!(c < fhi)) break;
			vertex_id nv = add_vertex(c);
			simplices.push_back(prev < nv ? simplex{prev, nv} : simplex{nv, prev});
			prev = nv;
		}
		simplices.push_back(prev < hi ? simplex{prev, hi} : simplex{hi, prev});
	}
	simplicial_complex graph(static_cast<int>(values.size()), std::move(simplices));
	vertex_function gf(std::move(values));

	// node complexes: levelsets at regular values, slabs between them
	size_t node_count = 2 * m + 1;
	std::vector<simplicial_complex> pieces(node_count);
	for (size_t i = 0; i <= m; ++i) {
		const rational& s = regular[i];
		pieces[2 * i] = graph.full_subcomplex([&](vertex_id v) { return gf[static_cast<size_t>(v)] == s; });
	}
	for (size_t i = 0; i < m; ++i) {
		const rational &lo = regular[i], &hi = regular[i + 1];
		pieces[2 * i + 1] = graph.full_subcomplex(
		    [&](vertex_id v) { return lo <= gf[static_cast<size_t>(v)] && gf[static_cast<size_t>(v)] <= hi; });
	}

	std::vector<homology_basis> hom(node_count);
	for (size_t i = 0; i < node_count; ++i) hom[i] = homology(pieces[i], r);
	zz.node_dims.resize(node_count);
	for (size_t i = 0; i < node_count; ++i) zz.node_dims[i] = hom[i].dim();
	zz.arrows.resize(node_count - 1);
	for (size_t i = 0; i + 1 < node_count; ++i) {
		bool forward = i % 2 == 0; // levelset -> slab
		size_t lv = forward ? i : i + 1;
		size_t slab = forward ? i + 1 : i;
		zz.arrows[i].forward = forward;
		zz.arrows[i].map = induced_map(pieces[lv], hom[lv], pieces[slab], hom[slab], r);
	}
	zz.check_shapes();
	return zz;
}

size_t generalized_rank(const zigzag_module& zz, size_t p, size_t q) {
	if (p < 1 || q < p || q > zz.nodes())
		throw std::invalid_argument("generalized_rank: range out of bounds");
	size_t lo = p - 1, hi = q - 1; // 0-based node range
	std::vector<size_t> offset(hi - lo + 2, 0);
	for (size_t i = lo; i <= hi; ++i) offset[i - lo + 1] = offset[i - lo] + zz.node_dims[i];
	size_t total = offset.back();
	if (total == 0) return 0;
	if (lo == hi) return zz.node_dims[lo];

	// limit: tuples compatible along every arrow in the range
	size_t constraint_rows = 0;
	for (size_t i = lo; i < hi; ++i)
		constraint_rows += zz.node_dims[zz.arrows[i].forward ? i + 1 : i];
	gf2_matrix constraints(constraint_rows, total);
	size_t row0 = 0;
	for (size_t i = lo; i < hi; ++i) {
		const zigzag_arrow& a = zz.arrows[i];
		size_t src = a.forward ? i : i + 1;
		size_t dst = a.forward ? i + 1 : i;
		// map(x_src) + x_dst = 0
		for (size_t rr = 0; rr < zz.node_dims[dst]; ++rr) {
			for (size_t cc = 0; cc < zz.node_dims[src]; ++cc)
				if (a.map.get(rr, cc)) constraints.set(row0 + rr, offset[src - lo] + cc, true);
			constraints.set(row0 + rr, offset[dst - lo] + rr, true);
		}
		row0 += zz.node_dims[dst];
	}
	subspace lim = kernel_basis(constraints);

	// colimit relations: x_src ~ map(x_src) for every arrow and basis vector
	size_t rel_cols = 0;
	for (size_t i = lo; i < hi; ++i) rel_cols += zz.node_dims[zz.arrows[i].forward ? i : i + 1];
	gf2_matrix relations(total, rel_cols);
	size_t col0 = 0;
	for (size_t i = lo; i < hi; ++i) {
		const zigzag_arrow& a = zz.arrows[i];
		size_t src = a.forward ? i : i + 1;
		size_t dst = a.forward ? i + 1 : i;
		for (size_t e = 0; e < zz.node_dims[src]; ++e) {
			relations.set(offset[src - lo] + e, col0 + e, true);
			for (size_t rr = 0; rr < zz.node_dims[dst]; ++rr)
				if (a.map.get(rr, e)) relations.set(offset[dst - lo] + rr, col0 + e, true);
		}
		col0 += zz.node_dims[src];
	}
	subspace rel_space = column_space(relations);

	// The canonical map sends a compatible tuple to the class of any single
	// slot; slots agree in the colimit because the range is connected.
	// Project the limit onto the first node and measure it modulo relations.
	gf2_matrix proj(total, lim.dim());
	for (size_t j = 0; j < lim.dim(); ++j) proj.set_col(j, lim.basis().col(j));
	// zero out everything except the first slot
	gf2_matrix first_slot(total, lim.dim());
	for (size_t j = 0; j < lim.dim(); ++j)
		for (size_t rr = 0; rr < zz.node_dims[lo]; ++rr)
			first_slot.set(rr, j, proj.get(rr, j));
	subspace image_plus_rel = subspace_sum(subspace::span(total, first_slot), rel_space);
	return image_plus_rel.dim() - rel_space.dim();
}

interval_multiplicities compute_interval_multiplicities(const zigzag_module& zz) {
	interval_multiplicities out;
	size_t n = zz.nodes();
	if (n == 0) return out;
	std::vector<std::vector<long long>> rk(n + 2, std::vector<long long>(n + 2, 0));
	for (size_t p = 1; p <= n; ++p)
		for (size_t q = p; q <= n; ++q)
			rk[p][q] = static_cast<long long>(generalized_rank(zz, p, q));
	for (size_t p = 1; p <= n; ++p) {
		for (size_t q = p; q <= n; ++q) {
			long long m = rk[p][q] - rk[p - 1][q] - rk[p][q + 1] + rk[p - 1][q + 1];
			if (m < 0)
				throw std::logic_error("interval_multiplicities: negative multiplicity at [" +
				                       std::to_string(p) + "," + std::to_string(q) + "]");
			if (m > 0) out.counts[{p, q}] = m;
		}
	}
	return out;
}

bool decomposition_is_valid(const zigzag_module& zz, const interval_multiplicities& m) {
	size_t n = zz.nodes();
	for (size_t node = 1; node <= n; ++node) {
		long long total = 0;
		for (const auto& [pq, mult] : m.counts)
			if (pq.first <= node && node <= pq.second) total += mult;
		if (total != static_cast<long long>(zz.node_dims[node - 1])) return false;
	}
	for (size_t p = 1; p <= n; ++p) {
		for (size_t q = p; q <= n; ++q) {
			long long expected = 0;
			for (const auto& [pq, mult] : m.counts)
				if (pq.first <= p && q <= pq.second) expected += mult;
			if (expected != static_cast<long long>(generalized_rank(zz, p, q))) return false;
		}
	}
	return true;
}

barcode_set decode_zigzag(const interval_multiplicities& m, const level_grid& grid, int r) {
	barcode_set out;
	size_t grid_m = grid.size();
	for (const auto& [pq, mult] : m.counts) {
		auto [p, q] = pq;
		bool left_closed = p % 2 == 0;  // even 1-based node = slab
		bool right_closed = q % 2 == 0;
		rational left, right;
		if (left_closed) {
			left = grid.value(p / 2 - 1);
		} else {
			size_t j = (p - 1) / 2; // levelset L(s_j); nearest grid value below s_j
			if (j == 0)
				throw std::logic_error("decode_zigzag: interval starts at the empty bottom levelset");
			left = grid.value(j - 1);
		}
		if (right_closed) {
			right = grid.value(q / 2 - 1);
		} else {
			size_t j = (q - 1) / 2; // nearest grid value above s_j
			if (j >= grid_m)
				throw std::logic_error("decode_zigzag: interval ends at the empty top levelset");
			right = grid.value(j);
		}
		bar_kind kind = left_closed ? (right_closed ? bar_kind::closed : bar_kind::closed_open)
		                            : (right_closed ? bar_kind::open_closed : bar_kind::open);
		out.add(r, kind, left, right, mult);
	}
	return out;
}

barcode_set zigzag_route_barcodes(const simplicial_complex& k, const vertex_function& f) {
	level_grid grid = validate(k, f);
	barcode_set out;
	for (int r = 0; r <= 1; ++r) {
		zigzag_module zz = build_levelset_zigzag(k, f, r);
		if (zz.nodes() == 0) continue;
		interval_multiplicities m = compute_interval_multiplicities(zz);
		barcode_set bars = decode_zigzag(m, grid, r);
		bars.for_each([&](const decorated_interval& b, long long mult) {
			out.add(b.degree, b.kind, b.left, b.right, mult);
		});
	}
	return out;
}

} // namespace parhom
