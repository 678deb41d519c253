#include "parhom/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace parhom {

const std::vector<simplex> simplicial_complex::empty_list_{};

namespace {

std::string simplex_str(const simplex& s) {
	std::ostringstream os;
	os << "{";
	for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
	os << "}";
	return os.str();
}

} // namespace

simplicial_complex::simplicial_complex(int vertex_count, std::vector<simplex> simplices)
    : vertex_count_(vertex_count) {
	if (vertex_count < 0) throw std::invalid_argument("complex: negative vertex count");
	int maxdim = -1;
	for (simplex& s : simplices) {
		if (s.empty()) throw std::invalid_argument("complex: empty simplex tuple");
		std::sort(s.begin(), s.end());
		if (std::adjacent_find(s.begin(), s.end()) != s.end())
			throw std::invalid_argument("complex: repeated vertex in simplex " + simplex_str(s));
		if (s.front() < 0 || s.back() >= vertex_count)
			throw std::invalid_argument("complex: vertex index out of range in simplex " +
			                            simplex_str(s));
		maxdim = std::max(maxdim, static_cast<int>(s.size()) - 1);
	}
	by_dim_.resize(maxdim + 1);
	index_.resize(maxdim + 1);
	for (simplex& s : simplices) by_dim_[s.size() - 1].push_back(std::move(s));
	for (int d = 0; d <= maxdim; ++d) {
		std::sort(by_dim_[d].begin(), by_dim_[d].end());
		auto dup = std::adjacent_find(by_dim_[d].begin(), by_dim_[d].end());
		if (dup != by_dim_[d].end())
			throw std::invalid_argument("complex: duplicate simplex " + simplex_str(*dup));
		for (size_t i = 0; i < by_dim_[d].size(); ++i)
			index_[d][by_dim_[d][i]] = static_cast<int>(i);
	}
	// drop empty top dimensions so dimension() reflects actual content
	while (!by_dim_.empty() && by_dim_.back().empty()) {
		by_dim_.pop_back();
		index_.pop_back();
	}
}

size_t simplicial_complex::count(int d) const {
	if (d < 0 || d > dimension()) return 0;
	return by_dim_[d].size();
}

const std::vector<simplex>& simplicial_complex::simplices(int d) const {
	if (d < 0 || d > dimension()) return empty_list_;
	return by_dim_[d];
}

int simplicial_complex::index_of(int d, const simplex& s) const {
	if (d < 0 || d > dimension()) return -1;
	auto it = index_[d].find(s);
	return it == index_[d].end() ? -1 : it->second;
}

size_t simplicial_complex::total_count() const {
	size_t n = 0;
	for (const auto& lst : by_dim_) n += lst.size();
	return n;
}

bool simplicial_complex::contains(const simplicial_complex& sub) const {
	for (int d = 0; d <= sub.dimension(); ++d)
		for (const simplex& s : sub.simplices(d))
			if (index_of(d, s) < 0) return false;
	return true;
}

bool simplicial_complex::is_face_closed() const {
	for (int d = 1; d <= dimension(); ++d) {
		for (const simplex& s : simplices(d)) {
			simplex face(s.size() - 1);
			for (size_t drop = 0; drop < s.size(); ++drop) {
				size_t w = 0;
				for (size_t i = 0; i < s.size(); ++i)
					if (i != drop) face[w++] = s[i];
				if (index_of(d - 1, face) < 0) return false;
			}
		}
	}
	return true;
}

gf2_matrix simplicial_complex::boundary(int r) const {
	size_t nr = count(r);
	size_t nr1 = r > 0 ? count(r - 1) : 0;
	gf2_matrix b(nr1, nr);
	if (r <= 0) return b;
	for (size_t j = 0; j < nr; ++j) {
		const simplex& s = by_dim_[r][j];
		simplex face(s.size() - 1);
		for (size_t drop = 0; drop < s.size(); ++drop) {
			size_t w = 0;
			for (size_t i = 0; i < s.size(); ++i)
				if (i != drop) face[w++] = s[i];
			int fi = index_of(r - 1, face);
			if (fi < 0)
				throw std::invalid_argument("complex: boundary of non-face-closed complex (missing " +
				                            simplex_str(face) + ")");
			b.set(static_cast<size_t>(fi), j, true);
		}
	}
	return b;
}

long long simplicial_complex::euler_characteristic() const {
	long long chi = 0;
	for (int d = 0; d <= dimension(); ++d)
		chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(count(d));
	return chi;
}

std::string grid_pos::str() const {
	switch (k) {
	case kind::neg_inf: return "-oo";
	case kind::at: return "at(" + std::to_string(i) + ")";
	case kind::mid: return "mid(" + std::to_string(i) + ")";
	default: return "+oo";
	}
}

int level_grid::index_of(const rational& v) const {
	auto it = std::lower_bound(values_.begin(), values_.end(), v);
	if (it == values_.end() || !(*it == v)) return -1;
	return static_cast<int>(it - values_.begin());
}

bool level_grid::valid(grid_pos p) const {
	int m = static_cast<int>(values_.size());
	switch (p.k) {
	case grid_pos::kind::neg_inf:
	case grid_pos::kind::pos_inf: return true;
	case grid_pos::kind::at: return p.i >= 0 && p.i < m;
	default: return p.i >= 0 && p.i < m - 1;
	}
}

grid_pos level_grid::pred(grid_pos p) const {
	int m = static_cast<int>(values_.size());
	switch (p.k) {
	case grid_pos::kind::neg_inf: return grid_pos::neg_inf();
	case grid_pos::kind::at: return p.i == 0 ? grid_pos::neg_inf() : grid_pos::mid(p.i - 1);
	case grid_pos::kind::mid: return grid_pos::at(p.i);
	default: return m == 0 ? grid_pos::neg_inf() : grid_pos::at(m - 1);
	}
}

grid_pos level_grid::succ(grid_pos p) const {
	int m = static_cast<int>(values_.size());
	switch (p.k) {
	case grid_pos::kind::neg_inf: return m == 0 ? grid_pos::pos_inf() : grid_pos::at(0);
	case grid_pos::kind::at: return p.i == m - 1 ? grid_pos::pos_inf() : grid_pos::mid(p.i);
	case grid_pos::kind::mid: return grid_pos::at(p.i + 1);
	default: return grid_pos::pos_inf();
	}
}

grid_pos level_grid::position_of(const ext_rational& v) const {
	if (v.is_neg_inf()) return grid_pos::neg_inf();
	if (v.is_pos_inf()) return grid_pos::pos_inf();
	if (values_.empty()) return grid_pos::pos_inf(); // no grid: any finite value acts as +oo side
	const rational& x = v.value();
	auto it = std::lower_bound(values_.begin(), values_.end(), x);
	if (it != values_.end() && *it == x) return grid_pos::at(static_cast<int>(it - values_.begin()));
	if (it == values_.begin()) return grid_pos::neg_inf();
	if (it == values_.end()) return grid_pos::pos_inf();
	return grid_pos::mid(static_cast<int>(it - values_.begin()) - 1);
}

std::vector<grid_pos> level_grid::finite_positions() const {
	std::vector<grid_pos> out;
	int m = static_cast<int>(values_.size());
	for (int i = 0; i < m; ++i) {
		out.push_back(grid_pos::at(i));
		if (i < m - 1) out.push_back(grid_pos::mid(i));
	}
	return out;
}

std::vector<grid_pos> level_grid::all_positions() const {
	std::vector<grid_pos> out{grid_pos::neg_inf()};
	auto fin = finite_positions();
	out.insert(out.end(), fin.begin(), fin.end());
	out.push_back(grid_pos::pos_inf());
	return out;
}

level_grid validate(const simplicial_complex& k, const vertex_function& f) {
	if (static_cast<int>(f.size()) != k.vertex_count())
		throw std::invalid_argument("validate: function assigns " + std::to_string(f.size()) +
		                            " values to " + std::to_string(k.vertex_count()) + " vertices");
	for (int d = 1; d <= k.dimension(); ++d) {
		for (const simplex& s : k.simplices(d)) {
			simplex face(s.size() - 1);
			for (size_t drop = 0; drop < s.size(); ++drop) {
				size_t w = 0;
				for (size_t i = 0; i < s.size(); ++i)
					if (i != drop) face[w++] = s[i];
				if (k.index_of(d - 1, face) < 0) {
					std::ostringstream os;
					os << "validate: simplex set is not face-closed (missing face " << simplex_str(face)
					   << ")";
					throw std::invalid_argument(os.str());
				}
			}
		}
	}
	std::set<rational> distinct;
	for (const simplex& s : k.simplices(0)) distinct.insert(f[static_cast<size_t>(s[0])]);
	return level_grid(std::vector<rational>(distinct.begin(), distinct.end()));
}

simplicial_complex level_subcomplex(const simplicial_complex& k, const vertex_function& f,
                                    level_side side, grid_pos p, const level_grid& grid) {
	if (!grid.valid(p)) throw std::invalid_argument("level_subcomplex: position outside grid");
	if (side == level_side::sub) {
		switch (p.k) {
		case grid_pos::kind::neg_inf: return k.full_subcomplex([](vertex_id) { return false; });
		case grid_pos::kind::pos_inf: return k.full_subcomplex([](vertex_id) { return true; });
		case grid_pos::kind::at:
		case grid_pos::kind::mid: {
			const rational& c = grid.value(static_cast<size_t>(p.i));
			return k.full_subcomplex([&](vertex_id v) { return f[static_cast<size_t>(v)] <= c; });
		}
		}
	}
	switch (p.k) {
	case grid_pos::kind::neg_inf: return k.full_subcomplex([](vertex_id) { return true; });
	case grid_pos::kind::pos_inf: return k.full_subcomplex([](vertex_id) { return false; });
	case grid_pos::kind::at: {
		const rational& c = grid.value(static_cast<size_t>(p.i));
		return k.full_subcomplex([&](vertex_id v) { return f[static_cast<size_t>(v)] >= c; });
	}
	default: {
		const rational& c = grid.value(static_cast<size_t>(p.i) + 1);
		return k.full_subcomplex([&](vertex_id v) { return f[static_cast<size_t>(v)] >= c; });
	}
	}
}

homology_basis::homology_basis(size_t chain_dim, gf2_matrix reps, gf2_matrix boundary_reps)
    : chain_dim_(chain_dim), reps_(std::move(reps)) {
	solver_ = gf2_solver(reps_.concat_cols(boundary_reps));
}

gf2_vector homology_basis::class_coords(const gf2_vector& cycle) const {
	auto x = solver_.solve(cycle);
	if (!x)
		throw std::logic_error("homology: chain is not a cycle of this complex modulo boundaries");
	gf2_vector coords(reps_.cols());
	for (size_t j = 0; j < reps_.cols(); ++j) coords.set(j, x->get(j));
	return coords;
}

homology_basis homology(const simplicial_complex& k, int r) {
	if (r < 0) throw std::invalid_argument("homology: negative degree");
	size_t nr = k.count(r);
	if (nr == 0) return homology_basis(0, gf2_matrix(0, 0), gf2_matrix(0, 0));
	subspace cycles = kernel_basis(k.boundary(r));
	subspace boundaries = column_space(k.boundary(r + 1));
	// Extend the boundary basis to the cycle space; the added columns
	// represent a homology basis.
	std::vector<gf2_vector> ech;
	std::vector<long long> pivots;
	auto absorb = [&](const gf2_vector& v) -> bool {
		gf2_vector red = v;
		for (size_t e = 0; e < ech.size(); ++e)
			if (red.get(static_cast<size_t>(pivots[e]))) red ^= ech[e];
		long long p = red.last_set();
		if (p < 0) return false;
		for (size_t e = 0; e < ech.size(); ++e)
			if (ech[e].get(static_cast<size_t>(p))) ech[e] ^= red;
		ech.push_back(red);
		pivots.push_back(p);
		return true;
	};
	for (size_t j = 0; j < boundaries.dim(); ++j) absorb(boundaries.basis().col(j));
	std::vector<size_t> rep_cols;
	for (size_t j = 0; j < cycles.dim(); ++j)
		if (absorb(cycles.basis().col(j))) rep_cols.push_back(j);
	gf2_matrix reps(nr, rep_cols.size());
	for (size_t c = 0; c < rep_cols.size(); ++c) reps.set_col(c, cycles.basis().col(rep_cols[c]));
	return homology_basis(nr, std::move(reps), boundaries.basis());
}

gf2_matrix induced_map(const simplicial_complex& sub, const homology_basis& sub_h,
                       const simplicial_complex& ambient, const homology_basis& ambient_h, int r) {
	gf2_matrix out(ambient_h.dim(), sub_h.dim());
	if (sub_h.dim() == 0) return out;
	const auto& sub_simps = sub.simplices(r);
	std::vector<size_t> reindex(sub_simps.size());
	for (size_t j = 0; j < sub_simps.size(); ++j) {
		int ai = ambient.index_of(r, sub_simps[j]);
		if (ai < 0) throw std::invalid_argument("induced_map: source is not a subcomplex of target");
		reindex[j] = static_cast<size_t>(ai);
	}
	for (size_t c = 0; c < sub_h.dim(); ++c) {
		gf2_vector chain(ambient.count(r));
		for (size_t j = 0; j < sub_simps.size(); ++j)
			if (sub_h.cycle_basis().get(j, c)) chain.flip(reindex[j]);
		out.set_col(c, ambient_h.class_coords(chain));
	}
	return out;
}

gf2_matrix induced_map(const simplicial_complex& sub, const simplicial_complex& ambient, int r) {
	if (!ambient.contains(sub))
		throw std::invalid_argument("induced_map: source is not a subcomplex of target");
	return induced_map(sub, homology(sub, r), ambient, homology(ambient, r), r);
}

} // namespace parhom
