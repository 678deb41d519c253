#include "parhom/gf2.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace parhom {

long long gf2_vector::last_set() const {
	for (size_t w = words_.size(); w-- > 0;) {
		if (words_[w]) return static_cast<long long>(w * 64 + (63 - std::countl_zero(words_[w])));
	}
	return -1;
}

size_t gf2_vector::popcount() const {
	size_t c = 0;
	for (uint64_t w : words_) c += static_cast<size_t>(std::popcount(w));
	return c;
}

gf2_matrix gf2_matrix::identity(size_t n) {
	gf2_matrix m(n, n);
	for (size_t i = 0; i < n; ++i) m.set(i, i, true);
	return m;
}

gf2_matrix gf2_matrix::from_rows(const std::vector<std::vector<int>>& rows) {
	size_t r = rows.size();
	size_t c = r == 0 ? 0 : rows[0].size();
	gf2_matrix m(r, c);
	for (size_t i = 0; i < r; ++i) {
		if (rows[i].size() != c) throw std::invalid_argument("gf2_matrix: ragged rows");
		for (size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j] % 2 != 0);
	}
	return m;
}

gf2_vector gf2_matrix::row(size_t i) const {
	gf2_vector v(cols_);
	for (size_t j = 0; j < cols_; ++j)
		if (get(i, j)) v.set(j, true);
	return v;
}

gf2_vector gf2_matrix::col(size_t j) const {
	gf2_vector v(rows_);
	for (size_t i = 0; i < rows_; ++i)
		if (get(i, j)) v.set(i, true);
	return v;
}

void gf2_matrix::set_col(size_t j, const gf2_vector& v) {
	for (size_t i = 0; i < rows_; ++i) set(i, j, v.get(i));
}

void gf2_matrix::xor_row_into(size_t src, size_t dst) {
	for (size_t w = 0; w < wpr_; ++w) bits_[dst * wpr_ + w] ^= bits_[src * wpr_ + w];
}

gf2_matrix gf2_matrix::transpose() const {
	gf2_matrix t(cols_, rows_);
	for (size_t i = 0; i < rows_; ++i)
		for (size_t j = 0; j < cols_; ++j)
			if (get(i, j)) t.set(j, i, true);
	return t;
}

gf2_matrix gf2_matrix::operator*(const gf2_matrix& o) const {
	if (cols_ != o.rows_) throw std::invalid_argument("gf2_matrix: shape mismatch in product");
	gf2_matrix out(rows_, o.cols_);
	for (size_t i = 0; i < rows_; ++i) {
		for (size_t k = 0; k < cols_; ++k) {
			if (!get(i, k)) continue;
			for (size_t w = 0; w < o.wpr_; ++w)
				out.bits_[i * out.wpr_ + w] ^= o.bits_[k * o.wpr_ + w];
		}
	}
	return out;
}

gf2_vector gf2_matrix::apply(const gf2_vector& x) const {
	if (x.size() != cols_) throw std::invalid_argument("gf2_matrix: vector length mismatch");
	gf2_vector out(rows_);
	for (size_t i = 0; i < rows_; ++i) {
		size_t bits = 0;
		for (size_t j = 0; j < cols_; ++j)
			if (get(i, j) && x.get(j)) ++bits;
		if (bits & 1) out.set(i, true);
	}
	return out;
}

gf2_matrix gf2_matrix::concat_cols(const gf2_matrix& o) const {
	if (rows_ != o.rows_) throw std::invalid_argument("gf2_matrix: row mismatch in concat");
	gf2_matrix out(rows_, cols_ + o.cols_);
	for (size_t i = 0; i < rows_; ++i) {
		for (size_t j = 0; j < cols_; ++j) out.set(i, j, get(i, j));
		for (size_t j = 0; j < o.cols_; ++j) out.set(i, cols_ + j, o.get(i, j));
	}
	return out;
}

size_t rank(const gf2_matrix& m) {
	gf2_solver s(m);
	return s.rank();
}

gf2_solver::gf2_solver(const gf2_matrix& m) : n_(m.rows()), k_(m.cols()) {
	echelon_.reserve(k_);
	transform_.reserve(k_);
	for (size_t j = 0; j < k_; ++j) {
		gf2_vector col = m.col(j);
		gf2_vector pre(k_);
		pre.set(j, true);
		// Reduce against existing pivots.
		for (size_t e = 0; e < echelon_.size(); ++e) {
			if (pivots_[e] >= 0 && col.get(static_cast<size_t>(pivots_[e]))) {
				col ^= echelon_[e];
				pre ^= transform_[e];
			}
		}
		long long p = col.last_set();
		if (p < 0) continue; // dependent column
		// Back-eliminate the new pivot from earlier echelon columns.
		for (size_t e = 0; e < echelon_.size(); ++e) {
			if (echelon_[e].get(static_cast<size_t>(p))) {
				echelon_[e] ^= col;
				transform_[e] ^= pre;
			}
		}
		echelon_.push_back(col);
		transform_.push_back(pre);
		pivots_.push_back(p);
		++rank_;
	}
}

std::optional<gf2_vector> gf2_solver::solve(const gf2_vector& b) const {
	if (b.size() != n_) throw std::invalid_argument("gf2_solver: vector length mismatch");
	gf2_vector r = b;
	gf2_vector x(k_);
	for (size_t e = 0; e < echelon_.size(); ++e) {
		if (r.get(static_cast<size_t>(pivots_[e]))) {
			r ^= echelon_[e];
			x ^= transform_[e];
		}
	}
	if (r.any()) return std::nullopt;
	return x;
}

bool gf2_solver::in_column_space(const gf2_vector& b) const {
	gf2_vector r = b;
	for (size_t e = 0; e < echelon_.size(); ++e) {
		if (r.get(static_cast<size_t>(pivots_[e]))) r ^= echelon_[e];
	}
	return !r.any();
}

void subspace::rebuild_echelon() {
	ech_.clear();
	pivots_.clear();
	for (size_t j = 0; j < basis_.cols(); ++j) {
		gf2_vector col = basis_.col(j);
		for (size_t e = 0; e < ech_.size(); ++e)
			if (col.get(static_cast<size_t>(pivots_[e]))) col ^= ech_[e];
		long long p = col.last_set();
		if (p < 0) throw std::logic_error("subspace: dependent basis column");
		for (size_t e = 0; e < ech_.size(); ++e)
			if (ech_[e].get(static_cast<size_t>(p))) ech_[e] ^= col;
		ech_.push_back(col);
		pivots_.push_back(p);
	}
}

subspace subspace::zero(size_t ambient) {
	subspace s;
	s.ambient_ = ambient;
	s.basis_ = gf2_matrix(ambient, 0);
	return s;
}

subspace subspace::full(size_t ambient) {
	subspace s;
	s.ambient_ = ambient;
	s.basis_ = gf2_matrix::identity(ambient);
	s.rebuild_echelon();
	return s;
}

subspace subspace::span(size_t ambient, const gf2_matrix& vectors) {
	if (vectors.rows() != ambient)
		throw std::invalid_argument("subspace: vector length differs from ambient dimension");
	subspace s;
	s.ambient_ = ambient;
	std::vector<size_t> keep;
	std::vector<gf2_vector> ech;
	std::vector<long long> pivots;
	for (size_t j = 0; j < vectors.cols(); ++j) {
		gf2_vector col = vectors.col(j);
		for (size_t e = 0; e < ech.size(); ++e)
			if (pivots[e] >= 0 && col.get(static_cast<size_t>(pivots[e]))) col ^= ech[e];
		long long p = col.last_set();
		if (p < 0) continue;
		for (size_t e = 0; e < ech.size(); ++e)
			if (ech[e].get(static_cast<size_t>(p))) ech[e] ^= col;
		ech.push_back(col);
		pivots.push_back(p);
		keep.push_back(j);
	}
	s.basis_ = gf2_matrix(ambient, keep.size());
	for (size_t c = 0; c < keep.size(); ++c) s.basis_.set_col(c, vectors.col(keep[c]));
	s.rebuild_echelon();
	return s;
}

bool subspace::contains(const gf2_vector& v) const {
	if (v.size() != ambient_) throw std::invalid_argument("subspace: ambient dimension mismatch");
	gf2_vector r = v;
	for (size_t e = 0; e < ech_.size(); ++e)
		if (r.get(static_cast<size_t>(pivots_[e]))) r ^= ech_[e];
	return !r.any();
}

bool subspace::contains(const subspace& other) const {
	if (other.ambient_ != ambient_)
		throw std::invalid_argument("subspace: ambient dimension mismatch");
	for (size_t j = 0; j < other.basis_.cols(); ++j)
		if (!contains(other.basis_.col(j))) return false;
	return true;
}

bool subspace::same_space(const subspace& other) const {
	return contains(other) && other.contains(*this);
}

subspace kernel_basis(const gf2_matrix& m) {
	// Row-reduce a copy, track pivot columns, then back-substitute each free
	// column into a kernel vector.
	size_t rows = m.rows(), cols = m.cols();
	gf2_matrix a = m;
	std::vector<long long> pivot_col_of_row(rows, -1);
	std::vector<long long> pivot_row_of_col(cols, -1);
	size_t r = 0;
	for (size_t c = 0; c < cols && r < rows; ++c) {
		size_t sel = r;
		while (sel < rows && !a.get(sel, c)) ++sel;
		if (sel == rows) continue;
		if (sel != r) {
			// swap rows sel and r
			for (size_t j = 0; j < cols; ++j) {
				bool t = a.get(sel, j);
				a.set(sel, j, a.get(r, j));
				a.set(r, j, t);
			}
		}
		for (size_t i = 0; i < rows; ++i) {
			if (i != r && a.get(i, c)) a.xor_row_into(r, i);
		}
		pivot_col_of_row[r] = static_cast<long long>(c);
		pivot_row_of_col[c] = static_cast<long long>(r);
		++r;
	}
	std::vector<size_t> free_cols;
	for (size_t c = 0; c < cols; ++c)
		if (pivot_row_of_col[c] < 0) free_cols.push_back(c);
	gf2_matrix basis(cols, free_cols.size());
	for (size_t k = 0; k < free_cols.size(); ++k) {
		size_t f = free_cols[k];
		basis.set(f, k, true);
		for (size_t c = 0; c < cols; ++c) {
			long long pr = pivot_row_of_col[c];
			if (pr >= 0 && a.get(static_cast<size_t>(pr), f)) basis.set(c, k, true);
		}
	}
	return subspace::span(cols, basis);
}

subspace column_space(const gf2_matrix& m) {
	return subspace::span(m.rows(), m);
}

subspace intersect(const subspace& u, const subspace& v) {
	if (u.ambient_dim() != v.ambient_dim())
		throw std::invalid_argument("intersect: ambient dimension mismatch");
	size_t n = u.ambient_dim();
	if (u.dim() == 0 || v.dim() == 0) return subspace::zero(n);
	// Kernel vectors (x, y) of [U | V] satisfy Ux = Vy, which spans u ∩ v.
	gf2_matrix cat = u.basis().concat_cols(v.basis());
	subspace ker = kernel_basis(cat);
	gf2_matrix gens(n, ker.dim());
	for (size_t j = 0; j < ker.dim(); ++j) {
		gf2_vector kv = ker.basis().col(j);
		gf2_vector x(u.dim());
		for (size_t i = 0; i < u.dim(); ++i) x.set(i, kv.get(i));
		gens.set_col(j, u.basis().apply(x));
	}
	return subspace::span(n, gens);
}

subspace subspace_sum(const subspace& u, const subspace& v) {
	if (u.ambient_dim() != v.ambient_dim())
		throw std::invalid_argument("sum: ambient dimension mismatch");
	return subspace::span(u.ambient_dim(), u.basis().concat_cols(v.basis()));
}

size_t quotient_dim(const subspace& u, const subspace& v) {
	if (u.ambient_dim() != v.ambient_dim())
		throw std::invalid_argument("quotient_dim: ambient dimension mismatch");
	for (size_t j = 0; j < v.dim(); ++j) {
		if (!u.contains(v.basis().col(j))) {
			std::ostringstream os;
			os << "quotient_dim: denominator vector " << j << " (bits";
			for (size_t i = 0; i < v.ambient_dim(); ++i)
				if (v.basis().get(i, j)) os << " " << i;
			os << ") is not contained in the numerator space";
			throw std::invalid_argument(os.str());
		}
	}
	return u.dim() - v.dim();
}

} // namespace parhom
