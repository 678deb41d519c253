#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace parhom {

// Bit vector over the two-element field.
class gf2_vector {
public:
	gf2_vector() : size_(0) {}
	explicit gf2_vector(size_t n) : size_(n), words_((n + 63) / 64, 0) {}

	size_t size() const { return size_; }
	bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
	void set(size_t i, bool v) {
		uint64_t mask = uint64_t(1) << (i & 63);
		if (v)
			words_[i >> 6] |= mask;
		else
			words_[i >> 6] &= ~mask;
	}
	void flip(size_t i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }

	gf2_vector& operator^=(const gf2_vector& o) {
		for (size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
		return *this;
	}

	bool any() const {
		for (uint64_t w : words_)
			if (w) return true;
		return false;
	}

	// Index of the highest set bit, -1 if zero. Used as the pivot in column
	// reductions.
	long long last_set() const;
	size_t popcount() const;

	bool operator==(const gf2_vector&) const = default;

private:
	size_t size_;
	std::vector<uint64_t> words_;
};

// Dense matrix over GF(2); entries live in a row-major bit array.
class gf2_matrix {
public:
	gf2_matrix() : rows_(0), cols_(0), wpr_(0) {}
	gf2_matrix(size_t rows, size_t cols)
	    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), bits_(rows * wpr_, 0) {}

	static gf2_matrix identity(size_t n);
	// Test convenience: row-major 0/1 literals.
	static gf2_matrix from_rows(const std::vector<std::vector<int>>& rows);

	size_t rows() const { return rows_; }
	size_t cols() const { return cols_; }

	bool get(size_t i, size_t j) const { return (bits_[i * wpr_ + (j >> 6)] >> (j & 63)) & 1u; }
	void set(size_t i, size_t j, bool v) {
		uint64_t mask = uint64_t(1) << (j & 63);
		if (v)
			bits_[i * wpr_ + (j >> 6)] |= mask;
		else
			bits_[i * wpr_ + (j >> 6)] &= ~mask;
	}

	gf2_vector row(size_t i) const;
	gf2_vector col(size_t j) const;
	void set_col(size_t j, const gf2_vector& v);

	void xor_row_into(size_t src, size_t dst); // row[dst] ^= row[src]

	gf2_matrix transpose() const;
	gf2_matrix operator*(const gf2_matrix& o) const;
	gf2_vector apply(const gf2_vector& x) const; // m * x
	gf2_matrix concat_cols(const gf2_matrix& o) const;

	bool operator==(const gf2_matrix&) const = default;

private:
	size_t rows_, cols_, wpr_;
	std::vector<uint64_t> bits_;
};

size_t rank(const gf2_matrix& m);

// Reduced column echelon form of a generating matrix, retaining the column
// transform so that coordinates in the original generators can be recovered.
class gf2_solver {
public:
	gf2_solver() = default;
	explicit gf2_solver(const gf2_matrix& m);

	size_t rank() const { return rank_; }
	// x with m*x = b, if b lies in the column space. Unique when the
	// generators are independent.
	std::optional<gf2_vector> solve(const gf2_vector& b) const;
	bool in_column_space(const gf2_vector& b) const;

private:
	size_t n_ = 0, k_ = 0, rank_ = 0;
	std::vector<gf2_vector> echelon_;   // reduced columns, distinct pivots
	std::vector<gf2_vector> transform_; // original-coordinate preimages of echelon_
	std::vector<long long> pivots_;     // pivot row per echelon column
};

// A subspace of F_2^n given by an independent column basis.
class subspace {
public:
	subspace() : ambient_(0) {}

	static subspace zero(size_t ambient);
	static subspace full(size_t ambient);
	// Spans the given columns, pruning dependent ones (keeps the earliest
	// independent subset, so the result is deterministic).
	static subspace span(size_t ambient, const gf2_matrix& vectors);

	size_t ambient_dim() const { return ambient_; }
	size_t dim() const { return basis_.cols(); }
	const gf2_matrix& basis() const { return basis_; }

	bool contains(const gf2_vector& v) const;
	bool contains(const subspace& other) const;
	bool same_space(const subspace& other) const; // double containment

private:
	size_t ambient_;
	gf2_matrix basis_;             // ambient_ x dim, independent columns
	std::vector<gf2_vector> ech_;  // reduced echelon of the basis, for membership
	std::vector<long long> pivots_;
	void rebuild_echelon();
	friend subspace intersect(const subspace&, const subspace&);
	friend subspace subspace_sum(const subspace&, const subspace&);
};

subspace kernel_basis(const gf2_matrix& m);
subspace column_space(const gf2_matrix& m);
subspace intersect(const subspace& u, const subspace& v);
subspace subspace_sum(const subspace& u, const subspace& v);
// dim u - dim v; every basis vector of v must lie in u.
size_t quotient_dim(const subspace& u, const subspace& v);

} // namespace parhom
