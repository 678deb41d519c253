#pragma once

#include <map>

#include "parhom/barcodes.hpp"
#include "parhom/rational.hpp"

namespace parhom {

// Rectangle [a,b] x [c,d] with a < b < c < d in the extended order; a and d
// may be infinite.
struct rectangle {
	ext_rational a, b, c, d;
	void check() const; // throws on a malformed rectangle
	std::string str() const;
};

// Persistence diagram for one bar kind and degree: multiset of (x, y) points
// with x < y.
struct diagram {
	bar_kind kind = bar_kind::closed;
	int degree = 0;
	std::map<std::pair<rational, rational>, long long> points;

	long long total() const {
		long long t = 0;
		for (const auto& [p, m] : points) t += m;
		return t;
	}
	bool operator==(const diagram&) const = default;
};

// Number of bars of the given kind and degree that contain [b,c] and are
// contained in (a,d). For closed left endpoints this reads a < l <= b, for
// open left endpoints a <= l < b; right endpoints mirror.
long long mu(bar_kind kind, int degree, const rectangle& rect, const barcode_set& bars);

// Diagram of all bars with left < right; diagonal closed bars are reported
// separately by diagonal_masses.
diagram dgm(bar_kind kind, int degree, const barcode_set& bars);

// Multiplicities of the closed singleton bars [a,a] in one degree.
std::map<rational, long long> diagonal_masses(int degree, const barcode_set& bars);

} // namespace parhom
