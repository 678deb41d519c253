#include "parhom/diagrams.hpp"

#include <stdexcept>

namespace parhom {

void rectangle::check() const {
	if (!(a < b && b < c && c < d))
		throw std::invalid_argument("rectangle: corners must satisfy a < b < c < d, got " + str());
}

std::string rectangle::str() const {
	return "[" + a.str() + "," + b.str() + "]x[" + c.str() + "," + d.str() + "]";
}

long long mu(bar_kind kind, int degree, const rectangle& rect, const barcode_set& bars) {
	rect.check();
	bool left_closed = kind == bar_kind::closed || kind == bar_kind::closed_open;
	bool right_closed = kind == bar_kind::closed || kind == bar_kind::open_closed;
	long long count = 0;
	for (const auto& [lr, mult] : bars.bars(degree, kind)) {
		const ext_rational l(lr.first), r(lr.second);
		// [b,c] subset of I
		bool covers = (left_closed ? l <= rect.b : l < rect.b) &&
		              (right_closed ? rect.c <= r : rect.c < r);
		// I subset of (a,d)
		bool inside = (left_closed ? rect.a < l : rect.a <= l) &&
		              (right_closed ? r < rect.d : r <= rect.d);
		if (covers && inside) count += mult;
	}
	return count;
}

diagram dgm(bar_kind kind, int degree, const barcode_set& bars) {
	diagram out;
	out.kind = kind;
	out.degree = degree;
	for (const auto& [lr, mult] : bars.bars(degree, kind))
		if (lr.first < lr.second) out.points[lr] += mult;
	return out;
}

std::map<rational, long long> diagonal_masses(int degree, const barcode_set& bars) {
	std::map<rational, long long> out;
	for (const auto& [lr, mult] : bars.bars(degree, bar_kind::closed))
		if (lr.first == lr.second) out[lr.first] += mult;
	return out;
}

} // namespace parhom
