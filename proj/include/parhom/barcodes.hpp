#pragma once

#include <map>
#include <string>
#include <vector>

#include "parhom/complex.hpp"
#include "parhom/measures.hpp"

namespace parhom {

enum class bar_kind { closed, open, closed_open, open_closed };

std::string bar_kind_name(bar_kind k);   // "closed", "open", ...
std::string bar_kind_token(bar_kind k);  // "c", "o", "co", "oc"
bar_kind bar_kind_from_token(const std::string& tok);

// One decorated interval: closed [l,r] (l <= r), open (l,r), closed-open
// [l,r) or open-closed (l,r] (all l < r).
struct decorated_interval {
	int degree = 0;
	bar_kind kind = bar_kind::closed;
	rational left, right;
	std::string str() const;
};

// Multiset of decorated intervals organized per (degree, kind).
class barcode_set {
public:
	using point_counts = std::map<std::pair<rational, rational>, long long>;

	void add(int degree, bar_kind kind, const rational& left, const rational& right,
	         long long mult = 1);
	const point_counts& bars(int degree, bar_kind kind) const;
	long long total() const;
	int max_degree() const;
	bool operator==(const barcode_set&) const = default;

	template <typename Fn>
	void for_each(Fn fn) const {
		for (const auto& [key, pts] : bars_)
			for (const auto& [lr, mult] : pts)
				fn(decorated_interval{key.first, key.second, lr.first, lr.second}, mult);
	}

private:
	std::map<std::pair<int, bar_kind>, point_counts> bars_;
	static const point_counts empty_;
};

// Birth/death pairs of the extended filtration, grouped by how the paired
// columns sit relative to the cone: ordinary (both ascending), relative
// (both coned), extended (spanning).
struct extended_pairs {
	using pair_counts = std::map<std::pair<rational, rational>, long long>;
	std::map<int, pair_counts> ord; // birth < death
	std::map<int, pair_counts> rel; // birth > death
	std::map<int, pair_counts> ext; // any order

	void add(std::map<int, pair_counts>& tbl, int degree, const rational& b, const rational& d);
	bool operator==(const extended_pairs&) const = default;
};

// Lower-star total order: by max vertex value, then dimension, then
// lexicographic vertex tuple. Deterministic for tied values.
std::vector<simplex> filtration_order(const simplicial_complex& k, const vertex_function& f);

// Standard column reduction over the ascending lower-star filtration
// followed by the upper-star coning of the whole complex over a dummy apex.
// Zero-persistence ordinary/relative pairs are discarded.
extended_pairs extended_persistence(const simplicial_complex& k, const vertex_function& f);

// Pyramid dictionary: ext (b <= d) -> closed r-bar [b,d]; ext (b > d) ->
// open (r-1)-bar (d,b); ord -> closed-open r-bar [b,d); rel -> open-closed
// (r-1)-bar (d,b].
barcode_set decode_pyramid(const extended_pairs& pairs);

// Reads the point-mass supports as a barcode definition: image masses give
// closed bars above the diagonal and open bars (one degree down) below it;
// kernel masses give closed-open bars above and open-closed bars below.
// Index of each vector is the mass degree.
barcode_set barcodes_from_measures(const std::vector<point_mass_map>& image_masses,
                                   const std::vector<point_mass_map>& kernel_masses);

// Convenience: full measure-route barcodes of an engine (degrees 0..dim+1).
barcode_set measure_route_barcodes(const measure_engine& eng);

} // namespace parhom
