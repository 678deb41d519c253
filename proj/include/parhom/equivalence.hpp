#pragma once

#include <map>
#include <string>
#include <vector>

#include "parhom/diagrams.hpp"
#include "parhom/measures.hpp"
#include "parhom/zigzag.hpp"

namespace parhom {

struct check_record {
	std::string check;
	int degree = 0;
	std::string location;
	long long lhs = 0, rhs = 0;
	bool pass = true;
};

// Outcome ledger of a verification run. Every evaluated identity is tallied
// per check id; mismatching evaluations keep their full records. Alternative
// readings of the identities (undecorated row conditions, shifted degree
// indices) are tallied separately as informational and never affect
// passed().
class verification_report {
public:
	struct tally {
		long long evaluated = 0;
		long long failed = 0;
	};

	void add(const std::string& check, int degree, long long lhs, long long rhs,
	         const std::string& location);
	void add_info(const std::string& check, int degree, long long lhs, long long rhs,
	              const std::string& location);
	void merge(const verification_report& o);

	bool passed() const;
	const std::map<std::string, tally>& tallies() const { return tallies_; }
	const std::map<std::string, tally>& info_tallies() const { return info_tallies_; }
	const std::vector<check_record>& failures() const { return failures_; }
	const std::vector<check_record>& info_failures() const { return info_failures_; }
	long long total_evaluated() const;

	static constexpr size_t max_kept_failures = 1000;

private:
	std::map<std::string, tally> tallies_, info_tallies_;
	std::vector<check_record> failures_, info_failures_;
};

// Everything the checks need for one complex with one vertex function,
// computed once: the measure engine, the reduction-route pairs and bars, the
// measure-route bars, and the point-mass supports per degree.
struct analysis {
	measure_engine engine;
	extended_pairs pairs;
	barcode_set pyramid_bars;
	barcode_set measure_bars;
	std::vector<point_mass_map> image_masses, kernel_masses; // index = degree, 0..dim+1

	static analysis build(simplicial_complex k, vertex_function f);
	int mass_degrees() const { return static_cast<int>(image_masses.size()); }
};

// Coordinate swap (x,y) -> (y,x); an involution.
diagram reflect(const diagram& d);
point_mass_map reflect(const point_mass_map& m);

// Diagrams of the four bar kinds versus the point-mass supports: closed
// diagrams match the image masses above the diagonal, open diagrams the
// reflected image masses one degree up from below the diagonal, closed-open
// and open-closed diagrams the kernel masses above resp. reflected below.
// `bars` chooses the barcode route the diagrams are built from.
verification_report check_point_mass_diagrams(const analysis& a, const barcode_set& bars,
                                              const std::string& suffix = "");
verification_report check_point_mass_diagrams(const analysis& a);

// Rectangle counts of bars versus four-corner box measures, for every
// rectangle with corners on the grid-and-midpoint lattice (plus infinite
// outer corners) and every degree.
verification_report check_rectangle_measures(const analysis& a);

// Sublevel/superlevel homology dimensions, persistent image dimensions, and
// the image/kernel dimension and point-mass identities at every grid value
// pair and degree, all against the barcode counts.
verification_report check_dimension_formulas(const analysis& a);

// Triple route agreement plus decomposition validity of the zigzag oracle;
// only meaningful for complexes of dimension <= 1 (empty report otherwise).
verification_report check_zigzag_agreement(const analysis& a);

// Everything cmd_verify runs, including the zigzag checks when applicable
// and an optional comparison against externally supplied expected barcodes.
verification_report verify_all(const analysis& a, const barcode_set* expected_bars = nullptr);

verification_report check_point_mass_diagrams(const simplicial_complex& k, const vertex_function& f);
verification_report check_rectangle_measures(const simplicial_complex& k, const vertex_function& f);
verification_report check_dimension_formulas(const simplicial_complex& k, const vertex_function& f);

// Exact bottleneck distance between diagrams of the same kind and degree,
// with matching to the diagonal allowed; both diagrams must carry at most 24
// points counted with multiplicity.
rational bottleneck(const diagram& d1, const diagram& d2);

} // namespace parhom
