#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "parhom/complex.hpp"
#include "parhom/diagrams.hpp"
#include "parhom/equivalence.hpp"

namespace parhom {

// On-disk complex description: vertices with exact values, simplices as
// vertex-id lists. Values parse from decimal or p/q strings (or integer
// literals); binary floating point never enters.
struct complex_document {
	struct vertex {
		int id = 0;
		rational value;
	};
	std::vector<vertex> vertices;
	std::vector<simplex> simplices;
};

complex_document parse_complex_document(const std::string& text);
std::string serialize_complex_document(const complex_document& doc);
std::pair<simplicial_complex, vertex_function> build_complex(const complex_document& doc);

// Deterministic random flag complex: edges sampled at the given density,
// triangles/tetrahedra filled up to max_dimension, random small rational
// vertex values (repeats allowed).
struct random_spec {
	int vertex_count = 0;
	int max_dimension = 1; // <= 3
	double edge_density = 0.5;
	uint64_t seed = 0;
};

complex_document random_complex(const random_spec& spec);

// Deterministic value stream used by random_complex; exposed for tests.
class split_mix {
public:
	explicit split_mix(uint64_t seed) : state_(seed) {}
	uint64_t next();
	// uniform in [0, n)
	uint64_t below(uint64_t n) { return next() % n; }
	double unit(); // 53-bit uniform in [0,1)

private:
	uint64_t state_;
};

std::string diagram_to_json(const diagram& d);
std::string diagram_to_csv(const diagram& d);
std::string report_to_json(const verification_report& rep, bool pretty = true);
std::string barcodes_to_json(const barcode_set& bars);
barcode_set parse_expected_barcodes(const std::string& text);

} // namespace parhom
