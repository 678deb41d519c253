// parhom: parametrized homology of PL functions on finite simplicial
// complexes. Subcommands emit persistence diagrams, evaluate rectangle and
// box measures, run the cross-route verification checks, and generate
// deterministic random test complexes.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "parhom/io.hpp"

using namespace parhom;

namespace {

std::string read_file(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

analysis load_analysis(const std::string& path) {
	auto [k, f] = build_complex(parse_complex_document(read_file(path)));
	return analysis::build(std::move(k), std::move(f));
}

uint64_t instance_seed(uint64_t base, int index) {
	split_mix mix(base ^ (0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(index + 1)));
	return mix.next();
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"parametrized homology of PL functions on simplicial complexes"};
	app.require_subcommand(1);

	// diagram
	auto* cmd_diagram = app.add_subcommand("diagram", "emit one persistence diagram");
	std::string diagram_input, diagram_kind = "c", diagram_format = "json";
	int diagram_degree = 0;
	cmd_diagram->add_option("--input", diagram_input, "complex document (JSON)")->required();
	cmd_diagram->add_option("--kind", diagram_kind, "bar kind: c, o, co, oc");
	cmd_diagram->add_option("--degree", diagram_degree, "homology degree");
	cmd_diagram->add_option("--format", diagram_format, "json or csv");

	// measure
	auto* cmd_measure = app.add_subcommand("measure", "evaluate a rectangle or box measure");
	std::string measure_input, measure_flavor;
	int measure_degree = 0;
	std::vector<std::string> measure_box;
	cmd_measure->add_option("--input", measure_input, "complex document (JSON)")->required();
	cmd_measure
	    ->add_option("--flavor", measure_flavor,
	                 "mu-c, mu-o, mu-co, mu-oc (rectangle counts) or F, T-above, T-below (box measures)")
	    ->required();
	cmd_measure->add_option("--degree", measure_degree, "homology degree");
	cmd_measure->add_option("--box", measure_box, "four corners (x-interval then y-interval); inf/-inf allowed")
	    ->expected(4)
	    ->required();

	// verify
	auto* cmd_verify = app.add_subcommand("verify", "run the cross-route verification checks");
	std::string verify_input, verify_expect;
	bool verify_random = false;
	int verify_vertices = 8, verify_maxdim = 2, verify_count = 1;
	double verify_density = 0.5;
	uint64_t verify_seed = 0;
	cmd_verify->add_option("--input", verify_input, "complex document (JSON)");
	cmd_verify->add_option("--expect", verify_expect, "expected barcode sidecar (JSON)");
	cmd_verify->add_flag("--random", verify_random, "verify randomly generated complexes");
	cmd_verify->add_option("--vertices", verify_vertices, "random: vertex count");
	cmd_verify->add_option("--max-dim", verify_maxdim, "random: maximal simplex dimension (<= 3)");
	cmd_verify->add_option("--density", verify_density, "random: edge density in [0,1]");
	cmd_verify->add_option("--seed", verify_seed, "random: base seed");
	cmd_verify->add_option("--count", verify_count, "random: number of instances");

	// random
	auto* cmd_random = app.add_subcommand("random", "generate a random complex document");
	int random_vertices = 8, random_maxdim = 2;
	double random_density = 0.5;
	uint64_t random_seed = 0;
	cmd_random->add_option("--vertices", random_vertices, "vertex count")->required();
	cmd_random->add_option("--max-dim", random_maxdim, "maximal simplex dimension (<= 3)");
	cmd_random->add_option("--density", random_density, "edge density in [0,1]");
	cmd_random->add_option("--seed", random_seed, "seed");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		return app.exit(e) == 0 ? 0 : 2;
	}

	try {
		if (*cmd_diagram) {
			analysis a = load_analysis(diagram_input);
			diagram d = dgm(bar_kind_from_token(diagram_kind), diagram_degree, a.pyramid_bars);
			if (diagram_format == "json")
				std::cout << diagram_to_json(d);
			else if (diagram_format == "csv")
				std::cout << diagram_to_csv(d);
			else
				throw std::invalid_argument("unknown format '" + diagram_format + "'");
			return 0;
		}

		if (*cmd_measure) {
			analysis a = load_analysis(measure_input);
			ext_rational c0 = ext_rational::parse(measure_box[0]);
			ext_rational c1 = ext_rational::parse(measure_box[1]);
			ext_rational c2 = ext_rational::parse(measure_box[2]);
			ext_rational c3 = ext_rational::parse(measure_box[3]);
			long long value = 0;
			if (measure_flavor.rfind("mu-", 0) == 0) {
				rectangle rect{c0, c1, c2, c3};
				value = mu(bar_kind_from_token(measure_flavor.substr(3)), measure_degree, rect,
				           a.pyramid_bars);
			} else {
				const level_grid& grid = a.engine.grid();
				box b;
				b.x_lo = grid.position_of(c0);
				b.x_hi = grid.position_of(c1);
				b.y_lo = grid.position_of(c2);
				b.y_hi = grid.position_of(c3);
				if (measure_flavor == "F")
					b.flavor = box_flavor::image;
				else if (measure_flavor == "T-above")
					b.flavor = box_flavor::kernel_above;
				else if (measure_flavor == "T-below")
					b.flavor = box_flavor::kernel_below;
				else
					throw std::invalid_argument("unknown flavor '" + measure_flavor + "'");
				if (!(c0 < c1) || !(c2 < c3))
					throw std::invalid_argument("box: corners must satisfy lo < hi per axis");
				// corners inside one grid gap trap no grid values: measure 0
				if (b.x_lo == b.x_hi || b.y_lo == b.y_hi)
					value = 0;
				else
					value = static_cast<long long>(a.engine.box_measure(b, measure_degree));
			}
			std::cout << value << "\n";
			return 0;
		}

		if (*cmd_verify) {
			if (!verify_input.empty() == verify_random)
				throw std::invalid_argument("verify: need exactly one of --input or --random");
			verification_report total;
			std::ostringstream reports;
			reports << "[\n";
			bool first = true;
			auto run_one = [&](analysis&& a, const barcode_set* expected) {
				verification_report rep = verify_all(a, expected);
				if (!first) reports << ",\n";
				first = false;
				reports << report_to_json(rep, false);
				total.merge(rep);
			};
			if (!verify_input.empty()) {
				barcode_set expected;
				bool have_expected = false;
				if (!verify_expect.empty()) {
					expected = parse_expected_barcodes(read_file(verify_expect));
					have_expected = true;
				}
				run_one(load_analysis(verify_input), have_expected ? &expected : nullptr);
			} else {
				random_spec spec{verify_vertices, verify_maxdim, verify_density, 0};
				for (int i = 0; i < verify_count; ++i) {
					spec.seed = instance_seed(verify_seed, i);
					auto [k, f] = build_complex(random_complex(spec));
					run_one(analysis::build(std::move(k), std::move(f)), nullptr);
				}
			}
			reports << "\n]\n";
			std::cout << reports.str();
			return total.passed() ? 0 : 1;
		}

		if (*cmd_random) {
			random_spec spec{random_vertices, random_maxdim, random_density, random_seed};
			std::cout << serialize_complex_document(random_complex(spec));
			return 0;
		}
	} catch (const std::invalid_argument& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const std::exception& e) {
		std::cerr << "internal error: " << e.what() << "\n";
		return 2;
	}
	return 2;
}
