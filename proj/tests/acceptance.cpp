// Acceptance suite: each criterion prints exactly one PASS/FAIL line (plus
// indented informational lines where a criterion reports empirical findings).
// Run all criteria with no arguments, or a single one with --criterion N.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "json.hpp"
#include "parhom/equivalence.hpp"
#include "parhom/io.hpp"

using namespace parhom;

namespace {

std::string g_cli_path;

struct corpus_item {
	simplicial_complex k;
	vertex_function f;
};

std::vector<random_spec> corpus_specs(int count, int max_dim_cap, uint64_t base_seed) {
	std::vector<random_spec> specs;
	for (int i = 0; i < count; ++i) {
		random_spec s;
		s.vertex_count = 4 + i % 7; // 4..10
		s.max_dimension = max_dim_cap == 1 ? 1 : i % (max_dim_cap + 1);
		s.edge_density = 0.3 + 0.1 * (i % 7);
		s.seed = base_seed + static_cast<uint64_t>(i);
		specs.push_back(s);
	}
	return specs;
}

corpus_item make_item(const random_spec& spec) {
	auto [k, f] = build_complex(random_complex(spec));
	return {std::move(k), std::move(f)};
}

struct cmd_result {
	int exit_code = -1;
	std::string output;
};

cmd_result run_cmd(const std::string& cmd) {
	cmd_result res;
	FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
	if (!pipe) return res;
	char buf[4096];
	size_t got;
	while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, got);
	int status = pclose(pipe);
	res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
	return res;
}

std::string fixture_cycle4() {
	complex_document doc;
	doc.vertices = {{0, rational(0)}, {1, rational(1)}, {2, rational(2)}, {3, rational(1)}};
	doc.simplices = {{0}, {1}, {2}, {3}, {0, 1}, {1, 2}, {2, 3}, {0, 3}};
	return serialize_complex_document(doc);
}

// ---- criteria ----------------------------------------------------------

bool criterion_route_agreement(std::string& detail) {
	auto start = std::chrono::steady_clock::now();
	long long instances = 0, bars = 0;
	for (const random_spec& spec : corpus_specs(200, 3, 123456)) {
		corpus_item item = make_item(spec);
		analysis a = analysis::build(std::move(item.k), std::move(item.f));
		if (!(a.pyramid_bars == a.measure_bars)) {
			detail = "route mismatch at seed " + std::to_string(spec.seed);
			return false;
		}
		++instances;
		bars += a.pyramid_bars.total();
	}
	auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
	std::ostringstream os;
	os << instances << " complexes, " << bars << " bars, " << secs << " s";
	detail = os.str();
	return secs < 60.0;
}

bool criterion_rectangle_measures(std::string& detail, std::vector<std::string>& info_lines) {
	verification_report total;
	for (const random_spec& spec : corpus_specs(200, 3, 123456)) {
		corpus_item item = make_item(spec);
		analysis a = analysis::build(std::move(item.k), std::move(item.f));
		verification_report rep = check_rectangle_measures(a);
		total.merge(rep);
		if (!rep.passed()) {
			detail = "corrected-dictionary mismatch at seed " + std::to_string(spec.seed);
			return false;
		}
	}
	std::ostringstream os;
	os << total.total_evaluated() << " rectangle identities";
	detail = os.str();
	for (const auto& [check, t] : total.info_tallies()) {
		std::ostringstream line;
		line << check << ": " << (t.failed == 0 ? "holds" : "fails") << " (" << t.failed << "/"
		     << t.evaluated << " mismatches)";
		info_lines.push_back(line.str());
	}
	return true;
}

bool criterion_dimension_formulas(std::string& detail, std::vector<std::string>& info_lines) {
	verification_report total;
	for (const random_spec& spec : corpus_specs(200, 3, 123456)) {
		corpus_item item = make_item(spec);
		analysis a = analysis::build(std::move(item.k), std::move(item.f));
		verification_report rep = check_dimension_formulas(a);
		rep.merge(check_point_mass_diagrams(a));
		total.merge(rep);
		if (!rep.passed()) {
			detail = "formula mismatch at seed " + std::to_string(spec.seed);
			return false;
		}
	}
	detail = std::to_string(total.total_evaluated()) + " count/dimension identities";
	for (const auto& [check, t] : total.info_tallies()) {
		std::ostringstream line;
		line << check << ": " << (t.failed == 0 ? "holds" : "fails") << " (" << t.failed << "/"
		     << t.evaluated << " mismatches)";
		info_lines.push_back(line.str());
	}
	return true;
}

bool criterion_triple_agreement(std::string& detail) {
	long long instances = 0;
	for (const random_spec& spec : corpus_specs(200, 1, 987654)) {
		corpus_item item = make_item(spec);
		analysis a = analysis::build(std::move(item.k), std::move(item.f));
		verification_report rep = check_zigzag_agreement(a);
		if (!rep.passed()) {
			detail = "zigzag disagreement at seed " + std::to_string(spec.seed);
			return false;
		}
		++instances;
	}
	detail = std::to_string(instances) + " graphs, three routes each";
	return true;
}

bool criterion_fixtures(std::string& detail) {
	{
		analysis a = analysis::build(simplicial_complex(1, {{0}}), vertex_function({rational(5)}));
		barcode_set want;
		want.add(0, bar_kind::closed, rational(5), rational(5));
		if (!(a.pyramid_bars == want) || !(a.measure_bars == want)) {
			detail = "point fixture";
			return false;
		}
	}
	{
		analysis a = analysis::build(simplicial_complex(2, {{0}, {1}, {0, 1}}),
		                             vertex_function({rational(0), rational(1)}));
		barcode_set want;
		want.add(0, bar_kind::closed, rational(0), rational(1));
		if (!(a.pyramid_bars == want) || !(a.measure_bars == want)) {
			detail = "edge fixture";
			return false;
		}
	}
	{
		analysis a = analysis::build(simplicial_complex(3, {{0}, {1}, {2}, {0, 1}, {1, 2}}),
		                             vertex_function({rational(0), rational(2), rational(1)}));
		barcode_set want;
		want.add(0, bar_kind::closed, rational(0), rational(2));
		want.add(0, bar_kind::closed_open, rational(1), rational(2));
		if (!(a.pyramid_bars == want) || !(a.measure_bars == want)) {
			detail = "v-path fixture";
			return false;
		}
	}
	{
		analysis a = analysis::build(
		    simplicial_complex(4, {{0}, {1}, {2}, {3}, {0, 1}, {1, 2}, {2, 3}, {0, 3}}),
		    vertex_function({rational(0), rational(1), rational(2), rational(1)}));
		barcode_set want;
		want.add(0, bar_kind::closed, rational(0), rational(2));
		want.add(0, bar_kind::open, rational(0), rational(2));
		if (!(a.pyramid_bars == want) || !(a.measure_bars == want)) {
			detail = "4-cycle barcodes";
			return false;
		}
		// H_1 barcodes empty; the essential loop sits in the degree-1 image
		// masses below the diagonal
		for (bar_kind kind : {bar_kind::closed, bar_kind::open, bar_kind::closed_open,
		                      bar_kind::open_closed})
			if (!a.pyramid_bars.bars(1, kind).empty()) {
				detail = "4-cycle degree-1 barcodes not empty";
				return false;
			}
		if (a.image_masses[1].at(rational(2), rational(0)) != 1) {
			detail = "4-cycle degree-1 image mass";
			return false;
		}
	}
	detail = "point, edge, v-path, 4-cycle";
	return true;
}

bool criterion_measure_axioms(std::string& detail) {
	split_mix rng(20240);
	long long boxes = 0, splits = 0, quotients = 0;
	int complex_idx = 0;
	auto specs = corpus_specs(60, 3, 55555);
	while (boxes < 10000 || quotients < 500) {
		corpus_item item = make_item(specs[static_cast<size_t>(complex_idx) % specs.size()]);
		++complex_idx;
		measure_engine eng(std::move(item.k), std::move(item.f));
		auto positions = eng.grid().all_positions();
		size_t np = positions.size();
		if (np < 4) continue;
		for (int trial = 0; trial < 300 && (boxes < 10000 || quotients < 500); ++trial) {
			int flavor_pick = static_cast<int>(rng.below(3));
			size_t i0 = rng.below(np), i1 = rng.below(np), i2 = rng.below(np), i3 = rng.below(np);
			size_t xl = std::min(i0, i1), xh = std::max(i0, i1);
			size_t yl = std::min(i2, i3), yh = std::max(i2, i3);
			if (xl == xh || yl == yh) continue;
			box b{positions[xl], positions[xh], positions[yl], positions[yh], box_flavor::image};
			if (flavor_pick == 1) {
				b.flavor = box_flavor::kernel_above;
				if (!(b.x_hi <= b.y_lo)) continue;
			}
			if (flavor_pick == 2) {
				b.flavor = box_flavor::kernel_below;
				if (!(b.y_hi <= b.x_lo)) continue;
			}
			int r = static_cast<int>(rng.below(static_cast<uint64_t>(eng.max_degree()) + 1));
			size_t whole = eng.box_measure(b, r); // size_t: negativity throws inside
			++boxes;
			// one split per axis when an interior lattice position exists
			if (xh - xl > 1) {
				size_t cut = xl + 1 + rng.below(xh - xl - 1);
				box left = b, right = b;
				left.x_hi = positions[cut];
				right.x_lo = positions[cut];
				bool ok_l = left.flavor != box_flavor::kernel_above || left.x_hi <= left.y_lo;
				bool ok_r = right.flavor != box_flavor::kernel_below || right.y_hi <= right.x_lo;
				if (ok_l && ok_r) {
					++splits;
					if (eng.box_measure(left, r) + eng.box_measure(right, r) != whole) {
						detail = "split additivity failed (x axis)";
						return false;
					}
				}
			}
			if (yh - yl > 1) {
				size_t cut = yl + 1 + rng.below(yh - yl - 1);
				box low = b, high = b;
				low.y_hi = positions[cut];
				high.y_lo = positions[cut];
				bool ok_l = low.flavor != box_flavor::kernel_below || low.y_hi <= low.x_lo;
				bool ok_h = high.flavor != box_flavor::kernel_above || high.x_hi <= high.y_lo;
				if (ok_l && ok_h) {
					++splits;
					if (eng.box_measure(low, r) + eng.box_measure(high, r) != whole) {
						detail = "split additivity failed (y axis)";
						return false;
					}
				}
			}
			if (quotients < 500) {
				if (eng.box_quotient_dim(b, r) != whole) {
					detail = "quotient identity failed";
					return false;
				}
				++quotients;
			}
		}
	}
	std::ostringstream os;
	os << boxes << " boxes, " << splits << " splits, " << quotients << " quotient identities";
	detail = os.str();
	return true;
}

bool criterion_stability(std::string& detail) {
	split_mix rng(31337);
	long long pairs = 0;
	for (uint64_t seed = 0; pairs < 100; ++seed) {
		random_spec spec{4 + static_cast<int>(seed % 7), static_cast<int>(seed % 4),
		                 0.3 + 0.1 * static_cast<double>(seed % 7), 777000 + seed};
		complex_document doc = random_complex(spec);
		if (doc.vertices.empty()) continue;
		complex_document doc2 = doc;
		rational eps(0);
		for (auto& v : doc2.vertices) {
			rational delta(static_cast<long long>(rng.below(9)) - 4, 4);
			v.value = v.value + delta;
			eps = std::max(eps, delta.abs());
		}
		auto [k1, f1] = build_complex(doc);
		auto [k2, f2] = build_complex(doc2);
		analysis a1 = analysis::build(std::move(k1), std::move(f1));
		analysis a2 = analysis::build(std::move(k2), std::move(f2));
		for (int r = 0; r <= a1.engine.max_degree(); ++r) {
			diagram d1 = dgm(bar_kind::closed, r, a1.pyramid_bars);
			diagram d2 = dgm(bar_kind::closed, r, a2.pyramid_bars);
			if (d1.total() > 24 || d2.total() > 24) continue;
			if (!(bottleneck(d1, d2) <= eps)) {
				detail = "stability violated at seed " + std::to_string(spec.seed) + " degree " +
				         std::to_string(r);
				return false;
			}
		}
		++pairs;
	}
	detail = std::to_string(pairs) + " function pairs";
	return true;
}

bool criterion_engine_sanity(std::string& detail) {
	long long subcomplexes = 0;
	for (const random_spec& spec : corpus_specs(200, 3, 123456)) {
		corpus_item item = make_item(spec);
		measure_engine eng(std::move(item.k), std::move(item.f));
		for (level_side side : {level_side::sub, level_side::super}) {
			for (grid_pos p : eng.grid().all_positions()) {
				const simplicial_complex& level = eng.level_complex(side, p);
				long long chi = 0;
				for (int r = 0; r <= eng.max_degree(); ++r)
					chi += (r % 2 == 0 ? 1 : -1) *
					       static_cast<long long>(eng.level_homology_dim(side, p, r));
				if (chi != level.euler_characteristic()) {
					detail = "euler identity failed at seed " + std::to_string(spec.seed);
					return false;
				}
				++subcomplexes;
			}
		}
	}
	split_mix rng(2718281);
	for (int trial = 0; trial < 10000; ++trial) {
		size_t rows = 1 + rng.below(12), cols = 1 + rng.below(12);
		gf2_matrix mtx(rows, cols);
		for (size_t i = 0; i < rows; ++i)
			for (size_t j = 0; j < cols; ++j)
				if (rng.below(2)) mtx.set(i, j, true);
		size_t rk = rank(mtx);
		if (rk != rank(mtx.transpose()) || kernel_basis(mtx).dim() + rk != cols) {
			detail = "rank/kernel identity failed at trial " + std::to_string(trial);
			return false;
		}
	}
	detail = std::to_string(subcomplexes) + " level subcomplexes, 10000 matrices";
	return true;
}

bool criterion_cli(std::string& detail) {
	if (g_cli_path.empty()) {
		detail = "no --cli path given";
		return false;
	}
	namespace fs = std::filesystem;
	fs::path dir = fs::temp_directory_path() / ("parhom_accept_" + std::to_string(getpid()));
	fs::create_directories(dir);
	fs::path fixture = dir / "cycle4.json";
	std::ofstream(fixture) << fixture_cycle4();

	auto cli = [&](const std::string& args) { return run_cmd(g_cli_path + " " + args); };

	cmd_result d1 = cli("diagram --input " + fixture.string() + " --kind c --degree 0");
	cmd_result d2 = cli("diagram --input " + fixture.string() + " --kind c --degree 0");
	if (d1.exit_code != 0 || d1.output != d2.output ||
	    d1.output != "[{\"x\":0,\"y\":2,\"mult\":1}]\n") {
		detail = "diagram output mismatch: got " + d1.output;
		return false;
	}
	fs::path point = dir / "point.json";
	{
		complex_document doc;
		doc.vertices = {{0, rational(5)}};
		doc.simplices = {{0}};
		std::ofstream(point) << serialize_complex_document(doc);
	}
	cmd_result dk = cli("diagram --input " + point.string() + " --kind co --degree 0");
	if (dk.exit_code != 0 || dk.output != "[]\n") {
		detail = "empty diagram mismatch";
		return false;
	}
	cmd_result csv = cli("diagram --input " + fixture.string() + " --kind c --degree 0 --format csv");
	if (csv.exit_code != 0 || csv.output != "x,y,mult\n0,2,1\n") {
		detail = "csv diagram mismatch: got " + csv.output;
		return false;
	}

	cmd_result m1 = cli("measure --input " + fixture.string() + " --flavor mu-c --degree 0 --box -inf 0 2 inf");
	cmd_result m2 = cli("measure --input " + fixture.string() + " --flavor F --degree 0 --box -inf 0 2 inf");
	if (m1.exit_code != 0 || m1.output != "1\n" || m2.exit_code != 0 || m2.output != "1\n") {
		detail = "measure values mismatch";
		return false;
	}
	cmd_result bad_box = cli("measure --input " + fixture.string() + " --flavor F --degree 0 --box 2 0 1 inf");
	if (bad_box.exit_code != 2) {
		detail = "degenerate box should exit 2";
		return false;
	}

	cmd_result r1 = cli("random --vertices 6 --max-dim 2 --density 0.5 --seed 9");
	cmd_result r2 = cli("random --vertices 6 --max-dim 2 --density 0.5 --seed 9");
	if (r1.exit_code != 0 || r1.output.empty() || r1.output != r2.output) {
		detail = "random generation not deterministic";
		return false;
	}
	fs::path rnd = dir / "random.json";
	std::ofstream(rnd) << r1.output;
	cmd_result v1 = cli("verify --input " + rnd.string());
	if (v1.exit_code != 0) {
		detail = "verify of generated complex should exit 0";
		return false;
	}
	cmd_result v2 = cli("verify --input " + fixture.string());
	if (v2.exit_code != 0) {
		detail = "verify of fixture should exit 0";
		return false;
	}
	cmd_result vr = cli("verify --random --vertices 8 --max-dim 2 --density 0.5 --seed 7 --count 50");
	if (vr.exit_code != 0) {
		detail = "verify --random should exit 0";
		return false;
	}
	{
		auto reports = nlohmann::json::parse(vr.output);
		if (!reports.is_array() || reports.size() != 50) {
			detail = "verify --random --count 50 should emit 50 reports";
			return false;
		}
		for (const auto& rep : reports)
			if (!rep.at("pass").get<bool>()) {
				detail = "verify --random report not passing";
				return false;
			}
	}

	// corrupted expected-barcode sidecar: verification failure, exit 1
	fs::path sidecar = dir / "expected.json";
	std::ofstream(sidecar) << R"([{"degree":0,"kind":"c","left":0,"right":1}])";
	cmd_result bad = cli("verify --input " + fixture.string() + " --expect " + sidecar.string());
	if (bad.exit_code != 1) {
		detail = "corrupted sidecar should exit 1, got " + std::to_string(bad.exit_code);
		return false;
	}

	// malformed document: exit 2
	fs::path broken = dir / "broken.json";
	std::ofstream(broken) << "{\"vertices\": [}";
	cmd_result mal = cli("diagram --input " + broken.string() + " --kind c --degree 0");
	if (mal.exit_code != 2) {
		detail = "malformed file should exit 2";
		return false;
	}
	fs::remove_all(dir);
	detail = "round trips, determinism, exit codes";
	return true;
}

} // namespace

int main(int argc, char** argv) {
	int only = 0;
	for (int i = 1; i < argc; ++i) {
		std::string arg = argv[i];
		if (arg == "--criterion" && i + 1 < argc) only = std::atoi(argv[++i]);
		if (arg == "--cli" && i + 1 < argc) g_cli_path = argv[++i];
	}

	struct entry {
		int id;
		const char* name;
		std::function<bool(std::string&, std::vector<std::string>&)> fn;
	};
	auto plain = [](bool (*fn)(std::string&)) {
		return [fn](std::string& d, std::vector<std::string>&) { return fn(d); };
	};
	std::vector<entry> entries = {
	    {1, "cross-route diagram equality on 200 random complexes",
	     plain(criterion_route_agreement)},
	    {2, "rectangle counts equal box measures on the corpus", criterion_rectangle_measures},
	    {3, "dimension and count identities hold on the corpus", criterion_dimension_formulas},
	    {4, "triple route agreement on 200 random graphs", plain(criterion_triple_agreement)},
	    {5, "canonical fixtures reproduce exactly", plain(criterion_fixtures)},
	    {6, "box measure nonnegativity, additivity, quotient identity",
	     plain(criterion_measure_axioms)},
	    {7, "closed-diagram stability under function perturbation", plain(criterion_stability)},
	    {8, "euler characteristics and GF(2) rank identities", plain(criterion_engine_sanity)},
	    {9, "command-line contract", plain(criterion_cli)},
	};

	bool all_pass = true;
	for (const entry& e : entries) {
		if (only != 0 && e.id != only) continue;
		std::string detail;
		std::vector<std::string> info;
		bool ok = false;
		try {
			ok = e.fn(detail, info);
		} catch (const std::exception& ex) {
			detail = std::string("exception: ") + ex.what();
		}
		std::cout << (ok ? "PASS" : "FAIL") << " criterion " << e.id << ": " << e.name
		          << (detail.empty() ? "" : " [" + detail + "]") << "\n";
		for (const std::string& line : info) std::cout << "    " << line << "\n";
		if (!ok) all_pass = false;
	}
	return all_pass ? 0 : 1;
}
