#include "parhom/io.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace parhom {

using json = nlohmann::ordered_json;

namespace {

rational rational_from_json(const json& v, const std::string& what) {
	if (v.is_string()) return rational::parse(v.get<std::string>());
	if (v.is_number_integer()) return rational(v.get<long long>());
	if (v.is_number())
		throw std::invalid_argument(what + ": non-integer numeric literals are inexact; use a string");
	throw std::invalid_argument(what + ": expected a string or integer value");
}

json rational_to_json(const rational& r) {
	if (r.is_integer()) return json(r.num());
	return json(r.str());
}

} // namespace

complex_document parse_complex_document(const std::string& text) {
	json j;
	try {
		j = json::parse(text);
	} catch (const json::parse_error& e) {
		throw std::invalid_argument(std::string("complex document: invalid JSON: ") + e.what());
	}
	if (!j.is_object() || !j.contains("vertices") || !j.contains("simplices"))
		throw std::invalid_argument("complex document: expected {\"vertices\": [...], \"simplices\": [...]}");
	complex_document doc;
	for (const json& v : j.at("vertices")) {
		if (!v.is_object() || !v.contains("id") || !v.contains("value"))
			throw std::invalid_argument("complex document: vertex entries need id and value");
		complex_document::vertex cv;
		cv.id = v.at("id").get<int>();
		cv.value = rational_from_json(v.at("value"), "vertex value");
		doc.vertices.push_back(cv);
	}
	for (const json& s : j.at("simplices")) {
		if (!s.is_array() || s.empty())
			throw std::invalid_argument("complex document: simplices must be nonempty id lists");
		simplex sx;
		for (const json& v : s) sx.push_back(v.get<int>());
		doc.simplices.push_back(std::move(sx));
	}
	return doc;
}

std::string serialize_complex_document(const complex_document& doc) {
	json j;
	j["vertices"] = json::array();
	for (const auto& v : doc.vertices)
		j["vertices"].push_back({{"id", v.id}, {"value", rational_to_json(v.value)}});
	j["simplices"] = json::array();
	for (const simplex& s : doc.simplices) j["simplices"].push_back(s);
	return j.dump(2) + "\n";
}

std::pair<simplicial_complex, vertex_function> build_complex(const complex_document& doc) {
	int n = static_cast<int>(doc.vertices.size());
	std::vector<rational> values(static_cast<size_t>(n));
	std::vector<bool> seen(static_cast<size_t>(n), false);
	for (const auto& v : doc.vertices) {
		if (v.id < 0 || v.id >= n)
			throw std::invalid_argument("complex document: vertex ids must be 0.." +
			                            std::to_string(n - 1) + ", got " + std::to_string(v.id));
		if (seen[static_cast<size_t>(v.id)])
			throw std::invalid_argument("complex document: duplicate vertex id " + std::to_string(v.id));
		seen[static_cast<size_t>(v.id)] = true;
		values[static_cast<size_t>(v.id)] = v.value;
	}
	simplicial_complex k(n, doc.simplices);
	for (const auto& v : doc.vertices)
		if (!k.has_vertex(v.id))
			throw std::invalid_argument("complex document: vertex " + std::to_string(v.id) +
			                            " is declared but missing from the simplex list");
	vertex_function f(std::move(values));
	validate(k, f); // face closure and length checks
	return {std::move(k), std::move(f)};
}

uint64_t split_mix::next() {
	// splitmix64; fixed algorithm keeps generation identical across platforms
	state_ += 0x9e3779b97f4a7c15ULL;
	uint64_t z = state_;
	z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
	z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
	return z ^ (z >> 31);
}

double split_mix::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

complex_document random_complex(const random_spec& spec) {
	if (spec.vertex_count < 0) throw std::invalid_argument("random complex: negative vertex count");
	if (spec.max_dimension < 0 || spec.max_dimension > 3)
		throw std::invalid_argument("random complex: max dimension must be 0..3");
	if (spec.edge_density < 0.0 || spec.edge_density > 1.0)
		throw std::invalid_argument("random complex: edge density must lie in [0,1]");
	split_mix rng(spec.seed);
	int n = spec.vertex_count;
	complex_document doc;
	for (int v = 0; v < n; ++v) {
		// small rationals with frequent ties: numerator 0..n, denominator 1..3
		long long num = static_cast<long long>(rng.below(static_cast<uint64_t>(n) + 1));
		long long den = 1 + static_cast<long long>(rng.below(3));
		doc.vertices.push_back({v, rational(num, den)});
		doc.simplices.push_back({v});
	}
	std::vector<std::vector<bool>> adj(static_cast<size_t>(n),
	                                   std::vector<bool>(static_cast<size_t>(n), false));
	if (spec.max_dimension >= 1) {
		for (int u = 0; u < n; ++u)
			for (int v = u + 1; v < n; ++v)
				if (rng.unit() < spec.edge_density) {
					adj[static_cast<size_t>(u)][static_cast<size_t>(v)] = true;
					doc.simplices.push_back({u, v});
				}
	}
	if (spec.max_dimension >= 2) {
		for (int u = 0; u < n; ++u)
			for (int v = u + 1; v < n; ++v)
				for (int w = v + 1; w < n; ++w)
					if (adj[static_cast<size_t>(u)][static_cast<size_t>(v)] &&
					    adj[static_cast<size_t>(u)][static_cast<size_t>(w)] &&
					    adj[static_cast<size_t>(v)][static_cast<size_t>(w)])
						doc.simplices.push_back({u, v, w});
	}
	if (spec.max_dimension >= 3) {
		for (int u = 0; u < n; ++u)
			for (int v = u + 1; v < n; ++v)
				for (int w = v + 1; w < n; ++w)
					for (int x = w + 1; x < n; ++x)
						if (adj[static_cast<size_t>(u)][static_cast<size_t>(v)] &&
						    adj[static_cast<size_t>(u)][static_cast<size_t>(w)] &&
						    adj[static_cast<size_t>(u)][static_cast<size_t>(x)] &&
						    adj[static_cast<size_t>(v)][static_cast<size_t>(w)] &&
						    adj[static_cast<size_t>(v)][static_cast<size_t>(x)] &&
						    adj[static_cast<size_t>(w)][static_cast<size_t>(x)])
							doc.simplices.push_back({u, v, w, x});
	}
	return doc;
}

std::string diagram_to_json(const diagram& d) {
	json arr = json::array();
	for (const auto& [xy, mult] : d.points)
		arr.push_back({{"x", rational_to_json(xy.first)},
		               {"y", rational_to_json(xy.second)},
		               {"mult", mult}});
	return arr.dump() + "\n";
}

std::string diagram_to_csv(const diagram& d) {
	std::string out = "x,y,mult\n";
	for (const auto& [xy, mult] : d.points)
		out += xy.first.str() + "," + xy.second.str() + "," + std::to_string(mult) + "\n";
	return out;
}

namespace {

json record_to_json(const check_record& r) {
	return json{{"check", r.check}, {"degree", r.degree}, {"location", r.location},
	            {"lhs", r.lhs},     {"rhs", r.rhs},       {"pass", r.pass}};
}

} // namespace

std::string report_to_json(const verification_report& rep, bool pretty) {
	json j;
	j["pass"] = rep.passed();
	json summary = json::array();
	for (const auto& [check, t] : rep.tallies())
		summary.push_back({{"check", check}, {"evaluated", t.evaluated}, {"failed", t.failed}});
	j["summary"] = summary;
	json fails = json::array();
	for (const check_record& r : rep.failures()) fails.push_back(record_to_json(r));
	j["failures"] = fails;
	json info = json::array();
	for (const auto& [check, t] : rep.info_tallies())
		info.push_back({{"check", check},
		                {"evaluated", t.evaluated},
		                {"failed", t.failed},
		                {"holds", t.failed == 0}});
	j["informational"] = info;
	return (pretty ? j.dump(2) : j.dump()) + "\n";
}

std::string barcodes_to_json(const barcode_set& bars) {
	json arr = json::array();
	bars.for_each([&](const decorated_interval& b, long long mult) {
		arr.push_back({{"degree", b.degree},
		               {"kind", bar_kind_token(b.kind)},
		               {"left", rational_to_json(b.left)},
		               {"right", rational_to_json(b.right)},
		               {"mult", mult}});
	});
	return arr.dump(2) + "\n";
}

barcode_set parse_expected_barcodes(const std::string& text) {
	json j;
	try {
		j = json::parse(text);
	} catch (const json::parse_error& e) {
		throw std::invalid_argument(std::string("expected barcodes: invalid JSON: ") + e.what());
	}
	const json* arr = &j;
	if (j.is_object() && j.contains("bars")) arr = &j.at("bars");
	if (!arr->is_array())
		throw std::invalid_argument("expected barcodes: expected an array of bar objects");
	barcode_set out;
	for (const json& b : *arr) {
		int degree = b.at("degree").get<int>();
		bar_kind kind = bar_kind_from_token(b.at("kind").get<std::string>());
		rational left = rational_from_json(b.at("left"), "bar endpoint");
		rational right = rational_from_json(b.at("right"), "bar endpoint");
		long long mult = b.contains("mult") ? b.at("mult").get<long long>() : 1;
		out.add(degree, kind, left, right, mult);
	}
	return out;
}

} // namespace parhom
