#include <stdexcept>

#include "doctest.h"
#include "parhom/barcodes.hpp"
#include "parhom/equivalence.hpp"
#include "parhom/io.hpp"

#include <algorithm>

using namespace parhom;

namespace {

simplicial_complex edge_complex() { return simplicial_complex(2, {{0}, {1}, {0, 1}}); }
vertex_function edge_values() { return vertex_function({rational(0), rational(1)}); }

simplicial_complex vpath_complex() { return simplicial_complex(3, {{0}, {1}, {2}, {0, 1}, {1, 2}}); }
vertex_function vpath_values() { return vertex_function({rational(0), rational(2), rational(1)}); }

simplicial_complex cycle4_complex() {
	return simplicial_complex(4, {{0}, {1}, {2}, {3}, {0, 1}, {1, 2}, {2, 3}, {0, 3}});
}
vertex_function cycle4_values() {
	return vertex_function({rational(0), rational(1), rational(2), rational(1)});
}

long long pair_count(const extended_pairs::pair_counts& c) {
	long long t = 0;
	for (const auto& [k, v] : c) t += v;
	return t;
}

} // namespace

TEST_CASE("filtration order follows value, dimension, lexicographic ties") {
	std::vector<simplex> order = filtration_order(edge_complex(), edge_values());
	REQUIRE(order.size() == 3);
	CHECK(order[0] == simplex{0});
	CHECK(order[1] == simplex{1});
	CHECK(order[2] == simplex{0, 1});

	// equal values break ties lexicographically, stably across runs
	simplicial_complex two(2, {{0}, {1}});
	vertex_function ones({rational(1), rational(1)});
	auto o1 = filtration_order(two, ones);
	auto o2 = filtration_order(two, ones);
	CHECK(o1 == o2);
	CHECK(o1[0] == simplex{0});

	auto ov = filtration_order(vpath_complex(), vpath_values());
	REQUIRE(ov.size() == 5);
	CHECK(ov[0] == simplex{0});
	CHECK(ov[1] == simplex{2});
	CHECK(ov[2] == simplex{1});
	CHECK(ov[3] == simplex{0, 1});
	CHECK(ov[4] == simplex{1, 2});
}

TEST_CASE("extended persistence of the edge") {
	extended_pairs p = extended_persistence(edge_complex(), edge_values());
	CHECK(p.ord.empty());
	CHECK(p.rel.empty());
	REQUIRE(p.ext.count(0) == 1);
	CHECK(pair_count(p.ext.at(0)) == 1);
	CHECK(p.ext.at(0).at({rational(0), rational(1)}) == 1);
}

TEST_CASE("extended persistence of the v-path") {
	extended_pairs p = extended_persistence(vpath_complex(), vpath_values());
	REQUIRE(p.ord.count(0) == 1);
	CHECK(p.ord.at(0).at({rational(1), rational(2)}) == 1);
	REQUIRE(p.ext.count(0) == 1);
	CHECK(p.ext.at(0).at({rational(0), rational(2)}) == 1);
	CHECK(p.rel.empty());
}

TEST_CASE("extended persistence of the 4-cycle") {
	extended_pairs p = extended_persistence(cycle4_complex(), cycle4_values());
	REQUIRE(p.ext.count(0) == 1);
	CHECK(p.ext.at(0).at({rational(0), rational(2)}) == 1);
	REQUIRE(p.ext.count(1) == 1);
	CHECK(p.ext.at(1).at({rational(2), rational(0)}) == 1);
	CHECK(pair_count(p.ext.at(0)) == 1);
	CHECK(pair_count(p.ext.at(1)) == 1);
}

TEST_CASE("pyramid decoding dictionary") {
	extended_pairs p;
	p.add(p.ext, 0, rational(0), rational(2));
	p.add(p.ext, 1, rational(2), rational(0));
	p.add(p.ord, 0, rational(1), rational(2));
	p.add(p.rel, 1, rational(2), rational(1));
	barcode_set bars = decode_pyramid(p);
	CHECK(bars.bars(0, bar_kind::closed).at({rational(0), rational(2)}) == 1);
	CHECK(bars.bars(0, bar_kind::open).at({rational(0), rational(2)}) == 1);
	CHECK(bars.bars(0, bar_kind::closed_open).at({rational(1), rational(2)}) == 1);
	CHECK(bars.bars(0, bar_kind::open_closed).at({rational(1), rational(2)}) == 1);
	CHECK(bars.total() == 4);
}

TEST_CASE("barcodes from measure supports") {
	// point: a single diagonal image mass gives the singleton closed bar
	point_mass_map d0{mass_kind::image, 0, {{{rational(5), rational(5)}, 1}}};
	barcode_set pt = barcodes_from_measures({d0}, {});
	CHECK(pt.bars(0, bar_kind::closed).at({rational(5), rational(5)}) == 1);
	CHECK(pt.total() == 1);

	measure_engine c4(cycle4_complex(), cycle4_values());
	barcode_set bars = measure_route_barcodes(c4);
	CHECK(bars.bars(0, bar_kind::closed).at({rational(0), rational(2)}) == 1);
	CHECK(bars.bars(0, bar_kind::open).at({rational(0), rational(2)}) == 1);
	CHECK(bars.total() == 2);

	measure_engine vp(vpath_complex(), vpath_values());
	barcode_set vbars = measure_route_barcodes(vp);
	CHECK(vbars.bars(0, bar_kind::closed).at({rational(0), rational(2)}) == 1);
	CHECK(vbars.bars(0, bar_kind::closed_open).at({rational(1), rational(2)}) == 1);
	CHECK(vbars.total() == 2);
}

TEST_CASE("hollow tetrahedron: the essential 2-class is an open 1-bar") {
	simplicial_complex sphere(4, {{0},
	                              {1},
	                              {2},
	                              {3},
	                              {0, 1},
	                              {0, 2},
	                              {0, 3},
	                              {1, 2},
	                              {1, 3},
	                              {2, 3},
	                              {0, 1, 2},
	                              {0, 1, 3},
	                              {0, 2, 3},
	                              {1, 2, 3}});
	vertex_function f({rational(0), rational(1), rational(2), rational(3)});
	CHECK(homology(sphere, 2).dim() == 1);
	analysis a = analysis::build(sphere, f);
	barcode_set want;
	want.add(0, bar_kind::closed, rational(0), rational(3));
	want.add(1, bar_kind::open, rational(0), rational(3));
	CHECK(a.pyramid_bars == want);
	CHECK(a.measure_bars == want);
	CHECK(a.image_masses[2].at(rational(3), rational(0)) == 1);
	CHECK(verify_all(a).passed());
}

TEST_CASE("route agreement on random complexes") {
	for (uint64_t seed = 0; seed < 40; ++seed) {
		random_spec spec{7, static_cast<int>(seed % 4), 0.55, 2000 + seed};
		auto [k, f] = build_complex(random_complex(spec));
		analysis a = analysis::build(std::move(k), std::move(f));
		CHECK(a.pyramid_bars == a.measure_bars);
	}
}

TEST_CASE("barcode endpoints are grid values; only closed bars are singletons") {
	for (uint64_t seed = 0; seed < 20; ++seed) {
		random_spec spec{6, 2, 0.6, 3000 + seed};
		auto [k, f] = build_complex(random_complex(spec));
		level_grid grid = validate(k, f);
		barcode_set bars = decode_pyramid(extended_persistence(k, f));
		bars.for_each([&](const decorated_interval& b, long long mult) {
			CHECK(mult > 0);
			CHECK(grid.index_of(b.left) >= 0);
			CHECK(grid.index_of(b.right) >= 0);
			if (b.kind != bar_kind::closed) CHECK(b.left < b.right);
			CHECK(b.degree <= std::max(k.dimension(), 0));
		});
	}
}

TEST_CASE("closed and open bars together count ambient homology") {
	// every closed r-bar and every open (r-1)-bar is an essential class of
	// H_r(X); half-open bars never are
	for (uint64_t seed = 0; seed < 20; ++seed) {
		random_spec spec{6, 3, 0.6, 4000 + seed};
		auto [k, f] = build_complex(random_complex(spec));
		if (k.empty()) continue;
		barcode_set bars = decode_pyramid(extended_persistence(k, f));
		for (int r = 0; r <= k.dimension(); ++r) {
			long long essential = 0;
			for (const auto& [lr, m] : bars.bars(r, bar_kind::closed)) essential += m;
			if (r >= 1)
				for (const auto& [lr, m] : bars.bars(r - 1, bar_kind::open)) essential += m;
			CHECK(essential == static_cast<long long>(homology(k, r).dim()));
		}
	}
}

TEST_CASE("barcodes are independent of vertex relabeling") {
	for (uint64_t seed = 0; seed < 10; ++seed) {
		random_spec spec{7, 2, 0.5, 5000 + seed};
		complex_document doc = random_complex(spec);
		auto [k, f] = build_complex(doc);
		barcode_set base = decode_pyramid(extended_persistence(k, f));

		// permute ids with a deterministic rotation
		int n = static_cast<int>(doc.vertices.size());
		auto perm = [&](int v) { return (v + 3) % n; };
		complex_document shuffled;
		shuffled.vertices.resize(doc.vertices.size());
		for (const auto& v : doc.vertices)
			shuffled.vertices[static_cast<size_t>(perm(v.id))] = {perm(v.id), v.value};
		for (const simplex& s : doc.simplices) {
			simplex t;
			for (int v : s) t.push_back(perm(v));
			std::sort(t.begin(), t.end());
			shuffled.simplices.push_back(t);
		}
		auto [k2, f2] = build_complex(shuffled);
		CHECK(decode_pyramid(extended_persistence(k2, f2)) == base);
	}
}
