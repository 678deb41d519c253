#include <stdexcept>

#include "doctest.h"
#include "parhom/io.hpp"
#include "parhom/measures.hpp"

#include <thread>

using namespace parhom;

namespace {

measure_engine cycle4_engine() {
	return measure_engine(
	    simplicial_complex(4, {{0}, {1}, {2}, {3}, {0, 1}, {1, 2}, {2, 3}, {0, 3}}),
	    vertex_function({rational(0), rational(1), rational(2), rational(1)}));
}

measure_engine vpath_engine() {
	return measure_engine(simplicial_complex(3, {{0}, {1}, {2}, {0, 1}, {1, 2}}),
	                      vertex_function({rational(0), rational(2), rational(1)}));
}

measure_engine edge_engine() {
	return measure_engine(simplicial_complex(2, {{0}, {1}, {0, 1}}),
	                      vertex_function({rational(0), rational(1)}));
}

} // namespace

TEST_CASE("persistent images") {
	measure_engine eng = cycle4_engine();
	CHECK(eng.persistent_image(level_side::sub, grid_pos::neg_inf(), 0).dim() == 0);
	CHECK(eng.persistent_image(level_side::sub, grid_pos::neg_inf(), 1).dim() == 0);
	CHECK(eng.persistent_image(level_side::sub, grid_pos::at(2), 1).dim() == 1);
	CHECK(eng.persistent_image(level_side::sub, grid_pos::at(1), 1).dim() == 0);
	CHECK(eng.persistent_image(level_side::sub, grid_pos::pos_inf(), 1).dim() ==
	      eng.ambient_homology_dim(1));
	CHECK(eng.persistent_image(level_side::super, grid_pos::neg_inf(), 1).dim() == 1);
}

TEST_CASE("image intersection dimensions") {
	measure_engine eng = cycle4_engine();
	CHECK(eng.image_dim(grid_pos::at(2), grid_pos::at(0), 1) == 1);
	CHECK(eng.image_dim(grid_pos::at(1), grid_pos::at(0), 1) == 0);
	CHECK(eng.image_dim(grid_pos::at(0), grid_pos::at(2), 0) == 1);
}

TEST_CASE("kernel dimensions") {
	measure_engine eng = vpath_engine();
	CHECK(eng.kernel_dim(grid_pos::at(1), grid_pos::at(2), 0) == 1);
	CHECK(eng.kernel_dim(grid_pos::at(0), grid_pos::at(1), 0) == 0);
	CHECK(eng.kernel_dim(grid_pos::at(2), grid_pos::at(1), 0) == 0);
	CHECK_THROWS_AS(eng.kernel_dim(grid_pos::at(1), grid_pos::at(1), 0), std::invalid_argument);
}

TEST_CASE("box measures on fixtures") {
	measure_engine c4 = cycle4_engine();
	box b0{grid_pos::neg_inf(), grid_pos::at(0), grid_pos::at(2), grid_pos::pos_inf(),
	       box_flavor::image};
	CHECK(c4.box_measure(b0, 0) == 1);

	measure_engine vp = vpath_engine();
	box b1{grid_pos::at(0), grid_pos::at(1), grid_pos::at(1), grid_pos::at(2),
	       box_flavor::kernel_above};
	CHECK(vp.box_measure(b1, 0) == 1);

	measure_engine ed = edge_engine();
	box b2{grid_pos::neg_inf(), grid_pos::at(0), grid_pos::at(0), grid_pos::at(1),
	       box_flavor::kernel_above};
	CHECK(ed.box_measure(b2, 0) == 0);

	box malformed{grid_pos::at(1), grid_pos::at(0), grid_pos::at(1), grid_pos::at(2),
	              box_flavor::image};
	CHECK_THROWS_AS(c4.box_measure(malformed, 0), std::invalid_argument);
	box bad_above{grid_pos::at(1), grid_pos::at(2), grid_pos::at(0), grid_pos::at(1),
	              box_flavor::kernel_above};
	CHECK_THROWS_AS(c4.box_measure(bad_above, 0), std::invalid_argument);
}

TEST_CASE("point masses on fixtures") {
	measure_engine c4 = cycle4_engine();
	CHECK(c4.point_mass(mass_kind::image, rational(0), rational(2), 0) == 1);
	CHECK(c4.point_mass(mass_kind::image, rational(2), rational(0), 1) == 1);
	CHECK(c4.point_mass(mass_kind::image, rational(0), rational(0), 0) == 0);
	CHECK(c4.point_mass(mass_kind::image, rational(1), rational(1), 0) == 0);
	measure_engine vp = vpath_engine();
	CHECK(vp.point_mass(mass_kind::kernel, rational(1), rational(2), 0) == 1);
	CHECK_THROWS_AS(vp.point_mass(mass_kind::kernel, rational(1), rational(1), 0),
	                std::invalid_argument);
	CHECK_THROWS_AS(vp.point_mass(mass_kind::image, rational(7), rational(1), 0),
	                std::invalid_argument);
}

TEST_CASE("supports on fixtures") {
	measure_engine pt(simplicial_complex(1, {{0}}), vertex_function({rational(5)}));
	point_mass_map s = pt.support(mass_kind::image, 0);
	REQUIRE(s.masses.size() == 1);
	CHECK(s.at(rational(5), rational(5)) == 1);

	measure_engine c4 = cycle4_engine();
	point_mass_map d0 = c4.support(mass_kind::image, 0);
	REQUIRE(d0.masses.size() == 1);
	CHECK(d0.at(rational(0), rational(2)) == 1);
	point_mass_map d1 = c4.support(mass_kind::image, 1);
	REQUIRE(d1.masses.size() == 1);
	CHECK(d1.at(rational(2), rational(0)) == 1);
	CHECK(c4.support(mass_kind::kernel, 0).masses.empty());
	CHECK(c4.support(mass_kind::kernel, 1).masses.empty());
}

TEST_CASE("constant functions put all mass on the diagonal") {
	for (uint64_t seed = 1; seed <= 10; ++seed) {
		random_spec spec{6, 2, 0.7, seed};
		complex_document doc = random_complex(spec);
		for (auto& v : doc.vertices) v.value = rational(3);
		auto [k, f] = build_complex(doc);
		measure_engine eng(std::move(k), std::move(f));
		for (int r = 0; r <= eng.max_degree(); ++r) {
			point_mass_map d = eng.support(mass_kind::image, r);
			CHECK(d.total() == static_cast<long long>(eng.ambient_homology_dim(r)));
			CHECK(d.at(rational(3), rational(3)) == static_cast<long long>(eng.ambient_homology_dim(r)));
			CHECK(eng.support(mass_kind::kernel, r).masses.empty());
		}
	}
}

TEST_CASE("box measure properties on random complexes") {
	split_mix rng(99);
	for (uint64_t seed = 0; seed < 25; ++seed) {
		random_spec spec{7, static_cast<int>(seed % 4), 0.55, 400 + seed};
		auto [k, f] = build_complex(random_complex(spec));
		measure_engine eng(std::move(k), std::move(f));
		auto positions = eng.grid().all_positions();
		size_t np = positions.size();
		if (np < 4) continue;
		for (int trial = 0; trial < 40; ++trial) {
			// random flavor and corners
			int flavor_pick = static_cast<int>(rng.below(3));
			size_t i0 = rng.below(np), i1 = rng.below(np), i2 = rng.below(np), i3 = rng.below(np);
			auto order = [&](size_t a, size_t b) { return std::minmax(a, b); };
			auto [xl, xh] = order(i0, i1);
			auto [yl, yh] = order(i2, i3);
			if (xl == xh || yl == yh) continue;
			box b;
			b.x_lo = positions[xl];
			b.x_hi = positions[xh];
			b.y_lo = positions[yl];
			b.y_hi = positions[yh];
			if (flavor_pick == 0) b.flavor = box_flavor::image;
			if (flavor_pick == 1) {
				b.flavor = box_flavor::kernel_above;
				if (!(b.x_hi <= b.y_lo)) continue;
			}
			if (flavor_pick == 2) {
				b.flavor = box_flavor::kernel_below;
				if (!(b.y_hi <= b.x_lo)) continue;
			}
			int r = static_cast<int>(rng.below(static_cast<uint64_t>(eng.max_degree()) + 1));
			size_t whole = eng.box_measure(b, r);
			// nonnegative by type; equals the explicitly constructed quotient
			CHECK(whole == eng.box_quotient_dim(b, r));
			// split additivity along the x axis
			for (size_t cut = xl + 1; cut < xh; ++cut) {
				box left = b, right = b;
				left.x_hi = positions[cut];
				right.x_lo = positions[cut];
				if (left.flavor == box_flavor::kernel_above && !(left.x_hi <= left.y_lo)) continue;
				if (right.flavor == box_flavor::kernel_below && !(right.y_hi <= right.x_lo)) continue;
				CHECK(eng.box_measure(left, r) + eng.box_measure(right, r) == whole);
			}
			// split additivity along the y axis
			for (size_t cut = yl + 1; cut < yh; ++cut) {
				box low = b, high = b;
				low.y_hi = positions[cut];
				high.y_lo = positions[cut];
				if (low.flavor == box_flavor::kernel_below && !(low.y_hi <= low.x_lo)) continue;
				if (high.flavor == box_flavor::kernel_above && !(high.x_hi <= high.y_lo)) continue;
				CHECK(eng.box_measure(low, r) + eng.box_measure(high, r) == whole);
			}
		}
	}
}

TEST_CASE("image dims are monotone along the grid order") {
	for (uint64_t seed = 0; seed < 15; ++seed) {
		random_spec spec{6, 2, 0.6, 700 + seed};
		auto [k, f] = build_complex(random_complex(spec));
		measure_engine eng(std::move(k), std::move(f));
		auto positions = eng.grid().all_positions();
		for (int r = 0; r <= eng.max_degree(); ++r) {
			for (size_t i = 0; i + 1 < positions.size(); ++i)
				for (size_t j = 0; j < positions.size(); ++j) {
					CHECK(eng.image_dim(positions[i], positions[j], r) <=
					      eng.image_dim(positions[i + 1], positions[j], r));
					CHECK(eng.image_dim(positions[j], positions[i], r) >=
					      eng.image_dim(positions[j], positions[i + 1], r));
				}
		}
	}
}

TEST_CASE("concurrent queries agree with serial results") {
	measure_engine eng = cycle4_engine();
	auto positions = eng.grid().all_positions();
	std::vector<size_t> serial;
	for (grid_pos a : positions)
		for (grid_pos b : positions)
			for (int r = 0; r <= 1; ++r) serial.push_back(eng.image_dim(a, b, r));
	std::vector<std::vector<size_t>> results(8);
	std::vector<std::thread> threads;
	for (int t = 0; t < 8; ++t) {
		threads.emplace_back([&, t] {
			for (grid_pos a : positions)
				for (grid_pos b : positions)
					for (int r = 0; r <= 1; ++r) results[static_cast<size_t>(t)].push_back(eng.image_dim(a, b, r));
		});
	}
	for (auto& th : threads) th.join();
	for (const auto& res : results) CHECK(res == serial);
}
