#include "parhom/equivalence.hpp"

#include <algorithm>
#include <stdexcept>

namespace parhom {

void verification_report::add(const std::string& check, int degree, long long lhs, long long rhs,
                              const std::string& location) {
	tally& t = tallies_[check];
	++t.evaluated;
	if (lhs != rhs) {
		++t.failed;
		if (failures_.size() < max_kept_failures)
			failures_.push_back({check, degree, location, lhs, rhs, false});
	}
}

void verification_report::add_info(const std::string& check, int degree, long long lhs,
                                   long long rhs, const std::string& location) {
	tally& t = info_tallies_[check];
	++t.evaluated;
	if (lhs != rhs) {
		++t.failed;
		if (info_failures_.size() < max_kept_failures)
			info_failures_.push_back({check, degree, location, lhs, rhs, false});
	}
}

void verification_report::merge(const verification_report& o) {
	for (const auto& [k, t] : o.tallies_) {
		tallies_[k].evaluated += t.evaluated;
		tallies_[k].failed += t.failed;
	}
	for (const auto& [k, t] : o.info_tallies_) {
		info_tallies_[k].evaluated += t.evaluated;
		info_tallies_[k].failed += t.failed;
	}
	for (const auto& r : o.failures_)
		if (failures_.size() < max_kept_failures) failures_.push_back(r);
	for (const auto& r : o.info_failures_)
		if (info_failures_.size() < max_kept_failures) info_failures_.push_back(r);
}

bool verification_report::passed() const {
	for (const auto& [k, t] : tallies_)
		if (t.failed != 0) return false;
	return true;
}

long long verification_report::total_evaluated() const {
	long long n = 0;
	for (const auto& [k, t] : tallies_) n += t.evaluated;
	return n;
}

analysis analysis::build(simplicial_complex k, vertex_function f) {
	analysis a{measure_engine(std::move(k), std::move(f)), {}, {}, {}, {}, {}};
	a.pairs = extended_persistence(a.engine.complex(), a.engine.function());
	a.pyramid_bars = decode_pyramid(a.pairs);
	for (int r = 0; r <= a.engine.max_degree() + 1; ++r) {
		a.image_masses.push_back(a.engine.support(mass_kind::image, r));
		a.kernel_masses.push_back(a.engine.support(mass_kind::kernel, r));
	}
	a.measure_bars = barcodes_from_measures(a.image_masses, a.kernel_masses);
	return a;
}

diagram reflect(const diagram& d) {
	diagram out;
	out.kind = d.kind;
	out.degree = d.degree;
	for (const auto& [xy, m] : d.points) out.points[{xy.second, xy.first}] += m;
	return out;
}

point_mass_map reflect(const point_mass_map& m) {
	point_mass_map out;
	out.kind = m.kind;
	out.degree = m.degree;
	for (const auto& [xy, c] : m.masses) out.masses[{xy.second, xy.first}] += c;
	return out;
}

namespace {

using point_counts = std::map<std::pair<rational, rational>, long long>;

std::string point_str(const std::pair<rational, rational>& p) {
	return "(" + p.first.str() + "," + p.second.str() + ")";
}

// Point-by-point multiset comparison; one record per support point.
void compare_point_sets(verification_report& rep, const std::string& check, int degree,
                        const point_counts& lhs, const point_counts& rhs, bool informational) {
	auto emit = [&](const std::pair<rational, rational>& p, long long l, long long r) {
		if (informational)
			rep.add_info(check, degree, l, r, point_str(p));
		else
			rep.add(check, degree, l, r, point_str(p));
	};
	if (lhs.empty() && rhs.empty()) {
		if (informational)
			rep.add_info(check, degree, 0, 0, "empty");
		else
			rep.add(check, degree, 0, 0, "empty");
		return;
	}
	auto it = lhs.begin();
	auto jt = rhs.begin();
	while (it != lhs.end() || jt != rhs.end()) {
		if (jt == rhs.end() || (it != lhs.end() && it->first < jt->first)) {
			emit(it->first, it->second, 0);
			++it;
		} else if (it == lhs.end() || jt->first < it->first) {
			emit(jt->first, 0, jt->second);
			++jt;
		} else {
			emit(it->first, it->second, jt->second);
			++it;
			++jt;
		}
	}
}

point_counts above_diagonal(const point_mass_map& m) {
	point_counts out;
	for (const auto& [xy, c] : m.masses)
		if (xy.first < xy.second) out[xy] = c;
	return out;
}

point_counts below_diagonal_reflected(const point_mass_map& m) {
	point_counts out;
	for (const auto& [xy, c] : m.masses)
		if (xy.second < xy.first) out[{xy.second, xy.first}] = c;
	return out;
}

// Bar endpoint counting helpers over one (degree, kind) multiset.
struct bar_list {
	std::vector<rational> left, right;
	std::vector<long long> mult;
	void load(const barcode_set& bars, int degree, bar_kind kind) {
		left.clear();
		right.clear();
		mult.clear();
		for (const auto& [lr, m] : bars.bars(degree, kind)) {
			left.push_back(lr.first);
			right.push_back(lr.second);
			mult.push_back(m);
		}
	}
	template <typename Pred>
	long long count(Pred p) const {
		long long c = 0;
		for (size_t i = 0; i < left.size(); ++i)
			if (p(left[i], right[i])) c += mult[i];
		return c;
	}
};

} // namespace

verification_report check_point_mass_diagrams(const analysis& a, const barcode_set& bars,
                                              const std::string& suffix) {
	verification_report rep;
	int degrees = a.mass_degrees();
	for (int r = 0; r < degrees; ++r) {
		compare_point_sets(rep, "diagram.closed" + suffix, r,
		                   dgm(bar_kind::closed, r, bars).points,
		                   above_diagonal(a.image_masses[static_cast<size_t>(r)]), false);
		point_counts open_rhs;
		if (r + 1 < degrees)
			open_rhs = below_diagonal_reflected(a.image_masses[static_cast<size_t>(r) + 1]);
		compare_point_sets(rep, "diagram.open" + suffix, r, dgm(bar_kind::open, r, bars).points,
		                   open_rhs, false);
		compare_point_sets(rep, "diagram.closed_open" + suffix, r,
		                   dgm(bar_kind::closed_open, r, bars).points,
		                   above_diagonal(a.kernel_masses[static_cast<size_t>(r)]), false);
		compare_point_sets(rep, "diagram.open_closed" + suffix, r,
		                   dgm(bar_kind::open_closed, r, bars).points,
		                   below_diagonal_reflected(a.kernel_masses[static_cast<size_t>(r)]), false);

		// Alternative readings: the open diagram against the image masses one
		// degree down, and both half-open diagrams against image masses.
		point_counts shifted;
		if (r >= 1) shifted = below_diagonal_reflected(a.image_masses[static_cast<size_t>(r) - 1]);
		compare_point_sets(rep, "diagram.open.degree-unshifted" + suffix, r,
		                   dgm(bar_kind::open, r, bars).points, shifted, true);
		compare_point_sets(rep, "diagram.closed_open.image-form" + suffix, r,
		                   dgm(bar_kind::closed_open, r, bars).points,
		                   above_diagonal(a.image_masses[static_cast<size_t>(r)]), true);
		compare_point_sets(rep, "diagram.open_closed.image-form" + suffix, r,
		                   dgm(bar_kind::open_closed, r, bars).points, shifted, true);
	}
	return rep;
}

verification_report check_point_mass_diagrams(const analysis& a) {
	verification_report rep = check_point_mass_diagrams(a, a.pyramid_bars);
	if (a.engine.complex().dimension() <= 1 && !a.engine.complex().empty()) {
		barcode_set zz = zigzag_route_barcodes(a.engine.complex(), a.engine.function());
		rep.merge(check_point_mass_diagrams(a, zz, ".zigzag"));
	}
	return rep;
}

namespace {

// Row conditions that ignore the endpoint decorations: the three
// closed-style rows use a < l <= b and c <= r < d, the open row is fully
// strict.
long long mu_undecorated(bar_kind kind, int degree, const rectangle& rect,
                         const barcode_set& bars) {
	long long count = 0;
	bool strict = kind == bar_kind::open;
	for (const auto& [lr, m] : bars.bars(degree, kind)) {
		const ext_rational l(lr.first), r(lr.second);
		bool ok;
		if (strict)
			ok = rect.a < l && l < rect.b && rect.c < r && r < rect.d;
		else
			ok = rect.a < l && l <= rect.b && rect.c <= r && r < rect.d;
		if (ok) count += m;
	}
	return count;
}

} // namespace

verification_report check_rectangle_measures(const analysis& a) {
	verification_report rep;
	const measure_engine& eng = a.engine;
	const level_grid& grid = eng.grid();
	const barcode_set& bars = a.pyramid_bars;

	// corner lattice: -inf, grid values, gap midpoints, +inf
	std::vector<ext_rational> lattice;
	lattice.push_back(ext_rational::neg_inf());
	for (size_t i = 0; i < grid.size(); ++i) {
		lattice.push_back(ext_rational(grid.value(i)));
		if (i + 1 < grid.size())
			lattice.push_back(ext_rational((grid.value(i) + grid.value(i + 1)) / rational(2)));
	}
	lattice.push_back(ext_rational::pos_inf());
	size_t n = lattice.size();
	int maxr = eng.max_degree();

	for (size_t ia = 0; ia < n; ++ia)
		for (size_t ib = ia + 1; ib < n; ++ib)
			for (size_t ic = ib + 1; ic < n; ++ic)
				for (size_t id = ic + 1; id < n; ++id) {
					rectangle rect{lattice[ia], lattice[ib], lattice[ic], lattice[id]};
					grid_pos pa = grid.position_of(rect.a), pb = grid.position_of(rect.b);
					grid_pos pc = grid.position_of(rect.c), pd = grid.position_of(rect.d);
					std::string loc = rect.str();
					for (int r = 0; r <= maxr; ++r) {
						long long image_above = static_cast<long long>(
						    eng.box_measure({pa, pb, pc, pd, box_flavor::image}, r));
						long long kernel_above = static_cast<long long>(
						    eng.box_measure({pa, pb, pc, pd, box_flavor::kernel_above}, r));
						long long kernel_below = static_cast<long long>(
						    eng.box_measure({pc, pd, pa, pb, box_flavor::kernel_below}, r));
						long long image_below_up = static_cast<long long>(
						    eng.box_measure({pc, pd, pa, pb, box_flavor::image}, r + 1));
						long long image_below_same = static_cast<long long>(
						    eng.box_measure({pc, pd, pa, pb, box_flavor::image}, r));

						rep.add("rect.closed", r, mu(bar_kind::closed, r, rect, bars), image_above, loc);
						rep.add("rect.closed_open", r, mu(bar_kind::closed_open, r, rect, bars),
						        kernel_above, loc);
						rep.add("rect.open_closed", r, mu(bar_kind::open_closed, r, rect, bars),
						        kernel_below, loc);
						rep.add("rect.open", r, mu(bar_kind::open, r, rect, bars), image_below_up, loc);

						// alternative right-hand sides of the half-open rows
						rep.add_info("rect.open_closed.image-form", r,
						             mu(bar_kind::open_closed, r, rect, bars), image_below_up, loc);
						rep.add_info("rect.open.degree-unshifted", r, mu(bar_kind::open, r, rect, bars),
						             image_below_same, loc);
						// undecorated row conditions against the measure side
						rep.add_info("rect.closed_open.uniform-row", r,
						             mu_undecorated(bar_kind::closed_open, r, rect, bars),
						             kernel_above, loc);
						rep.add_info("rect.open_closed.uniform-row", r,
						             mu_undecorated(bar_kind::open_closed, r, rect, bars),
						             kernel_below, loc);
						rep.add_info("rect.open.strict-row", r,
						             mu_undecorated(bar_kind::open, r, rect, bars), image_below_up,
						             loc);
					}
				}
	return rep;
}

verification_report check_dimension_formulas(const analysis& a) {
	verification_report rep;
	const measure_engine& eng = a.engine;
	const level_grid& grid = eng.grid();
	const barcode_set& bars = a.pyramid_bars;
	int maxr = eng.max_degree();
	size_t m = grid.size();

	bar_list closed_r, closed_open_r, open_closed_r, open_rm1;
	for (int r = 0; r <= maxr; ++r) {
		closed_r.load(bars, r, bar_kind::closed);
		closed_open_r.load(bars, r, bar_kind::closed_open);
		open_closed_r.load(bars, r, bar_kind::open_closed);
		if (r >= 1)
			open_rm1.load(bars, r - 1, bar_kind::open);
		else
			open_rm1 = bar_list{};

		for (size_t i = 0; i < m; ++i) {
			const rational& av = grid.value(i);
			grid_pos ap = grid_pos::at(static_cast<int>(i));
			std::string loc = "a=" + av.str();

			long long sub_dim = static_cast<long long>(
			    eng.level_homology_dim(level_side::sub, ap, r));
			long long rhs = closed_r.count([&](const rational& l, const rational&) { return l <= av; }) +
			                open_rm1.count([&](const rational&, const rational& rr) { return rr <= av; }) +
			                closed_open_r.count(
			                    [&](const rational& l, const rational& rr) { return l <= av && av < rr; });
			rep.add("dim.sublevel", r, sub_dim, rhs, loc);

			long long super_dim = static_cast<long long>(
			    eng.level_homology_dim(level_side::super, ap, r));
			rhs = closed_r.count([&](const rational&, const rational& rr) { return rr >= av; }) +
			      open_rm1.count([&](const rational& l, const rational&) { return l >= av; }) +
			      open_closed_r.count(
			          [&](const rational& l, const rational& rr) { return l < av && av <= rr; });
			rep.add("dim.superlevel", r, super_dim, rhs, loc);

			long long img_sub = static_cast<long long>(
			    eng.persistent_image(level_side::sub, ap, r).dim());
			rhs = closed_r.count([&](const rational& l, const rational&) { return l <= av; }) +
			      open_rm1.count([&](const rational&, const rational& rr) { return rr <= av; });
			rep.add("dim.image.sub", r, img_sub, rhs, loc);

			long long img_super = static_cast<long long>(
			    eng.persistent_image(level_side::super, ap, r).dim());
			rhs = closed_r.count([&](const rational&, const rational& rr) { return rr >= av; }) +
			      open_rm1.count([&](const rational& l, const rational&) { return l >= av; });
			rep.add("dim.image.super", r, img_super, rhs, loc);
		}

		for (size_t i = 0; i < m; ++i) {
			for (size_t j = 0; j < m; ++j) {
				const rational& av = grid.value(i);
				const rational& bv = grid.value(j);
				grid_pos ap = grid_pos::at(static_cast<int>(i));
				grid_pos bp = grid_pos::at(static_cast<int>(j));
				std::string loc = "(" + av.str() + "," + bv.str() + ")";
				long long f_ab = static_cast<long long>(eng.image_dim(ap, bp, r));
				if (av > bv) {
					long long rhs6 =
					    closed_r.count(
					        [&](const rational& l, const rational& rr) { return l <= av && rr >= bv; }) +
					    open_rm1.count(
					        [&](const rational& l, const rational& rr) { return bv <= l && rr <= av; });
					rep.add("count.image.below", r, f_ab, rhs6, loc);
					long long mass = eng.point_mass(mass_kind::image, av, bv, r);
					long long rhs7 = open_rm1.count(
					    [&](const rational& l, const rational& rr) { return l == bv && rr == av; });
					rep.add("mass.image.below", r, mass, rhs7, loc);
				} else {
					long long rhs8 = closed_r.count(
					    [&](const rational& l, const rational& rr) { return l <= av && bv <= rr; });
					rep.add("count.image.above", r, f_ab, rhs8, loc);
					long long mass = eng.point_mass(mass_kind::image, av, bv, r);
					long long rhs9 = closed_r.count(
					    [&](const rational& l, const rational& rr) { return l == av && rr == bv; });
					rep.add("mass.image.above", r, mass, rhs9, loc);
				}
				if (i == j) continue;
				long long t_ab = static_cast<long long>(eng.kernel_dim(ap, bp, r));
				long long mass = eng.point_mass(mass_kind::kernel, av, bv, r);
				if (av < bv) {
					long long rhs10 = closed_open_r.count(
					    [&](const rational& l, const rational& rr) { return l <= av && av < rr && rr <= bv; });
					rep.add("count.kernel.sub", r, t_ab, rhs10, loc);
					long long rhs11 = closed_open_r.count(
					    [&](const rational& l, const rational& rr) { return l == av && rr == bv; });
					rep.add("mass.kernel.above", r, mass, rhs11, loc);
					long long rhs11v = open_rm1.count(
					    [&](const rational& l, const rational& rr) { return l == av && rr == bv; });
					rep.add_info("mass.kernel.above.open-class", r, mass, rhs11v, loc);
				} else {
					long long rhs12 = open_closed_r.count(
					    [&](const rational& l, const rational& rr) { return bv <= l && l < av && av <= rr; });
					rep.add("count.kernel.super", r, t_ab, rhs12, loc);
					long long rhs13 = open_closed_r.count(
					    [&](const rational& l, const rational& rr) { return l == bv && rr == av; });
					rep.add("mass.kernel.below", r, mass, rhs13, loc);
					long long rhs13v = open_rm1.count(
					    [&](const rational& l, const rational& rr) { return l == bv && rr == av; });
					rep.add_info("mass.kernel.below.open-class", r, mass, rhs13v, loc);
				}
			}
		}
	}
	return rep;
}

verification_report check_zigzag_agreement(const analysis& a) {
	verification_report rep;
	const simplicial_complex& k = a.engine.complex();
	if (k.dimension() > 1 || k.empty()) return rep;
	const vertex_function& f = a.engine.function();
	const level_grid& grid = a.engine.grid();

	barcode_set zz_bars;
	for (int r = 0; r <= 1; ++r) {
		zigzag_module zz = build_levelset_zigzag(k, f, r);
		interval_multiplicities im = compute_interval_multiplicities(zz);
		bool valid = decomposition_is_valid(zz, im);
		rep.add("zigzag.decomposition", r, valid ? 1 : 0, 1, "degree " + std::to_string(r));
		barcode_set decoded = decode_zigzag(im, grid, r);
		decoded.for_each([&](const decorated_interval& b, long long mult) {
			zz_bars.add(b.degree, b.kind, b.left, b.right, mult);
		});
	}
	for (int r = 0; r <= 1; ++r) {
		for (bar_kind kind : {bar_kind::closed, bar_kind::open, bar_kind::closed_open,
		                      bar_kind::open_closed}) {
			std::string tag = "." + bar_kind_name(kind);
			compare_point_sets(rep, "zigzag.vs-reduction" + tag, r, zz_bars.bars(r, kind),
			                   a.pyramid_bars.bars(r, kind), false);
			compare_point_sets(rep, "zigzag.vs-measures" + tag, r, zz_bars.bars(r, kind),
			                   a.measure_bars.bars(r, kind), false);
		}
	}
	long long high = 0;
	a.pyramid_bars.for_each([&](const decorated_interval& b, long long mult) {
		if (b.degree > 1) high += mult;
	});
	rep.add("zigzag.degree-bound", 0, high, 0, "bars above degree 1");
	return rep;
}

verification_report verify_all(const analysis& a, const barcode_set* expected_bars) {
	verification_report rep;
	// route agreement between the reduction and measure barcodes, all degrees
	for (int r = 0; r < a.mass_degrees(); ++r) {
		for (bar_kind kind : {bar_kind::closed, bar_kind::open, bar_kind::closed_open,
		                      bar_kind::open_closed}) {
			compare_point_sets(rep, "routes.reduction-vs-measures." + bar_kind_name(kind), r,
			                   a.pyramid_bars.bars(r, kind), a.measure_bars.bars(r, kind), false);
		}
	}
	rep.merge(check_point_mass_diagrams(a));
	rep.merge(check_rectangle_measures(a));
	rep.merge(check_dimension_formulas(a));
	rep.merge(check_zigzag_agreement(a));
	if (expected_bars) {
		int maxr = std::max(a.pyramid_bars.max_degree(), expected_bars->max_degree());
		for (int r = 0; r <= std::max(maxr, 0); ++r)
			for (bar_kind kind : {bar_kind::closed, bar_kind::open, bar_kind::closed_open,
			                      bar_kind::open_closed})
				compare_point_sets(rep, "expected.barcodes." + bar_kind_name(kind), r,
				                   a.pyramid_bars.bars(r, kind), expected_bars->bars(r, kind), false);
	}
	return rep;
}

verification_report check_point_mass_diagrams(const simplicial_complex& k,
                                              const vertex_function& f) {
	return check_point_mass_diagrams(analysis::build(k, f));
}

verification_report check_rectangle_measures(const simplicial_complex& k,
                                             const vertex_function& f) {
	return check_rectangle_measures(analysis::build(k, f));
}

verification_report check_dimension_formulas(const simplicial_complex& k,
                                             const vertex_function& f) {
	return check_dimension_formulas(analysis::build(k, f));
}

namespace {

// Kuhn's augmenting-path matching on an adjacency matrix.
struct matcher {
	size_t nl, nr;
	std::vector<std::vector<char>> adj;
	std::vector<long long> match_r;
	std::vector<char> seen;

	bool try_augment(size_t u) {
		for (size_t v = 0; v < nr; ++v) {
			if (!adj[u][v] || seen[v]) continue;
			seen[v] = 1;
			if (match_r[v] < 0 || try_augment(static_cast<size_t>(match_r[v]))) {
				match_r[v] = static_cast<long long>(u);
				return true;
			}
		}
		return false;
	}

	bool perfect() {
		match_r.assign(nr, -1);
		size_t matched = 0;
		for (size_t u = 0; u < nl; ++u) {
			seen.assign(nr, 0);
			if (try_augment(u)) ++matched;
		}
		return matched == nl;
	}
};

} // namespace

rational bottleneck(const diagram& d1, const diagram& d2) {
	if (d1.kind != d2.kind || d1.degree != d2.degree)
		throw std::invalid_argument("bottleneck: diagrams must share kind and degree");
	std::vector<std::pair<rational, rational>> a, b;
	for (const auto& [p, m] : d1.points) {
		if (m < 0) throw std::invalid_argument("bottleneck: negative multiplicity");
		for (long long i = 0; i < m; ++i) a.push_back(p);
		if (a.size() > 24) throw std::invalid_argument("bottleneck: diagram larger than 24 points");
	}
	for (const auto& [p, m] : d2.points) {
		if (m < 0) throw std::invalid_argument("bottleneck: negative multiplicity");
		for (long long i = 0; i < m; ++i) b.push_back(p);
		if (b.size() > 24) throw std::invalid_argument("bottleneck: diagram larger than 24 points");
	}
	size_t n = a.size(), m = b.size();
	if (n == 0 && m == 0) return rational(0);

	auto dist = [](const std::pair<rational, rational>& p, const std::pair<rational, rational>& q) {
		rational dx = (p.first - q.first).abs();
		rational dy = (p.second - q.second).abs();
		return std::max(dx, dy);
	};
	auto diag = [](const std::pair<rational, rational>& p) {
		return (p.second - p.first) / rational(2);
	};

	std::vector<rational> candidates{rational(0)};
	for (const auto& p : a) {
		candidates.push_back(diag(p));
		for (const auto& q : b) candidates.push_back(dist(p, q));
	}
	for (const auto& q : b) candidates.push_back(diag(q));
	std::sort(candidates.begin(), candidates.end());
	candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

	// Left side: points of a plus m diagonal slots; right side: points of b
	// plus n diagonal slots. Feasibility at threshold t is a perfect matching.
	auto feasible = [&](const rational& t) {
		matcher mt;
		mt.nl = n + m;
		mt.nr = m + n;
		mt.adj.assign(mt.nl, std::vector<char>(mt.nr, 0));
		for (size_t i = 0; i < n; ++i) {
			for (size_t j = 0; j < m; ++j)
				if (dist(a[i], b[j]) <= t) mt.adj[i][j] = 1;
			if (diag(a[i]) <= t)
				for (size_t j = 0; j < n; ++j) mt.adj[i][m + j] = 1;
		}
		// left diagonal slots (one per b-point): absorb b-points within their
		// diagonal distance, pair freely with right diagonal slots
		for (size_t i = 0; i < m; ++i) {
			for (size_t j = 0; j < m; ++j)
				if (diag(b[j]) <= t) mt.adj[n + i][j] = 1;
			for (size_t j = 0; j < n; ++j) mt.adj[n + i][m + j] = 1;
		}
		return mt.perfect();
	};

	size_t lo = 0, hi = candidates.size() - 1;
	if (!feasible(candidates[hi]))
		throw std::logic_error("bottleneck: no feasible matching at maximal candidate");
	while (lo < hi) {
		size_t mid = (lo + hi) / 2;
		if (feasible(candidates[mid]))
			hi = mid;
		else
			lo = mid + 1;
	}
	return candidates[lo];
}

} // namespace parhom
