#include "parhom/measures.hpp"

#include <stdexcept>

namespace parhom {

measure_engine::measure_engine(simplicial_complex k, vertex_function f)
    : k_(std::move(k)), f_(std::move(f)) {
	grid_ = validate(k_, f_);
	dim_ = std::max(k_.dimension(), 0);
	size_t m = grid_.size();
	stages_ = m + 1;

	level_.assign(2, {});
	hom_.assign(2, {});
	image_.assign(2, {});
	comp_.assign(2, {});
	kerdim_.assign(2, {});

	for (int side = 0; side < 2; ++side) {
		level_side ls = side == 0 ? level_side::sub : level_side::super;
		level_[side].resize(stages_ + 0);
		for (size_t s = 0; s < stages_; ++s) {
			grid_pos p;
			if (s == 0)
				p = ls == level_side::sub ? grid_pos::neg_inf() : grid_pos::pos_inf();
			else if (ls == level_side::sub)
				p = grid_pos::at(static_cast<int>(s) - 1);
			else
				p = grid_pos::at(static_cast<int>(m - s));
			level_[side][s] = level_subcomplex(k_, f_, ls, p, grid_);
		}
		hom_[side].resize(stages_);
		image_[side].resize(stages_);
		for (size_t s = 0; s < stages_; ++s) {
			hom_[side][s].resize(static_cast<size_t>(dim_) + 1);
			image_[side][s].resize(static_cast<size_t>(dim_) + 1);
			for (int r = 0; r <= dim_; ++r)
				hom_[side][s][static_cast<size_t>(r)] = homology(level_[side][s], r);
		}
		comp_[side].resize(static_cast<size_t>(dim_) + 1);
		kerdim_[side].resize(static_cast<size_t>(dim_) + 1);
		for (int r = 0; r <= dim_; ++r) {
			auto& table = comp_[side][static_cast<size_t>(r)];
			table.assign(stages_, std::vector<gf2_matrix>(stages_));
			// step maps, then all compositions
			for (size_t s = 0; s < stages_; ++s)
				table[s][s] = gf2_matrix::identity(hom_[side][s][static_cast<size_t>(r)].dim());
			for (size_t s = 0; s + 1 < stages_; ++s)
				table[s][s + 1] =
				    induced_map(level_[side][s], hom_[side][s][static_cast<size_t>(r)],
				                level_[side][s + 1], hom_[side][s + 1][static_cast<size_t>(r)], r);
			for (size_t span = 2; span < stages_; ++span)
				for (size_t s = 0; s + span < stages_; ++s)
					table[s][s + span] = table[s + span - 1][s + span] * table[s][s + span - 1];
			auto& kt = kerdim_[side][static_cast<size_t>(r)];
			kt.assign(stages_, std::vector<size_t>(stages_, 0));
			for (size_t s = 0; s < stages_; ++s)
				for (size_t t = s; t < stages_; ++t)
					kt[s][t] = kernel_basis(table[s][t]).dim();
		}
		// images in ambient homology coordinates (last stage is the whole complex)
		for (size_t s = 0; s < stages_; ++s) {
			for (int r = 0; r <= dim_; ++r) {
				const gf2_matrix& to_ambient = comp_[side][static_cast<size_t>(r)][s][stages_ - 1];
				image_[side][s][static_cast<size_t>(r)] =
				    column_space(to_ambient);
			}
		}
	}

	fdim_.assign(static_cast<size_t>(dim_) + 1, {});
	for (int r = 0; r <= dim_; ++r) {
		auto& t = fdim_[static_cast<size_t>(r)];
		t.assign(stages_ * stages_, 0);
		for (size_t a = 0; a < stages_; ++a)
			for (size_t b = 0; b < stages_; ++b)
				t[a * stages_ + b] =
				    intersect(image_[0][a][static_cast<size_t>(r)], image_[1][b][static_cast<size_t>(r)])
				        .dim();
	}
}

void measure_engine::check_degree(int r) const {
	if (r < 0) throw std::invalid_argument("measure_engine: negative degree");
}

size_t measure_engine::sub_stage(grid_pos p) const {
	if (!grid_.valid(p)) throw std::invalid_argument("measure_engine: position outside grid");
	size_t m = grid_.size();
	switch (p.k) {
	case grid_pos::kind::neg_inf: return 0;
	case grid_pos::kind::pos_inf: return m;
	default: return static_cast<size_t>(p.i) + 1;
	}
}

size_t measure_engine::super_stage(grid_pos p) const {
	if (!grid_.valid(p)) throw std::invalid_argument("measure_engine: position outside grid");
	size_t m = grid_.size();
	switch (p.k) {
	case grid_pos::kind::neg_inf: return m;
	case grid_pos::kind::pos_inf: return 0;
	case grid_pos::kind::at: return m - static_cast<size_t>(p.i);
	default: return m - static_cast<size_t>(p.i) - 1;
	}
}

size_t measure_engine::stage_of(level_side side, grid_pos p) const {
	return side == level_side::sub ? sub_stage(p) : super_stage(p);
}

size_t measure_engine::ambient_homology_dim(int r) const {
	check_degree(r);
	if (r > dim_) return 0;
	return hom_[0][stages_ - 1][static_cast<size_t>(r)].dim();
}

const simplicial_complex& measure_engine::level_complex(level_side side, grid_pos p) const {
	return level_[side == level_side::sub ? 0 : 1][stage_of(side, p)];
}

size_t measure_engine::level_homology_dim(level_side side, grid_pos p, int r) const {
	check_degree(r);
	if (r > dim_) return 0;
	return hom_[side == level_side::sub ? 0 : 1][stage_of(side, p)][static_cast<size_t>(r)].dim();
}

subspace measure_engine::persistent_image(level_side side, grid_pos p, int r) const {
	check_degree(r);
	if (r > dim_) return subspace::zero(0);
	return image_[side == level_side::sub ? 0 : 1][stage_of(side, p)][static_cast<size_t>(r)];
}

size_t measure_engine::image_dim_stages(size_t sub_s, size_t super_s, int r) const {
	if (r > dim_) return 0;
	return fdim_[static_cast<size_t>(r)][sub_s * stages_ + super_s];
}

size_t measure_engine::image_dim(grid_pos a, grid_pos b, int r) const {
	check_degree(r);
	if (r > dim_) return 0;
	return image_dim_stages(sub_stage(a), super_stage(b), r);
}

size_t measure_engine::kernel_dim_stages(level_side side, size_t from, size_t to, int r) const {
	if (r > dim_) return 0;
	return kerdim_[side == level_side::sub ? 0 : 1][static_cast<size_t>(r)][from][to];
}

size_t measure_engine::kernel_dim(grid_pos a, grid_pos b, int r) const {
	check_degree(r);
	if (a == b)
		throw std::invalid_argument("kernel_dim: positions must differ (" + a.str() + ")");
	if (r > dim_) return 0;
	if (a < b) return kernel_dim_stages(level_side::sub, sub_stage(a), sub_stage(b), r);
	return kernel_dim_stages(level_side::super, super_stage(a), super_stage(b), r);
}

void measure_engine::check_box(const box& b) const {
	if (!grid_.valid(b.x_lo) || !grid_.valid(b.x_hi) || !grid_.valid(b.y_lo) || !grid_.valid(b.y_hi))
		throw std::invalid_argument("box: corner outside grid");
	if (!(b.x_lo < b.x_hi) || !(b.y_lo < b.y_hi))
		throw std::invalid_argument("box: corners must satisfy x_lo < x_hi and y_lo < y_hi");
	if (b.flavor == box_flavor::kernel_above && !(b.x_hi <= b.y_lo))
		throw std::invalid_argument("box: kernel_above requires the x-interval below the y-interval");
	if (b.flavor == box_flavor::kernel_below && !(b.y_hi <= b.x_lo))
		throw std::invalid_argument("box: kernel_below requires the y-interval below the x-interval");
}

size_t measure_engine::box_measure(const box& b, int r) const {
	check_degree(r);
	check_box(b);
	if (r > dim_) return 0;
	if (b.flavor == box_flavor::image) {
		size_t xl = sub_stage(b.x_lo), xh = sub_stage(b.x_hi);
		size_t yl = super_stage(b.y_lo), yh = super_stage(b.y_hi);
		long long v = static_cast<long long>(image_dim_stages(xh, yl, r)) +
		              static_cast<long long>(image_dim_stages(xl, yh, r)) -
		              static_cast<long long>(image_dim_stages(xl, yl, r)) -
		              static_cast<long long>(image_dim_stages(xh, yh, r));
		if (v < 0) throw std::logic_error("box_measure: negative image measure");
		return static_cast<size_t>(v);
	}
	if (b.flavor == box_flavor::kernel_above) {
		// sublevel kernels; T(p,q) with p == q is the zero space
		size_t a = sub_stage(b.x_lo), bb = sub_stage(b.x_hi);
		size_t c = sub_stage(b.y_lo), d = sub_stage(b.y_hi);
		auto t = [&](size_t from, size_t to) -> long long {
			return from == to ? 0 : static_cast<long long>(kernel_dim_stages(level_side::sub, from, to, r));
		};
		long long v = t(bb, d) + t(a, c) - t(a, d) - t(bb, c);
		if (v < 0) throw std::logic_error("box_measure: negative kernel measure");
		return static_cast<size_t>(v);
	}
	// kernel_below: superlevel kernels; stages grow as positions shrink
	size_t c = super_stage(b.x_lo), d = super_stage(b.x_hi);
	size_t a = super_stage(b.y_lo), bb = super_stage(b.y_hi);
	auto t = [&](size_t from, size_t to) -> long long {
		return from == to ? 0 : static_cast<long long>(kernel_dim_stages(level_side::super, from, to, r));
	};
	long long v = t(c, a) + t(d, bb) - t(c, bb) - t(d, a);
	if (v < 0) throw std::logic_error("box_measure: negative kernel measure");
	return static_cast<size_t>(v);
}

size_t measure_engine::box_quotient_dim(const box& b, int r) const {
	check_degree(r);
	check_box(b);
	if (r > dim_) return 0;
	if (b.flavor == box_flavor::image) {
		size_t xl = sub_stage(b.x_lo), xh = sub_stage(b.x_hi);
		size_t yl = super_stage(b.y_lo), yh = super_stage(b.y_hi);
		auto fspace = [&](size_t s, size_t t) {
			return intersect(image_[0][s][static_cast<size_t>(r)], image_[1][t][static_cast<size_t>(r)]);
		};
		subspace top = fspace(xh, yl);
		subspace lo = subspace_sum(fspace(xl, yl), fspace(xh, yh));
		return quotient_dim(top, lo);
	}
	level_side side = b.flavor == box_flavor::kernel_above ? level_side::sub : level_side::super;
	size_t a, bb, c, d;
	if (b.flavor == box_flavor::kernel_above) {
		a = sub_stage(b.x_lo);
		bb = sub_stage(b.x_hi);
		c = sub_stage(b.y_lo);
		d = sub_stage(b.y_hi);
	} else {
		// superlevel stages shrink as positions grow; the quotient lives over
		// the superlevel at the x-interval's low corner
		c = super_stage(b.y_lo);
		d = super_stage(b.y_hi);
		a = super_stage(b.x_hi);
		bb = super_stage(b.x_lo);
	}
	int si = side == level_side::sub ? 0 : 1;
	size_t hdim = hom_[si][bb][static_cast<size_t>(r)].dim();
	auto ker_space = [&](size_t from, size_t to) {
		if (from == to) return subspace::zero(hom_[si][from][static_cast<size_t>(r)].dim());
		return kernel_basis(comp_[si][static_cast<size_t>(r)][from][to]);
	};
	size_t death = b.flavor == box_flavor::kernel_above ? d : c;
	size_t other = b.flavor == box_flavor::kernel_above ? c : d;
	subspace top = ker_space(bb, death);
	subspace moved = subspace::zero(hdim);
	subspace narrower = ker_space(a, death);
	if (narrower.dim() > 0)
		moved = subspace::span(hdim, comp_[si][static_cast<size_t>(r)][a][bb] * narrower.basis());
	subspace lo = subspace_sum(moved, ker_space(bb, other));
	return quotient_dim(top, lo);
}

long long measure_engine::point_mass(mass_kind kind, const rational& x, const rational& y,
                                     int r) const {
	check_degree(r);
	int ix = grid_.index_of(x);
	int iy = grid_.index_of(y);
	if (ix < 0 || iy < 0)
		throw std::invalid_argument("point_mass: coordinates must be grid values");
	if (kind == mass_kind::kernel && ix == iy)
		throw std::invalid_argument("point_mass: kernel masses are undefined on the diagonal");
	if (r > dim_) return 0;
	grid_pos px = grid_pos::at(ix), py = grid_pos::at(iy);
	if (kind == mass_kind::image) {
		box b{grid_.pred(px), px, py, grid_.succ(py), box_flavor::image};
		return static_cast<long long>(box_measure(b, r));
	}
	if (x < y) {
		box b{grid_.pred(px), px, grid_.pred(py), py, box_flavor::kernel_above};
		return static_cast<long long>(box_measure(b, r));
	}
	box b{px, grid_.succ(px), py, grid_.succ(py), box_flavor::kernel_below};
	return static_cast<long long>(box_measure(b, r));
}

point_mass_map measure_engine::support(mass_kind kind, int r) const {
	check_degree(r);
	point_mass_map out;
	out.kind = kind;
	out.degree = r;
	if (r > dim_) return out;
	size_t m = grid_.size();
	for (size_t i = 0; i < m; ++i) {
		for (size_t j = 0; j < m; ++j) {
			if (kind == mass_kind::kernel && i == j) continue;
			long long v = point_mass(kind, grid_.value(i), grid_.value(j), r);
			if (v != 0) out.masses[{grid_.value(i), grid_.value(j)}] = v;
		}
	}
	return out;
}

} // namespace parhom
