#pragma once

#include <map>
#include <vector>

#include "parhom/complex.hpp"

namespace parhom {

// Box flavors for the two level-set measures: `image` boxes (a,b]x[c,d)
// measure intersections of sublevel/superlevel images in ambient homology;
// `kernel_above` boxes (a,b]x(c,d] and `kernel_below` boxes [a,b)x[c,d)
// measure kernels of sublevel resp. superlevel inclusions.
enum class box_flavor { image, kernel_above, kernel_below };

struct box {
	grid_pos x_lo, x_hi, y_lo, y_hi;
	box_flavor flavor = box_flavor::image;
};

// The two point-mass densities: `image` masses sit where the image measure
// jumps (closed bars above the diagonal, open bars below); `kernel` masses
// sit where the kernel measures jump (closed-open above, open-closed below).
enum class mass_kind { image, kernel };

struct point_mass_map {
	mass_kind kind = mass_kind::image;
	int degree = 0;
	std::map<std::pair<rational, rational>, long long> masses;

	long long at(const rational& x, const rational& y) const {
		auto it = masses.find({x, y});
		return it == masses.end() ? 0 : it->second;
	}
	long long total() const {
		long long t = 0;
		for (const auto& [p, m] : masses) t += m;
		return t;
	}
	bool operator==(const point_mass_map&) const = default;
};

// Precomputes every level subcomplex, homology basis, inclusion-induced map
// and image subspace for one complex with one vertex function. Immutable
// after construction, so queries are safe from any number of threads.
class measure_engine {
public:
	measure_engine(simplicial_complex k, vertex_function f);

	const simplicial_complex& complex() const { return k_; }
	const vertex_function& function() const { return f_; }
	const level_grid& grid() const { return grid_; }
	int max_degree() const { return std::max(k_.dimension(), 0); }

	size_t ambient_homology_dim(int r) const;
	const simplicial_complex& level_complex(level_side side, grid_pos p) const;
	size_t level_homology_dim(level_side side, grid_pos p, int r) const;

	// Image of H_r(level at p) in H_r(X), in ambient homology coordinates.
	subspace persistent_image(level_side side, grid_pos p, int r) const;

	// dim of persistent_image(sub, a) ∩ persistent_image(super, b).
	size_t image_dim(grid_pos a, grid_pos b, int r) const;

	// Kernel dimension of the inclusion-induced map between sublevel (a < b)
	// or superlevel (a > b) homologies. a == b is a usage error.
	size_t kernel_dim(grid_pos a, grid_pos b, int r) const;

	// Four-corner inclusion-exclusion value of the box, per its flavor.
	size_t box_measure(const box& b, int r) const;

	// The same value obtained by explicitly constructing the quotient space
	// the measure is the dimension of. Used to cross-check box_measure.
	size_t box_quotient_dim(const box& b, int r) const;

	// Measure of the minimal grid box around (x, y); both coordinates must
	// be grid values, and kernel masses never sit on the diagonal.
	long long point_mass(mass_kind kind, const rational& x, const rational& y, int r) const;

	// All nonzero point masses of one kind in one degree.
	point_mass_map support(mass_kind kind, int r) const;

private:
	simplicial_complex k_;
	vertex_function f_;
	level_grid grid_;
	int dim_;
	size_t stages_; // m + 1 distinct level stages per side (0 = empty)

	// per side s, stage t: the level subcomplex
	std::vector<std::vector<simplicial_complex>> level_;
	// per side, stage, degree: homology basis
	std::vector<std::vector<std::vector<homology_basis>>> hom_;
	// per side, stage, degree: image subspace in ambient homology
	std::vector<std::vector<std::vector<subspace>>> image_;
	// per side, degree, (from,to) with from <= to: composed inclusion map
	std::vector<std::vector<std::vector<std::vector<gf2_matrix>>>> comp_;
	// per side, degree, (from,to): kernel dimension of comp_
	std::vector<std::vector<std::vector<std::vector<size_t>>>> kerdim_;
	std::vector<std::vector<size_t>> fdim_; // per degree: stage x stage table

	size_t sub_stage(grid_pos p) const;
	size_t super_stage(grid_pos p) const;
	size_t stage_of(level_side side, grid_pos p) const;
	size_t image_dim_stages(size_t sub_s, size_t super_s, int r) const;
	size_t kernel_dim_stages(level_side side, size_t from, size_t to, int r) const;
	void check_degree(int r) const;
	void check_box(const box& b) const;
};

} // namespace parhom
