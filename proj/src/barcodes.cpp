#include "parhom/barcodes.hpp"

#include <algorithm>
#include <stdexcept>

namespace parhom {

const barcode_set::point_counts barcode_set::empty_{};

std::string bar_kind_name(bar_kind k) {
	switch (k) {
	case bar_kind::closed: return "closed";
	case bar_kind::open: return "open";
	case bar_kind::closed_open: return "closed_open";
	default: return "open_closed";
	}
}

std::string bar_kind_token(bar_kind k) {
	switch (k) {
	case bar_kind::closed: return "c";
	case bar_kind::open: return "o";
	case bar_kind::closed_open: return "co";
	default: return "oc";
	}
}

bar_kind bar_kind_from_token(const std::string& tok) {
	if (tok == "c" || tok == "closed") return bar_kind::closed;
	if (tok == "o" || tok == "open") return bar_kind::open;
	if (tok == "co" || tok == "closed_open") return bar_kind::closed_open;
	if (tok == "oc" || tok == "open_closed") return bar_kind::open_closed;
	throw std::invalid_argument("unknown bar kind '" + tok + "'");
}

std::string decorated_interval::str() const {
	const char* lb = (kind == bar_kind::closed || kind == bar_kind::closed_open) ? "[" : "(";
	const char* rb = (kind == bar_kind::closed || kind == bar_kind::open_closed) ? "]" : ")";
	return "H" + std::to_string(degree) + " " + lb + left.str() + "," + right.str() + rb;
}

void barcode_set::add(int degree, bar_kind kind, const rational& left, const rational& right,
                      long long mult) {
	if (mult == 0) return;
	if (degree < 0) throw std::invalid_argument("barcode_set: negative degree");
	if (kind == bar_kind::closed ? right < left : !(left < right))
		throw std::invalid_argument("barcode_set: malformed endpoints for " + bar_kind_name(kind) +
		                            " bar [" + left.str() + "," + right.str() + "]");
	long long& slot = bars_[{degree, kind}][{left, right}];
	slot += mult;
	if (slot == 0) bars_[{degree, kind}].erase({left, right});
}

const barcode_set::point_counts& barcode_set::bars(int degree, bar_kind kind) const {
	auto it = bars_.find({degree, kind});
	return it == bars_.end() ? empty_ : it->second;
}

long long barcode_set::total() const {
	long long t = 0;
	for (const auto& [key, pts] : bars_)
		for (const auto& [lr, mult] : pts) t += mult;
	return t;
}

int barcode_set::max_degree() const {
	int d = -1;
	for (const auto& [key, pts] : bars_)
		if (!pts.empty()) d = std::max(d, key.first);
	return d;
}

void extended_pairs::add(std::map<int, pair_counts>& tbl, int degree, const rational& b,
                         const rational& d) {
	tbl[degree][{b, d}] += 1;
}

std::vector<simplex> filtration_order(const simplicial_complex& k, const vertex_function& f) {
	struct keyed {
		rational value;
		simplex s;
	};
	std::vector<keyed> cells;
	cells.reserve(k.total_count());
	for (int d = 0; d <= k.dimension(); ++d) {
		for (const simplex& s : k.simplices(d)) {
			rational v = f[static_cast<size_t>(s[0])];
			for (vertex_id w : s) v = std::max(v, f[static_cast<size_t>(w)]);
			cells.push_back({v, s});
		}
	}
	std::stable_sort(cells.begin(), cells.end(), [](const keyed& a, const keyed& b) {
		if (a.value != b.value) return a.value < b.value;
		if (a.s.size() != b.s.size()) return a.s.size() < b.s.size();
		return a.s < b.s;
	});
	std::vector<simplex> out;
	out.reserve(cells.size());
	for (keyed& c : cells) out.push_back(std::move(c.s));
	return out;
}

namespace {

// A cell of the extended filtration: the apex, an ascending copy of a
// simplex, or the cone over a simplex.
struct ext_cell {
	enum class part : uint8_t { apex, ascending, cone };
	part where;
	int dim;        // cell dimension (cone over s has dim |s|)
	rational value; // max vertex value ascending, min vertex value coned
	simplex s;      // empty for the apex
};

} // namespace

extended_pairs extended_persistence(const simplicial_complex& k, const vertex_function& f) {
	level_grid grid = validate(k, f);
	extended_pairs out;
	if (k.empty()) return out;

	std::vector<ext_cell> cells;
	cells.push_back({ext_cell::part::apex, 0, grid.value(grid.size() - 1), {}});
	{
		std::vector<simplex> asc = filtration_order(k, f);
		for (simplex& s : asc) {
			rational v = f[static_cast<size_t>(s[0])];
			for (vertex_id w : s) v = std::max(v, f[static_cast<size_t>(w)]);
			cells.push_back({ext_cell::part::ascending, static_cast<int>(s.size()) - 1, v, std::move(s)});
		}
	}
	{
		struct keyed {
			rational value;
			simplex s;
		};
		std::vector<keyed> desc;
		for (int d = 0; d <= k.dimension(); ++d) {
			for (const simplex& s : k.simplices(d)) {
				rational v = f[static_cast<size_t>(s[0])];
				for (vertex_id w : s) v = std::min(v, f[static_cast<size_t>(w)]);
				desc.push_back({v, s});
			}
		}
		std::stable_sort(desc.begin(), desc.end(), [](const keyed& a, const keyed& b) {
			if (a.value != b.value) return b.value < a.value; // descending value
			if (a.s.size() != b.s.size()) return a.s.size() < b.s.size();
			return a.s < b.s;
		});
		for (keyed& c : desc)
			cells.push_back({ext_cell::part::cone, static_cast<int>(c.s.size()), c.value, std::move(c.s)});
	}

	size_t n = cells.size();
	// position lookup for boundary assembly
	std::map<std::pair<bool, simplex>, size_t> pos; // (coned?, simplex) -> cell index
	for (size_t i = 0; i < n; ++i) {
		if (cells[i].where == ext_cell::part::ascending) pos[{false, cells[i].s}] = i;
		if (cells[i].where == ext_cell::part::cone) pos[{true, cells[i].s}] = i;
	}

	std::vector<gf2_vector> columns(n);
	for (size_t i = 0; i < n; ++i) {
		gf2_vector col(n);
		const ext_cell& c = cells[i];
		if (c.where == ext_cell::part::ascending) {
			if (c.dim > 0) {
				simplex face(c.s.size() - 1);
				for (size_t drop = 0; drop < c.s.size(); ++drop) {
					size_t w = 0;
					for (size_t j = 0; j < c.s.size(); ++j)
						if (j != drop) face[w++] = c.s[j];
					col.flip(pos.at({false, face}));
				}
			}
		} else if (c.where == ext_cell::part::cone) {
			// boundary of apex*s: s itself, apex*facets, and the apex when s
			// is a vertex
			col.flip(pos.at({false, c.s}));
			if (c.s.size() == 1) {
				col.flip(0);
			} else {
				simplex face(c.s.size() - 1);
				for (size_t drop = 0; drop < c.s.size(); ++drop) {
					size_t w = 0;
					for (size_t j = 0; j < c.s.size(); ++j)
						if (j != drop) face[w++] = c.s[j];
					col.flip(pos.at({true, face}));
				}
			}
		}
		columns[i] = std::move(col);
	}

	// standard reduction: pivot = highest nonzero row
	std::vector<long long> owner_of_pivot(n, -1);
	for (size_t j = 0; j < n; ++j) {
		long long p = columns[j].last_set();
		while (p >= 0 && owner_of_pivot[static_cast<size_t>(p)] >= 0) {
			columns[j] ^= columns[static_cast<size_t>(owner_of_pivot[static_cast<size_t>(p)])];
			p = columns[j].last_set();
		}
		if (p < 0) continue;
		owner_of_pivot[static_cast<size_t>(p)] = static_cast<long long>(j);
		const ext_cell& birth = cells[static_cast<size_t>(p)];
		const ext_cell& death = cells[j];
		int degree = birth.dim;
		bool b_asc = birth.where == ext_cell::part::ascending;
		bool d_asc = death.where == ext_cell::part::ascending;
		if (birth.where == ext_cell::part::apex)
			throw std::logic_error("extended_persistence: apex became a pivot");
		if (b_asc && d_asc) {
			if (birth.value != death.value) out.add(out.ord, degree, birth.value, death.value);
		} else if (b_asc && !d_asc) {
			out.add(out.ext, degree, birth.value, death.value);
		} else if (!b_asc && !d_asc) {
			if (birth.value != death.value) out.add(out.rel, degree, birth.value, death.value);
		} else {
			throw std::logic_error("extended_persistence: coned cell died before the cone started");
		}
	}
	// Everything pairs except the apex: the final complex is a cone.
	size_t unpaired = 0;
	for (size_t j = 0; j < n; ++j)
		if (!columns[j].any() && owner_of_pivot[j] < 0) ++unpaired;
	if (unpaired != 1)
		throw std::logic_error("extended_persistence: expected exactly one unpaired cell, found " +
		                       std::to_string(unpaired));
	return out;
}

barcode_set decode_pyramid(const extended_pairs& pairs) {
	barcode_set out;
	for (const auto& [r, pts] : pairs.ext) {
		for (const auto& [bd, mult] : pts) {
			const auto& [b, d] = bd;
			if (b <= d)
				out.add(r, bar_kind::closed, b, d, mult);
			else {
				if (r == 0) throw std::logic_error("decode_pyramid: essential 0-class with inverted span");
				out.add(r - 1, bar_kind::open, d, b, mult);
			}
		}
	}
	for (const auto& [r, pts] : pairs.ord)
		for (const auto& [bd, mult] : pts) out.add(r, bar_kind::closed_open, bd.first, bd.second, mult);
	for (const auto& [r, pts] : pairs.rel) {
		for (const auto& [bd, mult] : pts) {
			if (r == 0) throw std::logic_error("decode_pyramid: relative pair in degree 0");
			out.add(r - 1, bar_kind::open_closed, bd.second, bd.first, mult);
		}
	}
	return out;
}

barcode_set barcodes_from_measures(const std::vector<point_mass_map>& image_masses,
                                   const std::vector<point_mass_map>& kernel_masses) {
	barcode_set out;
	for (const point_mass_map& pm : image_masses) {
		for (const auto& [xy, mult] : pm.masses) {
			const auto& [x, y] = xy;
			if (x <= y)
				out.add(pm.degree, bar_kind::closed, x, y, mult);
			else {
				if (pm.degree == 0)
					throw std::logic_error("barcodes_from_measures: image mass below the diagonal in degree 0");
				out.add(pm.degree - 1, bar_kind::open, y, x, mult);
			}
		}
	}
	for (const point_mass_map& pm : kernel_masses) {
		for (const auto& [xy, mult] : pm.masses) {
			const auto& [x, y] = xy;
			if (x < y)
				out.add(pm.degree, bar_kind::closed_open, x, y, mult);
			else
				out.add(pm.degree, bar_kind::open_closed, y, x, mult);
		}
	}
	return out;
}

barcode_set measure_route_barcodes(const measure_engine& eng) {
	std::vector<point_mass_map> image, kernel;
	for (int r = 0; r <= eng.max_degree() + 1; ++r) {
		image.push_back(eng.support(mass_kind::image, r));
		kernel.push_back(eng.support(mass_kind::kernel, r));
	}
	return barcodes_from_measures(image, kernel);
}

} // namespace parhom
