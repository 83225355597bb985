#include "polar/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "polar/errors.hpp"

namespace polar {

Box parse_box(std::string_view text) {
  Box box;
  std::string s(text);
  std::stringstream axes(s);
  std::string axis;
  while (std::getline(axes, axis, ';')) {
    auto comma = axis.find(',');
    if (comma == std::string::npos) {
      throw InvalidArgument("box axis '" + axis + "' is not of the form lo,hi");
    }
    auto trim = [](std::string t) {
      auto b = t.find_first_not_of(" \t");
      auto e = t.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
    };
    Rational lo = parse_rational(trim(axis.substr(0, comma)));
    Rational hi = parse_rational(trim(axis.substr(comma + 1)));
    if (!(lo < hi)) throw InvalidArgument("box axis '" + axis + "' is empty");
    box.emplace_back(lo, hi);
  }
  if (box.empty()) throw InvalidArgument("empty box");
  return box;
}

std::size_t GridComponents::cell_index(std::span<const std::size_t> multi) const {
  std::size_t idx = 0;
  for (std::size_t k = multi.size(); k-- > 0;) idx = idx * resolution + multi[k];
  return idx;
}

GridComponents grid_components(const MultiPoly& f, const Box& box, unsigned resolution) {
  const std::size_t n = box.size();
  if (n != 2 && n != 3) throw InvalidArgument("grid oracle supports 2 or 3 variables");
  if (f.n_vars() != n) throw InvalidArgument("box dimension differs from the polynomial's");
  if (resolution < 8) throw InvalidArgument("grid resolution must be at least 8");
  for (const auto& [lo, hi] : box) {
    if (!(lo < hi)) throw InvalidArgument("degenerate box");
  }
  GridComponents gc;
  gc.box = box;
  gc.resolution = resolution;
  for (const auto& [lo, hi] : box) gc.cell_size.push_back((hi - lo) / resolution);

  // Corner signs, corners indexed like cells with resolution + 1 per axis.
  const std::size_t side = resolution + 1;
  std::size_t corners = 1, cells = 1;
  for (std::size_t k = 0; k < n; ++k) {
    corners *= side;
    cells *= resolution;
  }
  std::vector<std::vector<Rational>> axis_values(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < side; ++j) axis_values[k].push_back(box[k].first + gc.cell_size[k] * j);
  }
  std::vector<signed char> corner_sign(corners);
  std::vector<Rational> pt(n);
  for (std::size_t c = 0; c < corners; ++c) {
    std::size_t rest = c;
    for (std::size_t k = 0; k < n; ++k) {
      pt[k] = axis_values[k][rest % side];
      rest /= side;
    }
    corner_sign[c] = static_cast<signed char>(sgn(f.evaluate(pt)));
  }

  gc.label.assign(cells, -1);
  std::vector<char> marked(cells, 0);
  std::vector<std::size_t> multi(n);
  for (std::size_t cell = 0; cell < cells; ++cell) {
    std::size_t rest = cell;
    for (std::size_t k = 0; k < n; ++k) {
      multi[k] = rest % resolution;
      rest /= resolution;
    }
    int first = 2;
    bool differs = false;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n) && !differs; ++mask) {
      std::size_t c = 0;
      for (std::size_t k = n; k-- > 0;) c = c * side + multi[k] + ((mask >> k) & 1);
      if (first == 2) {
        first = corner_sign[c];
      } else if (corner_sign[c] != first) {
        differs = true;
      }
    }
    marked[cell] = differs;
  }

  std::vector<std::size_t> stack;
  for (std::size_t seed = 0; seed < cells; ++seed) {
    if (!marked[seed] || gc.label[seed] >= 0) continue;
    int id = static_cast<int>(gc.components.size());
    gc.components.emplace_back();
    auto& comp = gc.components.back();
    gc.label[seed] = id;
    stack.push_back(seed);
    while (!stack.empty()) {
      std::size_t cell = stack.back();
      stack.pop_back();
      comp.push_back(cell);
      std::size_t stride = 1;
      std::size_t rest = cell;
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t coord = rest % resolution;
        rest /= resolution;
        if (coord > 0 && marked[cell - stride] && gc.label[cell - stride] < 0) {
          gc.label[cell - stride] = id;
          stack.push_back(cell - stride);
        }
        if (coord + 1 < resolution && marked[cell + stride] && gc.label[cell + stride] < 0) {
          gc.label[cell + stride] = id;
          stack.push_back(cell + stride);
        }
        stride *= resolution;
      }
    }
    std::sort(comp.begin(), comp.end());
  }
  return gc;
}

namespace {

// Cell range [first, last] meeting [lo, hi] on one axis, widened by one cell.
std::pair<long, long> cell_range(const Rational& lo, const Rational& hi, const Rational& origin,
                                 const Rational& size, unsigned resolution) {
  auto floor_cell = [&](const Rational& x) {
    Rational t = (x - origin) / size;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    if (fl < -1) return -2L;
    if (fl > resolution + 1) return static_cast<long>(resolution) + 2;
    return fl.get_si();
  };
  long a = std::max(0L, floor_cell(lo) - 1);
  long b = std::min(static_cast<long>(resolution) - 1, floor_cell(hi) + 1);
  return {a, b};
}

}  // namespace

CoverageReport coverage_check(std::span<const RealPoint> points, const GridComponents& gc) {
  const std::size_t n = gc.dimension();
  CoverageReport rep;
  rep.component_count = gc.components.size();
  std::vector<std::size_t> hits(gc.components.size(), 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& pt = points[i];
    if (pt.coords.size() != n) throw InvalidArgument("point dimension differs from the grid's");
    std::vector<std::pair<long, long>> ranges;
    bool empty = false;
    for (std::size_t k = 0; k < n; ++k) {
      if (pt.coords[k].width() > gc.cell_size[k]) {
        throw InvalidArgument("point " + std::to_string(i) +
                              " is wider than a grid cell; refine the point");
      }
      ranges.push_back(cell_range(pt.coords[k].lo, pt.coords[k].hi, gc.box[k].first,
                                  gc.cell_size[k], gc.resolution));
      empty = empty || ranges.back().first > ranges.back().second;
    }
    std::set<int> labels;
    if (!empty) {
      std::vector<std::size_t> multi(n);
      for (std::size_t k = 0; k < n; ++k) multi[k] = static_cast<std::size_t>(ranges[k].first);
      while (true) {
        int l = gc.label[gc.cell_index(multi)];
        if (l >= 0) labels.insert(l);
        std::size_t k = 0;
        for (; k < n; ++k) {
          if (static_cast<long>(multi[k]) < ranges[k].second) {
            ++multi[k];
            break;
          }
          multi[k] = static_cast<std::size_t>(ranges[k].first);
        }
        if (k == n) break;
      }
    }
    if (labels.size() > 1) {
      throw InvalidArgument("point " + std::to_string(i) +
                            " touches several components; refine the grid");
    }
    if (labels.empty()) {
      rep.assignment.emplace_back(std::nullopt);
    } else {
      auto c = static_cast<std::size_t>(*labels.begin());
      rep.assignment.emplace_back(c);
      ++hits[c];
    }
  }
  for (std::size_t c = 0; c < hits.size(); ++c) {
    if (hits[c] == 0) rep.uncovered.push_back(c);
  }
  rep.pass = rep.uncovered.empty();
  if (gc.components.empty()) rep.note = "no real points in the box; real degree 0";
  return rep;
}

}  // namespace polar
