#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polar/multipoly.hpp"
#include "polar/realroots.hpp"

namespace polar {

using Box = std::vector<std::pair<Rational, Rational>>;

/// Parse "lo1,hi1;lo2,hi2;..." with rational or decimal-free integer bounds.
Box parse_box(std::string_view text);

/// Marked cells (corner signs of f not all equal) grouped by face adjacency.
/// The count depends on the resolution; it is a test fixture, not a proof.
struct GridComponents {
  Box box;
  unsigned resolution = 0;
  std::vector<Rational> cell_size;
  std::vector<std::vector<std::size_t>> components;  // linear cell indices, ascending
  std::vector<int> label;                            // per cell, -1 when unmarked

  std::size_t dimension() const noexcept { return box.size(); }
  std::size_t cell_index(std::span<const std::size_t> multi) const;
};

/// n in {2, 3}, resolution >= 8, lo < hi on every axis.
GridComponents grid_components(const MultiPoly& f, const Box& box, unsigned resolution);

struct CoverageReport {
  bool pass = false;
  std::vector<std::optional<std::size_t>> assignment;  // component per point
  std::vector<std::size_t> uncovered;                  // components without a point
  std::size_t component_count = 0;
  std::string note;
};

/// Assign every point to the component whose cells meet its coordinate box
/// (dilated by one cell). Throws InvalidArgument when a point touches two
/// components, which means the grid or the points need refining.
CoverageReport coverage_check(std::span<const RealPoint> points, const GridComponents& gc);

}  // namespace polar
