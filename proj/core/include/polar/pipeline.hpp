#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polar/geometry.hpp"
#include "polar/oracle.hpp"
#include "polar/realpart.hpp"
#include "polar/realroots.hpp"
#include "polar/slp.hpp"
#include "polar/zerodim.hpp"

namespace polar {

struct SolveOptions {
  std::uint64_t seed = 0;
  unsigned precision = 53;
  /// Levels for the degree profile; empty means n-1 only.
  std::vector<std::size_t> levels;
  bool all_levels = false;
  std::optional<Box> box;
  unsigned resolution = 0;  // 0 picks 64 for n = 2 and 48 for n = 3
  GenericityOptions genericity;
};

struct SolveInput {
  std::string text;  // infix source, empty for SLP input
  std::vector<std::string> variables;
  Slp slp;
};

SolveInput input_from_text(std::string_view text, std::vector<std::string> variables = {});
SolveInput input_from_slp_json(std::string_view json, std::vector<std::string> variables = {});

struct Timings {
  double solve_ms = 0;
  double clean_ms = 0;
  double extract_ms = 0;
  double profile_ms = 0;
  double oracle_ms = 0;
  double total_ms = 0;
};

struct SolveMetrics {
  std::size_t slp_size = 0;
  std::size_t nonscalar_size = 0;           // L of the input
  std::size_t gradient_nonscalar_size = 0;  // L of the gradient program
  std::size_t degree = 0;
  std::size_t bezout_bound = 0;             // d (d-1)^(n-1)
  unsigned change_attempts = 0;
  unsigned form_attempts = 0;
  std::size_t quotient_dimension = 0;
  std::vector<std::string> rejections;
};

struct CoverageSummary {
  Box box;
  unsigned resolution = 0;
  CoverageReport report;
};

struct SolveReport {
  explicit SolveReport(SolveInput in) : input(std::move(in)) {}

  SolveInput input;
  std::string slp_digest;
  CoordinateChange change;
  /// Representation in the sampled coordinates y (what the solver certified).
  UnivariateRepresentation solved;
  /// The same points in input coordinates x = A y, pruned to q_star.
  UnivariateRepresentation real_part;
  RealPartSplit split;
  bool residual_zero = false;
  std::vector<DegreeProfile> profile;
  std::vector<RealPoint> points;
  unsigned precision = 0;
  std::optional<CoverageSummary> coverage;
  std::vector<std::string> notes;
  SolveMetrics metrics;
  Timings timings;
};

/// geometry -> zerodim -> realpart -> realroots, plus the requested degree
/// profile levels and the grid oracle when a box is given.
SolveReport solve(const SolveInput& input, const SolveOptions& options = {});

/// Versioned JSON ("schema": "polar-point/1"). Timings are the only content
/// that varies between runs with equal input and seed.
std::string report_to_json(const SolveReport& report, bool include_timings = true);

/// Short human-readable summary.
std::string report_summary(const SolveReport& report);

}  // namespace polar
