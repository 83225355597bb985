#include "polar/pipeline.hpp"

#include <chrono>
#include <set>

#include "polar/errors.hpp"
#include "polar/random.hpp"

namespace polar {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t k = 1; k <= n; ++k) names.push_back("x" + std::to_string(k));
  return names;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

SolveInput input_from_text(std::string_view text, std::vector<std::string> variables) {
  if (variables.empty()) variables = detect_variables(text);
  if (variables.empty()) throw InvalidArgument("input has no variables");
  ParsedPolynomial pp = parse_poly(text, variables);
  return {std::string(text), std::move(variables), std::move(pp.slp)};
}

SolveInput input_from_slp_json(std::string_view json, std::vector<std::string> variables) {
  Slp slp = slp_from_json(json);
  if (slp.outputs().size() != 1) throw InvalidArgument("input SLP must have a single output");
  if (variables.empty()) variables = default_names(slp.n_vars());
  if (variables.size() != slp.n_vars()) {
    throw InvalidArgument("SLP has " + std::to_string(slp.n_vars()) + " inputs but " +
                          std::to_string(variables.size()) + " variable names were given");
  }
  return {"", std::move(variables), std::move(slp)};
}

SolveReport solve(const SolveInput& input, const SolveOptions& options) {
  auto t_total = std::chrono::steady_clock::now();
  const Slp& slp = input.slp;
  const std::size_t n = slp.n_vars();
  if (n == 0) throw InvalidArgument("input has no variables");

  std::vector<std::size_t> levels;
  if (options.all_levels) {
    for (std::size_t i = 0; i < n; ++i) levels.push_back(i);
  } else if (options.levels.empty()) {
    levels.push_back(n - 1);
  } else {
    std::set<std::size_t> uniq(options.levels.begin(), options.levels.end());
    for (std::size_t i : uniq) {
      if (i >= n) {
        throw InvalidArgument("level " + std::to_string(i) + " is out of range for " +
                              std::to_string(n) + " variables");
      }
      levels.push_back(i);
    }
  }

  SolveReport rep(input);
  rep.precision = options.precision;
  rep.slp_digest = slp_digest(slp);
  MultiPoly f = expand(slp).front();
  if (f.is_constant()) throw InvalidArgument("input polynomial is constant");
  auto sm = slp_metrics(slp);
  rep.metrics.slp_size = sm.total_size;
  rep.metrics.nonscalar_size = sm.nonscalar_size;
  rep.metrics.degree = static_cast<std::size_t>(f.total_degree());
  rep.metrics.bezout_bound = rep.metrics.degree;
  for (std::size_t k = 1; k < n; ++k) rep.metrics.bezout_bound *= rep.metrics.degree - 1;

  auto t = std::chrono::steady_clock::now();
  CertifiedLevel top = solve_top_level(slp, options.seed, options.genericity);
  rep.timings.solve_ms = ms_since(t);
  rep.change = top.system.change;
  rep.solved = top.solution.rep;
  rep.metrics.gradient_nonscalar_size = slp_metrics(top.system.gradient).nonscalar_size;
  rep.metrics.change_attempts = top.attempts;
  rep.metrics.form_attempts = top.solution.attempts;
  rep.metrics.quotient_dimension = top.solution.quotient_dimension;
  rep.metrics.rejections = top.rejections;

  t = std::chrono::steady_clock::now();
  rep.split = split_real_part(rep.solved.q);
  UnivariateRepresentation pruned = prune_representation(rep.solved, rep.split.q_star);
  rep.real_part.u_coeffs = rep.change.transform_linear_form(pruned.u_coeffs);
  rep.real_part.q = pruned.q;
  rep.real_part.p = rep.change.apply(pruned.p);
  UniPoly residual = compose_mod(f, rep.real_part.p, rep.real_part.q);
  rep.residual_zero = residual.is_zero();
  if (!rep.residual_zero) {
    throw Error("internal error: nonzero residual " + residual.to_string() + " after cleaning");
  }
  rep.timings.clean_ms = ms_since(t);

  t = std::chrono::steady_clock::now();
  rep.points = extract_points(rep.real_part, options.precision);
  rep.timings.extract_ms = ms_since(t);
  if (rep.split.q_star.degree() == 0) {
    rep.notes.push_back("empty real part: q* = 1 and no real points");
  }

  t = std::chrono::steady_clock::now();
  std::vector<std::vector<Rational>> guides;
  for (const auto& pt : rep.points) {
    std::vector<Rational> g;
    for (const auto& c : pt.coords) g.push_back(c.midpoint());
    guides.push_back(std::move(g));
  }
  for (std::size_t level : levels) {
    if (level + 1 == n) {
      DegreeProfile prof;
      prof.level = level;
      prof.q = rep.solved.q;
      prof.q_star = rep.split.q_star;
      prof.affine_degree = static_cast<std::size_t>(std::max(0, prof.q.degree()));
      prof.real_degree = static_cast<std::size_t>(std::max(0, prof.q_star.degree()));
      prof.attempts = top.attempts;
      rep.profile.push_back(std::move(prof));
    } else {
      ProfileOptions po;
      po.genericity = options.genericity;
      po.guides = guides;
      rep.profile.push_back(
          degree_profile(slp, level, derive_seed(options.seed, "profile", level), po));
    }
  }
  rep.timings.profile_ms = ms_since(t);

  if (options.box) {
    t = std::chrono::steady_clock::now();
    if (n != 2 && n != 3) {
      rep.notes.push_back("grid oracle skipped: it supports 2 or 3 variables");
    } else {
      if (options.box->size() != n) {
        throw InvalidArgument("box has " + std::to_string(options.box->size()) +
                              " axes for " + std::to_string(n) + " variables");
      }
      unsigned res = options.resolution ? options.resolution : (n == 2 ? 64u : 48u);
      GridComponents gc = grid_components(f, *options.box, res);
      rep.coverage = CoverageSummary{*options.box, res, coverage_check(rep.points, gc)};
    }
    rep.timings.oracle_ms = ms_since(t);
  }
  rep.timings.total_ms = ms_since(t_total);
  return rep;
}

}  // namespace polar
