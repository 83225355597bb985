#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polar/errors.hpp"
#include "polar/geometry.hpp"
#include "polar/pipeline.hpp"
#include "polar/slp.hpp"
#include "polar/zerodim.hpp"
#include "support/helpers.hpp"

// Randomized property suites shared by the gtest suites and the acceptance
// binary. Each returns how many cases ran and the first few failures.
namespace polar::testing {

struct SuiteResult {
  std::string name;
  int cases = 0;
  int skipped = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void fail(const std::string& what) {
    if (failures.size() < 5) failures.push_back(what);
    else if (failures.size() == 5) failures.push_back("...");
  }
};

inline SuiteResult gradient_suite(int cases, std::uint64_t seed) {
  SuiteResult r{"gradient equals symbolic derivative", 0, 0, {}};
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    std::size_t n = 1 + rng.below(3);
    Slp s = random_slp(rng, n, 5 + rng.below(20), 8);
    Slp g = gradient_slp(s);
    MultiPoly f = expand(s).front();
    std::vector<MultiPoly> df;
    for (std::size_t k = 0; k < n; ++k) df.push_back(f.derivative(k));
    for (int t = 0; t < 3; ++t) {
      auto p = random_point(rng, n);
      auto vals = g.evaluate(p);
      if (vals.size() != n + 1 || vals[0] != f.evaluate(p)) {
        r.fail("value mismatch for case " + std::to_string(i));
        continue;
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (vals[k + 1] != df[k].evaluate(p)) r.fail("partial " + std::to_string(k) + " of case " + std::to_string(i));
      }
    }
    ++r.cases;
  }
  return r;
}

/// Random dense hypersurfaces: n = 2 with degree 2 or 3, and n = 3 with degree 2.
inline std::string random_surface(Rng& rng) {
  std::size_t n = rng.below(4) == 0 ? 3 : 2;
  unsigned d = n == 3 ? 2 : 2 + static_cast<unsigned>(rng.below(2));
  auto v = names(n);
  return random_poly(rng, n, d, 5).to_string(v);
}

struct SolveSuites {
  SuiteResult monic_squarefree{"q monic and squarefree", 0, 0, {}};
  SuiteResult coordinate_degrees{"deg p_k < deg q*", 0, 0, {}};
  SuiteResult localization{"gcd(delta(p) mod q, q) = 1", 0, 0, {}};
  SuiteResult bezout{"deg q <= d (d-1)^(n-1)", 0, 0, {}};
  SuiteResult determinism{"byte-identical reports under a fixed seed", 0, 0, {}};
  int rejected = 0;

  std::vector<const SuiteResult*> all() const {
    return {&monic_squarefree, &coordinate_degrees, &localization, &bezout, &determinism};
  }
};

/// Run the pipeline on random inputs until `accepted` solves went through.
/// Inputs violating an assumption (rare for dense random f) are counted
/// and skipped.
inline SolveSuites solve_suites(int accepted, std::uint64_t seed) {
  SolveSuites s;
  Rng rng(seed);
  int attempts = 0;
  while (s.bezout.cases < accepted && attempts < 4 * accepted) {
    ++attempts;
    std::string text = random_surface(rng);
    SolveInput in = input_from_text(text);
    SolveOptions opts;
    opts.seed = rng.next();
    opts.precision = 24;
    std::string tag = text + " (seed " + std::to_string(opts.seed) + ")";
    try {
      SolveReport rep = solve(in, opts);
      const std::size_t n = in.slp.n_vars();
      const int d = expand(in.slp).front().total_degree();

      const auto& q = rep.solved.q;
      const auto& qs = rep.real_part.q;
      if (q != q.monic() || !is_squarefree(q) || qs != qs.monic() || !is_squarefree(qs)) {
        s.monic_squarefree.fail(tag);
      }
      ++s.monic_squarefree.cases;

      for (const auto& pk : rep.real_part.p) {
        bool ok = qs.degree() < 1 ? pk.is_zero() : pk.degree() < qs.degree();
        if (!ok) s.coordinate_degrees.fail(tag);
      }
      ++s.coordinate_degrees.cases;

      PolarSystem ps = build_polar_system(in.slp, n - 1, rep.change);
      if (q.degree() >= 1) {
        UniPoly dp = compose_mod(ps.delta, rep.solved.p, q);
        if (uni_gcd(dp, q).degree() != 0) s.localization.fail(tag);
      }
      ++s.localization.cases;

      long bound = d;
      for (std::size_t k = 1; k < n; ++k) bound *= d - 1;
      if (q.degree() > bound) s.bezout.fail(tag + ": deg q = " + std::to_string(q.degree()));
      ++s.bezout.cases;

      SolveReport again = solve(input_from_text(text), opts);
      if (report_to_json(rep, false) != report_to_json(again, false)) s.determinism.fail(tag);
      ++s.determinism.cases;
    } catch (const AssumptionViolation&) {
      ++s.rejected;
    }
  }
  return s;
}

}  // namespace polar::testing
