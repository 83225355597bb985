#include "polar/realpart.hpp"

#include "polar/errors.hpp"
#include "polar/factor.hpp"
#include "polar/random.hpp"
#include "polar/realroots.hpp"
#include "polar/sturm.hpp"

namespace polar {

SpecializationChoice sample_specialization(std::size_t r, std::uint64_t seed, unsigned height) {
  SpecializationChoice sc{{}, seed, height};
  Rng rng(derive_seed(seed, "specialization", r));
  for (std::size_t k = 0; k < r; ++k) sc.values.push_back(sample_rational(rng, height));
  return sc;
}

SpecializedSystem specialize_free_variables(const PolarSystem& ps,
                                            const SpecializationChoice& sc) {
  if (sc.values.size() != ps.free_count) {
    throw InvalidArgument("specialization has " + std::to_string(sc.values.size()) +
                          " values for " + std::to_string(ps.free_count) + " free variables");
  }
  SpecializedSystem out;
  for (const auto& e : ps.equations) out.equations.push_back(e.specialize_leading(sc.values));
  out.delta = ps.delta.specialize_leading(sc.values);
  return out;
}

RealPartSplit split_real_part(const UniPoly& q) {
  if (q.is_zero()) throw InvalidArgument("cannot clean the zero polynomial");
  if (!is_squarefree(q)) throw InvalidArgument("eliminant is not squarefree");
  RealPartSplit out;
  if (q.degree() == 0) return out;
  for (const auto& f : factor_over_Q(q)) {
    if (sturm_root_count(f.poly, Endpoint::neg_infinity(), Endpoint::pos_infinity()) > 0) {
      out.q_star *= f.poly;
      out.kept.push_back(f.poly);
    } else {
      out.discarded.push_back(f.poly);
    }
  }
  return out;
}

UniPoly clean_real_part(const UniPoly& q) { return split_real_part(q).q_star; }

UnivariateRepresentation prune_representation(const UnivariateRepresentation& ur,
                                              const UniPoly& q_star) {
  if (q_star.is_zero() || !divides(q_star, ur.q)) {
    throw InvalidArgument(q_star.to_string() + " does not divide " + ur.q.to_string());
  }
  UnivariateRepresentation out = ur;
  out.q = q_star.monic();
  for (auto& pk : out.p) pk = out.q.degree() < 1 ? UniPoly() : rem(pk, out.q);
  return out;
}

namespace {

// Failure of a genericity certificate: the caller resamples.
bool is_certificate_failure(const AssumptionViolation& e) {
  return dynamic_cast<const NotSquarefree*>(&e) == nullptr;
}

}  // namespace

CertifiedLevel solve_top_level(const Slp& f, std::uint64_t seed,
                               const GenericityOptions& options) {
  const std::size_t n = f.n_vars();
  if (n == 0) throw InvalidArgument("input has no variables");
  ZeroDimOptions zd{options.height, options.retry_budget, std::nullopt};
  std::string last = "no attempt made";
  std::vector<std::string> rejections;
  for (unsigned attempt = 0; attempt < options.retry_budget; ++attempt) {
    CoordinateChange a =
        sample_generic_change(n, n - 1, derive_seed(seed, "top-change", attempt), options.height);
    PolarSystem ps = build_polar_system(f, n - 1, a);
    try {
      ZeroDimSolution sol =
          solve_zero_dim(ps.equations, ps.delta, derive_seed(seed, "top-form", attempt), zd);
      VerifyResult v = verify_representation(sol.rep, ps.equations, ps.delta);
      if (!v) {
        last = "check (" + check_label(v.failed) + ") failed: " + v.detail;
      } else if (RankCheck rk = check_max_rank(ps, sol.rep); !rk) {
        last = "rank check failed: " + rk.detail;
      } else {
        return {std::move(ps), std::move(sol), attempt + 1, std::move(rejections)};
      }
    } catch (const AssumptionViolation& e) {
      if (!is_certificate_failure(e)) throw;
      last = e.what();
    }
    rejections.push_back(last);
  }
  throw RetryExhausted("no certified coordinate change within " +
                           std::to_string(options.retry_budget) + " attempts",
                       last);
}

namespace {

std::vector<std::vector<Rational>> guide_points(const Slp& f, std::uint64_t seed,
                                                const GenericityOptions& options) {
  CertifiedLevel top = solve_top_level(f, derive_seed(seed, "guide"), options);
  UnivariateRepresentation rep =
      prune_representation(top.solution.rep, clean_real_part(top.solution.rep.q));
  std::vector<std::vector<Rational>> out;
  for (const auto& pt : extract_points(rep, 16)) {
    std::vector<Rational> y;
    for (const auto& c : pt.coords) y.push_back(c.midpoint());
    out.push_back(top.system.change.apply(y));
  }
  return out;
}

}  // namespace

DegreeProfile degree_profile(const Slp& f, std::size_t level, std::uint64_t seed,
                             const ProfileOptions& options) {
  const std::size_t n = f.n_vars();
  if (level >= n) throw InvalidArgument("level must be below the number of variables");
  const auto& gen = options.genericity;
  if (level + 1 == n) {
    CertifiedLevel top = solve_top_level(f, seed, gen);
    DegreeProfile prof;
    prof.level = level;
    prof.q = top.solution.rep.q;
    prof.q_star = clean_real_part(prof.q);
    prof.affine_degree = static_cast<std::size_t>(std::max(0, prof.q.degree()));
    prof.real_degree = static_cast<std::size_t>(std::max(0, prof.q_star.degree()));
    prof.attempts = top.attempts;
    return prof;
  }

  const std::size_t r = n - level - 1;
  std::vector<std::vector<Rational>> guides =
      options.guides ? *options.guides : guide_points(f, seed, gen);
  Rng rng(derive_seed(seed, "eta", level));
  auto next_eta = [&](const CoordinateChange& a) {
    std::vector<Rational> eta(r);
    if (guides.empty()) {
      for (auto& e : eta) e = sample_rational(rng, gen.height);
      return eta;
    }
    auto ya = a.apply_inverse(guides[rng.below(guides.size())]);
    auto yb = a.apply_inverse(guides[rng.below(guides.size())]);
    Rational t = make_rational(static_cast<long>(1 + rng.below(63)), 64);
    // Rounded to a short dyadic: guide coordinates carry long denominators
    // that would otherwise swell every coefficient of the sliced system.
    for (std::size_t k = 0; k < r; ++k) {
      Rational v = ((1 - t) * ya[k] + t * yb[k]) * 256;
      Integer fl;
      mpz_fdiv_q(fl.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
      eta[k] = make_rational(fl, 256);
    }
    return eta;
  };

  ZeroDimOptions zd{gen.height, gen.retry_budget, std::nullopt};
  std::string last = "no attempt made";
  for (unsigned attempt = 0; attempt < gen.retry_budget; ++attempt) {
    CoordinateChange a = sample_generic_change(
        n, level, derive_seed(seed, "profile-change", attempt * 64 + level), gen.height);
    PolarSystem ps = build_polar_system(f, level, a);
    std::optional<DegreeProfile> best;
    for (unsigned s = 0; s < std::max(1u, options.samples); ++s) {
      SpecializationChoice sc{next_eta(a), seed, gen.height};
      SpecializedSystem sp = specialize_free_variables(ps, sc);
      bool inconsistent = false;
      for (std::size_t k = 0; k < sp.equations.size(); ++k) {
        const auto& e = sp.equations[k];
        if (e.is_constant() && !e.is_zero()) {
          last = "equation " + std::to_string(k) + " specializes to the nonzero constant " +
                 to_string(e.constant_term());
          inconsistent = true;
        }
      }
      if (inconsistent) break;
      try {
        ZeroDimSolution sol = solve_zero_dim(
            sp.equations, sp.delta, derive_seed(seed, "profile-form", attempt * 64 + s), zd);
        VerifyResult v = verify_representation(sol.rep, sp.equations, sp.delta);
        if (!v) {
          last = "check (" + check_label(v.failed) + ") failed: " + v.detail;
          continue;
        }
        RankCheck rk = check_max_rank(sp.equations, sp.delta, sol.rep);
        if (!rk) {
          last = "rank check failed: " + rk.detail;
          continue;
        }
        DegreeProfile prof;
        prof.level = level;
        prof.q = sol.rep.q;
        prof.q_star = clean_real_part(prof.q);
        prof.affine_degree = static_cast<std::size_t>(std::max(0, prof.q.degree()));
        prof.real_degree = static_cast<std::size_t>(std::max(0, prof.q_star.degree()));
        prof.eta = sc.values;
        if (!best || prof.real_degree > best->real_degree) best = std::move(prof);
      } catch (const AssumptionViolation& e) {
        if (!is_certificate_failure(e)) throw;
        last = e.what();
      }
    }
    if (best) {
      best->attempts = attempt + 1;
      return *best;
    }
  }
  throw RetryExhausted("degree profile of level " + std::to_string(level) +
                           " not certified within " + std::to_string(gen.retry_budget) +
                           " attempts",
                       last);
}

}  // namespace polar
