#include <gtest/gtest.h>

#include "polar/errors.hpp"
#include "polar/factor.hpp"
#include "polar/realpart.hpp"
#include "polar/sturm.hpp"
#include "support/helpers.hpp"

using namespace polar;
using polar::testing::poly;
using polar::testing::random_upoly;
using polar::testing::slp;
using polar::testing::upoly;

namespace {

int real_roots(const UniPoly& p) {
  return sturm_root_count(p, Endpoint::neg_infinity(), Endpoint::pos_infinity());
}

}  // namespace

TEST(CleanRealPart, Examples) {
  EXPECT_EQ(clean_real_part(upoly({-1, 0, 0, 0, 1})), upoly({-1, 0, 1}));
  EXPECT_EQ(clean_real_part(upoly({1, 0, 1})), upoly({1}));
  UniPoly two = upoly({9, 0, -10, 0, 1});
  EXPECT_EQ(clean_real_part(two), two);
  EXPECT_EQ(clean_real_part(upoly({1})), upoly({1}));
  EXPECT_THROW(clean_real_part(UniPoly()), InvalidArgument);
  EXPECT_THROW(clean_real_part(upoly({1, 2, 1})), InvalidArgument);
}

TEST(CleanRealPart, SplitInvariants) {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    // product of random quadratics and linears, some without real roots
    UniPoly q = upoly({1});
    int parts = 1 + static_cast<int>(rng.below(3));
    for (int k = 0; k < parts; ++k) q *= random_upoly(rng, 1 + static_cast<unsigned>(rng.below(2)), 6);
    if (q.degree() < 1 || !is_squarefree(q)) continue;
    RealPartSplit s = split_real_part(q);
    UniPoly again = s.q_star;
    for (const auto& d : s.discarded) again *= d;
    EXPECT_EQ(again.monic(), q.monic());
    for (const auto& k : s.kept) EXPECT_GT(real_roots(k), 0);
    for (const auto& d : s.discarded) EXPECT_EQ(real_roots(d), 0);
    EXPECT_EQ(real_roots(s.q_star), real_roots(q));
    EXPECT_EQ(s.q_star, s.q_star.monic());
  }
}

TEST(Specialize, SphereLevelOne) {
  Slp f = slp("x^2 + y^2 + z^2 - 1", 3);
  PolarSystem ps = build_polar_system(f, 1, CoordinateChange::identity(3, 1));
  ASSERT_EQ(ps.free_count, 1u);
  SpecializationChoice sc{{Rational(1, 3)}, 0, 0};
  SpecializedSystem s = specialize_free_variables(ps, sc);
  ASSERT_EQ(s.equations.size(), 2u);
  EXPECT_EQ(s.equations[0], poly("x^2 + y^2 - 8/9", 2));
  EXPECT_EQ(s.equations[1], MultiPoly::constant(2, Rational(2, 3)));
}

TEST(Specialize, CircleLevelZero) {
  Slp f = slp("x^2 + y^2 - 1", 2);
  PolarSystem ps = build_polar_system(f, 0, CoordinateChange::identity(2, 0));
  SpecializedSystem s = specialize_free_variables(ps, {{Rational(1, 2)}, 0, 0});
  ASSERT_EQ(s.equations.size(), 1u);
  EXPECT_EQ(s.equations[0], poly("x^2 - 3/4", 1));
  EXPECT_THROW(specialize_free_variables(ps, {{}, 0, 0}), InvalidArgument);
}

TEST(Specialize, SamplingIsSeeded) {
  auto a = sample_specialization(3, 5);
  auto b = sample_specialization(3, 5);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.values.size(), 3u);
  EXPECT_NE(sample_specialization(3, 6).values, a.values);
}

TEST(Prune, Examples) {
  UnivariateRepresentation ur;
  ur.u_coeffs = {Rational(0), Rational(1)};
  ur.q = upoly({-1, 0, 0, 0, 1});
  ur.p = {UniPoly(), upoly({0, 1})};
  auto pr = prune_representation(ur, upoly({-1, 0, 1}));
  EXPECT_EQ(pr.q, upoly({-1, 0, 1}));
  EXPECT_EQ(pr.p[1], upoly({0, 1}));

  ur.p = {upoly({0, 0, 0, 1}), upoly({0, 1})};  // U^3 = U mod U^2 - 1
  EXPECT_EQ(prune_representation(ur, upoly({-2, 0, 2})).p[0], upoly({0, 1}));

  auto none = prune_representation(ur, upoly({1}));
  EXPECT_TRUE(none.empty());
  EXPECT_TRUE(none.p[0].is_zero());
  EXPECT_THROW(prune_representation(ur, upoly({-2, 1})), InvalidArgument);
}

TEST(DegreeProfile, Examples) {
  {
    Slp f = slp("(x^2 + y^2 - 1)*(x^2 + y^2 + 1)", 2);
    DegreeProfile d = degree_profile(f, 1, 3);
    EXPECT_EQ(d.affine_degree, 4u);
    EXPECT_EQ(d.real_degree, 2u);
  }
  {
    Slp f = slp("x^2 + y^2 + z^2 - 1", 3);
    DegreeProfile d = degree_profile(f, 1, 3);
    EXPECT_EQ(d.affine_degree, 2u);
    EXPECT_EQ(d.real_degree, 2u);
    EXPECT_EQ(d.eta.size(), 1u);
  }
  {
    Slp f = slp("x^2 + y^2 - 1", 2);
    DegreeProfile d = degree_profile(f, 0, 3);
    EXPECT_EQ(d.affine_degree, 2u);
    EXPECT_EQ(d.real_degree, 2u);
  }
}

TEST(DegreeProfile, Reproducible) {
  Slp f = slp("x^2 + y^2 + z^2 - 1", 3);
  for (std::size_t level = 0; level < 3; ++level) {
    DegreeProfile a = degree_profile(f, level, 11);
    DegreeProfile b = degree_profile(f, level, 11);
    EXPECT_EQ(a.q, b.q);
    EXPECT_EQ(a.eta, b.eta);
    EXPECT_EQ(a.q_star, b.q_star);
    EXPECT_EQ(a.q_star, clean_real_part(a.q));
  }
}

TEST(SolveTopLevel, CertifiesAndRejects) {
  CertifiedLevel c = solve_top_level(slp("x^2 + y^2 - 1", 2), 1);
  EXPECT_GE(c.attempts, 1u);
  EXPECT_EQ(c.solution.rep.q.degree(), 2);
  EXPECT_TRUE(check_max_rank(c.system, c.solution.rep));
  EXPECT_THROW(solve_top_level(slp("(x^2 + y^2 - 1)^2", 2), 1), NotSquarefree);
}
