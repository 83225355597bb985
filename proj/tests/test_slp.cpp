#include <gtest/gtest.h>

#include "polar/errors.hpp"
#include "polar/rings.hpp"
#include "polar/slp.hpp"
#include "support/helpers.hpp"

using namespace polar;

namespace {

std::vector<std::string> x12() { return {"x1", "x2"}; }

}  // namespace

TEST(Parse, CircleCounts) {
  auto v = x12();
  ParsedPolynomial pp = parse_poly("x1^2 + x2^2 - 1", v);
  EXPECT_EQ(pp.poly.term_count(), 3u);
  EXPECT_EQ(slp_metrics(pp.slp).nonscalar_size, 2u);
}

TEST(Parse, Binomial) {
  auto v = x12();
  EXPECT_EQ(parse_poly("(x1+x2)^2", v).poly, parse_poly("x1^2 + 2*x1*x2 + x2^2", v).poly);
}

TEST(Parse, Errors) {
  auto v = x12();
  try {
    parse_poly("x1 + * 2", v);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 5u);
  }
  EXPECT_THROW(parse_poly("x1 + x3", v), ParseError);
  EXPECT_THROW(parse_poly("x1^-2", v), ParseError);
  EXPECT_THROW(parse_poly("(x1 + 1", v), ParseError);
  EXPECT_THROW(parse_poly("x1 / x2", v), ParseError);
  EXPECT_THROW(parse_poly("", v), ParseError);
}

TEST(Parse, RationalLiteralsAndDivisionByConstants) {
  auto v = x12();
  EXPECT_EQ(parse_poly("x1/2 + 3/4", v).poly, parse_poly("(2*x1 + 3)/4", v).poly);
  EXPECT_EQ(parse_poly("-x1^2", v).poly, parse_poly("0 - x1*x1", v).poly);
}

TEST(Parse, DetectVariablesNaturalOrder) {
  auto v = detect_variables("x10 + x2*x1 - y");
  std::vector<std::string> expect{"x1", "x2", "x10", "y"};
  EXPECT_EQ(v, expect);
}

TEST(Eval, Examples) {
  auto v = x12();
  Slp s = parse_poly("x1^2 + x2^2 - 1", v).slp;
  std::vector<Rational> p{make_rational(3, 5), make_rational(4, 5)};
  EXPECT_EQ(s.evaluate(p).front(), 0);
  std::vector<Rational> q{Rational(1), Rational(1)};
  EXPECT_EQ(s.evaluate(q).front(), 1);
  ModularRing ring(10007);
  std::vector<std::uint64_t> m{2, 3};
  EXPECT_EQ(s.evaluate(ring, std::span<const std::uint64_t>(m)).front(), 12u);
  std::vector<Rational> bad{Rational(1)};
  EXPECT_THROW(s.evaluate(bad), InvalidArgument);
}

TEST(Gradient, Examples) {
  auto v = x12();
  Slp g = gradient_slp(parse_poly("x1^2 + x2^2 - 1", v).slp);
  std::vector<Rational> p{make_rational(1, 2), make_rational(1, 3)};
  std::vector<Rational> expect{make_rational(-23, 36), Rational(1), make_rational(2, 3)};
  EXPECT_EQ(g.evaluate(p), expect);

  std::vector<std::string> v3{"x1", "x2", "x3"};
  Slp h = gradient_slp(parse_poly("x1*x2*x3", v3).slp);
  std::vector<Rational> p3{Rational(1), Rational(2), Rational(3)};
  std::vector<Rational> e3{Rational(6), Rational(6), Rational(3), Rational(2)};
  EXPECT_EQ(h.evaluate(p3), e3);

  SlpBuilder b(1);
  auto x = b.input(0);
  auto sq = b.mul(x, x);
  Slp two = std::move(b).finish({x, sq});
  EXPECT_THROW(gradient_slp(two), InvalidArgument);
}

TEST(Metrics, Examples) {
  std::vector<std::string> v{"x", "y"};
  EXPECT_EQ(slp_metrics(parse_poly("x*x + y*y - 1", v).slp).nonscalar_size, 2u);
  EXPECT_EQ(slp_metrics(parse_poly("((x+y)^2)^2", v).slp).nonscalar_size, 2u);
  EXPECT_EQ(slp_metrics(parse_poly("3*x + 2*y - 1", v).slp).nonscalar_size, 0u);
}

TEST(Slp, RejectsForwardReferences) {
  std::vector<SlpNode> nodes{{SlpOp::Input, 0, 0, Rational(0)}, {SlpOp::Add, 0, 2, Rational(0)}};
  EXPECT_THROW(Slp(1, nodes, {1}), InvalidArgument);
  EXPECT_THROW(Slp(1, {{SlpOp::Input, 3, 0, Rational(0)}}, {0}), InvalidArgument);
  EXPECT_THROW(Slp(1, {{SlpOp::Input, 0, 0, Rational(0)}}, {}), InvalidArgument);
}

TEST(Builder, ConstantFolding) {
  SlpBuilder b(1);
  auto two = b.constant(Rational(2));
  auto three = b.constant(Rational(3));
  auto six = b.mul(two, three);
  EXPECT_TRUE(b.is_constant(six));
  EXPECT_EQ(b.constant_value(six), 6);
  auto x = b.input(0);
  EXPECT_EQ(b.mul(x, b.constant(Rational(1))), x);
  EXPECT_EQ(b.add(x, b.constant(Rational(0))), x);
  EXPECT_TRUE(b.is_constant(b.mul(x, b.constant(Rational(0)))));
}

// Symbolic oracle: expand, differentiate the sparse polynomial, compare.
TEST(GradientProperty, MatchesSymbolicDerivative) {
  Rng rng(101);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 1 + rng.below(3);
    Slp s = polar::testing::random_slp(rng, n, 5 + rng.below(20), 8);
    Slp g = gradient_slp(s);
    ASSERT_EQ(g.outputs().size(), n + 1);
    MultiPoly f = expand(s).front();
    for (int t = 0; t < 5; ++t) {
      auto p = polar::testing::random_point(rng, n);
      auto vals = g.evaluate(p);
      EXPECT_EQ(vals[0], f.evaluate(p));
      for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(vals[k + 1], f.derivative(k).evaluate(p));
    }
    for (const auto& node : g.nodes()) {
      EXPECT_TRUE(node.op == SlpOp::Input || node.op == SlpOp::Constant ||
                  node.op == SlpOp::Add || node.op == SlpOp::Sub || node.op == SlpOp::Mul);
    }
  }
}

TEST(GradientProperty, NonscalarSizeBound) {
  Rng rng(103);
  int tested = 0;
  while (tested < 100) {
    std::size_t n = 1 + rng.below(4);
    Slp s = polar::testing::random_slp(rng, n, 10 + rng.below(80), 64);
    std::size_t l = slp_metrics(s).nonscalar_size;
    if (l == 0 || l > 50) continue;
    std::size_t lg = slp_metrics(gradient_slp(s)).nonscalar_size;
    EXPECT_LE(lg, 5 * l + n);
    EXPECT_LE(lg, 5 * l) << "ratio above 5";
    ++tested;
  }
}

TEST(ParseProperty, ExpansionAgreesWithProgram) {
  Rng rng(107);
  std::vector<std::string> v{"x", "y", "z"};
  const char* inputs[] = {"(x+y)^3 - z*(x - 2/3)", "x*y*z - (x^2 + 1)*(y - z)^2",
                          "((x^2+y^2+z^2+3)^2 - 16*(x^2+y^2))", "-(x - y/5)^4 + 7",
                          "x^0 + y^1*z^2"};
  for (const char* text : inputs) {
    ParsedPolynomial pp = parse_poly(text, v);
    for (int t = 0; t < 10; ++t) {
      auto p = polar::testing::random_point(rng, 3);
      EXPECT_EQ(pp.poly.evaluate(p), pp.slp.evaluate(p).front()) << text;
    }
    EXPECT_EQ(expand(pp.slp).front(), pp.poly);
  }
}

TEST(Json, RoundTripAndDigest) {
  Rng rng(109);
  for (int i = 0; i < 50; ++i) {
    Slp s = polar::testing::random_slp(rng, 2, 12, 6);
    std::string text = slp_to_json(s);
    Slp back = slp_from_json(text);
    EXPECT_EQ(slp_to_json(back), text);
    EXPECT_EQ(slp_digest(back), slp_digest(s));
    EXPECT_EQ(slp_digest(s).size(), 16u);
  }
  Slp circle = polar::testing::slp("x^2 + y^2 - 1", 2);
  Slp other = polar::testing::slp("x^2 + y^2 - 2", 2);
  EXPECT_NE(slp_digest(circle), slp_digest(other));
  EXPECT_THROW(slp_from_json("{\"n_vars\": 1, \"nodes\": [[\"div\", 0, 0]], \"outputs\": [0]}"),
               InvalidArgument);
  EXPECT_THROW(slp_from_json("not json"), InvalidArgument);
}

TEST(Expand, FromMultiPolyRoundTrip) {
  MultiPoly f = polar::testing::poly("x^3*y - 2*x*y^2 + 5/7", 2);
  EXPECT_EQ(expand(slp_from_multipoly(f)).front(), f);
}
