// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "polar/errors.hpp"
#include "polar/geometry.hpp"
#include "polar/pipeline.hpp"
#include "polar/zerodim.hpp"
#include "support/properties.hpp"

using namespace polar;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

Rational pow2_neg(unsigned bits) {
  Rational r(1);
  mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), bits);
  r.canonicalize();
  return r;
}

bool widths_ok(const SolveReport& r, unsigned bits) {
  for (const auto& pt : r.points) {
    for (const auto& c : pt.coords) {
      if (c.width() > pow2_neg(bits)) return false;
    }
  }
  return true;
}

bool covered(const SolveReport& r, std::size_t components) {
  return r.coverage && r.coverage->report.pass && r.coverage->report.component_count == components;
}

SolveOptions with_box(const char* box) {
  SolveOptions o;
  o.box = parse_box(box);
  return o;
}

std::string deg(const UniPoly& q) { return std::to_string(std::max(0, q.degree())); }

Outcome circle() {
  Outcome o;
  SolveReport r = solve(input_from_text("x^2 + y^2 - 1"), with_box("-2,2;-2,2"));
  o.require(r.points.size() == 2, std::to_string(r.points.size()) + " points");
  o.require(r.residual_zero, "nonzero residual");
  MultiPoly f = expand(r.input.slp).front();
  o.require(compose_mod(f, r.real_part.p, r.real_part.q).is_zero(), "f(p) mod q* is not zero");
  o.require(covered(r, 1), "coverage");
  o.require(widths_ok(r, 53), "interval width above 2^-53");
  return o;
}

Outcome mixed_circles() {
  Outcome o;
  SolveReport r = solve(input_from_text("(x^2+y^2-1)*(x^2+y^2+1)"), with_box("-2,2;-2,2"));
  o.require(r.solved.q.degree() == 4, "deg q = " + deg(r.solved.q));
  o.require(r.real_part.q.degree() == 2, "deg q* = " + deg(r.real_part.q));
  o.require(!r.profile.empty() && r.profile.back().affine_degree == 4 &&
                r.profile.back().real_degree == 2,
            "profile");
  o.require(r.points.size() == 2, std::to_string(r.points.size()) + " points");
  o.require(covered(r, 1), "coverage");
  return o;
}

Outcome two_circles() {
  Outcome o;
  SolveReport r =
      solve(input_from_text("((x-2)^2 + y^2 - 1)*((x+2)^2 + y^2 - 1)"), with_box("-4,4;-2,2"));
  o.require(r.solved.q.degree() == 4, "deg q = " + deg(r.solved.q));
  o.require(r.split.discarded.empty(), "a factor without real roots");
  o.require(r.points.size() == 4, std::to_string(r.points.size()) + " points");
  o.require(covered(r, 2), "coverage");
  o.require(r.coverage && r.coverage->report.uncovered.empty(), "uncovered component");
  return o;
}

Outcome sphere() {
  Outcome o;
  SolveOptions opts = with_box("-2,2;-2,2;-2,2");
  opts.levels = {1, 2};
  SolveReport r = solve(input_from_text("x^2 + y^2 + z^2 - 1"), opts);
  o.require(r.real_part.q.degree() == 2, "deg q* = " + deg(r.real_part.q));
  o.require(r.points.size() == 2, std::to_string(r.points.size()) + " points");
  if (r.points.size() == 2) {
    for (std::size_t k = 0; k < 3; ++k) {
      Rational s = r.points[0].coords[k].midpoint() + r.points[1].coords[k].midpoint();
      o.require(abs(s) < pow2_neg(40), "points not antipodal");
    }
  }
  bool level1 = false;
  for (const auto& d : r.profile) {
    if (d.level == 1) level1 = d.affine_degree == 2 && d.real_degree == 2;
  }
  o.require(level1, "degree profile at level 1");
  o.require(covered(r, 1), "coverage");
  return o;
}

// Numeric oracle for the torus: the level-2 system says grad f is orthogonal
// to the first two columns of A, i.e. parallel to their cross product w.
// Solve grad f = lambda w, f = 0 by multi-start Newton in doubles.
using V4 = std::array<double, 4>;

void torus_system(const V4& v, const std::array<double, 3>& w, V4& F, std::array<V4, 4>& J) {
  double x = v[0], y = v[1], z = v[2], lam = v[3];
  double s = x * x + y * y + z * z + 3;
  std::array<double, 3> p{x, y, z};
  std::array<double, 3> g{4 * s * x - 32 * x, 4 * s * y - 32 * y, 4 * s * z};
  for (int i = 0; i < 3; ++i) {
    F[i] = g[i] - lam * w[i];
    for (int j = 0; j < 3; ++j) {
      J[i][j] = 8 * p[i] * p[j] + (i == j ? 4 * s - (i < 2 ? 32 : 0) : 0);
    }
    J[i][3] = -w[i];
  }
  F[3] = s * s - 16 * (x * x + y * y);
  for (int j = 0; j < 3; ++j) J[3][j] = g[j];
  J[3][3] = 0;
}

bool newton(V4& v, const std::array<double, 3>& w) {
  for (int it = 0; it < 60; ++it) {
    V4 F;
    std::array<V4, 4> J;
    torus_system(v, w, F, J);
    double norm = 0;
    for (double f : F) norm = std::max(norm, std::abs(f));
    if (norm < 1e-12) return true;
    // Gaussian elimination with partial pivoting on [J | -F]
    std::array<std::array<double, 5>, 4> m;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) m[i][j] = J[i][j];
      m[i][4] = -F[i];
    }
    for (int c = 0; c < 4; ++c) {
      int p = c;
      for (int r = c + 1; r < 4; ++r) {
        if (std::abs(m[r][c]) > std::abs(m[p][c])) p = r;
      }
      if (std::abs(m[p][c]) < 1e-14) return false;
      std::swap(m[p], m[c]);
      for (int r = c + 1; r < 4; ++r) {
        double f = m[r][c] / m[c][c];
        for (int k = c; k < 5; ++k) m[r][k] -= f * m[c][k];
      }
    }
    V4 d;
    for (int r = 3; r >= 0; --r) {
      double acc = m[r][4];
      for (int k = r + 1; k < 4; ++k) acc -= m[r][k] * d[k];
      d[r] = acc / m[r][r];
    }
    for (int k = 0; k < 4; ++k) v[k] += d[k];
    if (std::abs(v[0]) + std::abs(v[1]) + std::abs(v[2]) > 100) return false;
  }
  return false;
}

std::vector<std::array<double, 3>> torus_oracle(const std::array<double, 3>& w) {
  std::vector<std::array<double, 3>> found;
  const int steps = 7;
  for (int i = 0; i < steps; ++i) {
    for (int j = 0; j < steps; ++j) {
      for (int k = 0; k < steps; ++k) {
        V4 v{-3.3 + 6.6 * i / (steps - 1), -3.3 + 6.6 * j / (steps - 1),
             -1.2 + 2.4 * k / (steps - 1), 0};
        double s = v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + 3;
        std::array<double, 3> g{4 * s * v[0] - 32 * v[0], 4 * s * v[1] - 32 * v[1], 4 * s * v[2]};
        double ww = w[0] * w[0] + w[1] * w[1] + w[2] * w[2];
        v[3] = (g[0] * w[0] + g[1] * w[1] + g[2] * w[2]) / ww;
        if (!newton(v, w)) continue;
        std::array<double, 3> pt{v[0], v[1], v[2]};
        bool fresh = true;
        for (const auto& q : found) {
          double d = std::abs(q[0] - pt[0]) + std::abs(q[1] - pt[1]) + std::abs(q[2] - pt[2]);
          if (d < 1e-7) fresh = false;
        }
        if (fresh) found.push_back(pt);
      }
    }
  }
  return found;
}

Outcome torus() {
  Outcome o;
  SolveReport r = solve(input_from_text("(x^2 + y^2 + z^2 + 3)^2 - 16*(x^2 + y^2)"),
                        with_box("-4,4;-4,4;-4,4"));
  o.require(r.points.size() == 4, std::to_string(r.points.size()) + " points");
  o.require(covered(r, 1), "coverage");
  auto a = r.change.matrix();
  std::array<double, 3> c1{a[0][0].get_d(), a[1][0].get_d(), a[2][0].get_d()};
  std::array<double, 3> c2{a[0][1].get_d(), a[1][1].get_d(), a[2][1].get_d()};
  std::array<double, 3> w{c1[1] * c2[2] - c1[2] * c2[1], c1[2] * c2[0] - c1[0] * c2[2],
                          c1[0] * c2[1] - c1[1] * c2[0]};
  auto numeric = torus_oracle(w);
  o.require(numeric.size() == 4, "numeric oracle found " + std::to_string(numeric.size()) + " points");
  for (const auto& pt : r.points) {
    bool match = false;
    for (const auto& q : numeric) {
      double d = 0;
      for (int k = 0; k < 3; ++k) d = std::max(d, std::abs(pt.coords[k].midpoint().get_d() - q[k]));
      if (d < 1e-8) match = true;
    }
    o.require(match, "exact point without numeric match");
  }
  return o;
}

Outcome properties() {
  Outcome o;
  auto note = [&](const polar::testing::SuiteResult& s) {
    o.require(s.cases >= 100, s.name + ": only " + std::to_string(s.cases) + " cases");
    for (const auto& f : s.failures) o.require(false, s.name + ": " + f);
  };
  note(polar::testing::gradient_suite(100, 7));
  auto solves = polar::testing::solve_suites(100, 8);
  for (const auto* s : solves.all()) note(*s);
  if (o.pass) o.detail = "6 suites x >= 100 cases";
  return o;
}

Outcome negative_controls() {
  Outcome o;
  try {
    solve(input_from_text("(x^2 + y^2 - 1)^2"));
    o.require(false, "non-squarefree input accepted");
  } catch (const NotSquarefree& e) {
    o.require(!e.witness().empty(), "rejection without witness");
  }
  SolveReport e = solve(input_from_text("x^2 + y^2 + 1"));
  o.require(e.real_part.q == UniPoly::constant(1) && e.points.empty(), "empty real part");

  MultiPoly f = expand(input_from_text("x^2 + y^2 - 1").slp).front();
  std::vector<MultiPoly> sys{f, f.derivative(0)};
  MultiPoly delta = f.derivative(0) * f.derivative(0) + f.derivative(1) * f.derivative(1);
  UnivariateRepresentation good;
  good.u_coeffs = {Rational(0), Rational(1)};
  good.q = UniPoly(std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});
  good.p = {UniPoly(), UniPoly::variable()};
  o.require(verify_representation(good, sys, delta).ok(), "untampered representation rejected");
  struct Tamper {
    std::function<void(UnivariateRepresentation&, MultiPoly&)> edit;
    RepresentationCheck expected;
  };
  std::vector<Tamper> cases{
      {[](auto& u, auto&) { u.p[0] = UniPoly::variable(); }, RepresentationCheck::Equations},
      {[](auto& u, auto&) { u.u_coeffs = {Rational(0), Rational(2)}; }, RepresentationCheck::LinearForm},
      {[](auto&, auto& d) { d = MultiPoly::variable(2, 1) - MultiPoly::constant(2, Rational(1)); },
       RepresentationCheck::Localization},
      {[](auto& u, auto&) { u.q *= Rational(3); }, RepresentationCheck::SquarefreeMonic},
  };
  for (const auto& t : cases) {
    UnivariateRepresentation u = good;
    MultiPoly d = delta;
    t.edit(u, d);
    VerifyResult v = verify_representation(u, sys, d);
    o.require(v.failed == t.expected, "tamper expected check " + check_label(t.expected) +
                                          ", got '" + check_label(v.failed) + "'");
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0 means untimed
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "circle", 1, circle},
      {2, "mixed circles", 2, mixed_circles},
      {3, "two disjoint circles", 5, two_circles},
      {4, "sphere", 5, sphere},
      {5, "torus", 60, torus},
      {6, "property suites", 0, properties},
      {7, "negative controls", 0, negative_controls},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s) o.require(false, "runtime above " + std::to_string(c.limit_s) + " s");
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s", secs);
    std::printf("%s criterion %d: %s (%s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, timing,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    if (!o.pass) ++failed;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
