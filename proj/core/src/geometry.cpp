#include "polar/geometry.hpp"

#include "polar/errors.hpp"
#include "polar/factor.hpp"
#include "polar/random.hpp"
#include "polar/rings.hpp"

namespace polar {

CoordinateChange CoordinateChange::identity(std::size_t n, std::size_t level) {
  if (level >= n) throw InvalidArgument("level must be below the number of variables");
  CoordinateChange a;
  a.n = n;
  a.level = level;
  a.entries.assign(n - level, std::vector<Rational>(level));
  return a;
}

Rational CoordinateChange::entry(std::size_t k, std::size_t l) const {
  if (k >= n || l >= n) throw InvalidArgument("matrix index out of range");
  if (k == l) return 1;
  if (k >= level && l < level) return entries[k - level][l];
  return 0;
}

std::vector<std::vector<Rational>> CoordinateChange::matrix() const {
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) m[k][l] = entry(k, l);
  }
  return m;
}

Rational CoordinateChange::determinant() const {
  auto m = matrix();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(m[piv][c]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

std::vector<Rational> CoordinateChange::apply(std::span<const Rational> y) const {
  if (y.size() != n) throw InvalidArgument("point dimension mismatch");
  std::vector<Rational> x(y.begin(), y.end());
  for (std::size_t k = level; k < n; ++k) {
    for (std::size_t l = 0; l < level; ++l) x[k] += entries[k - level][l] * y[l];
  }
  return x;
}

std::vector<Rational> CoordinateChange::apply_inverse(std::span<const Rational> x) const {
  if (x.size() != n) throw InvalidArgument("point dimension mismatch");
  std::vector<Rational> y(x.begin(), x.end());
  for (std::size_t k = level; k < n; ++k) {
    for (std::size_t l = 0; l < level; ++l) y[k] -= entries[k - level][l] * x[l];
  }
  return y;
}

std::vector<UniPoly> CoordinateChange::apply(std::span<const UniPoly> y) const {
  if (y.size() != n) throw InvalidArgument("point dimension mismatch");
  std::vector<UniPoly> x(y.begin(), y.end());
  for (std::size_t k = level; k < n; ++k) {
    for (std::size_t l = 0; l < level; ++l) x[k] += entries[k - level][l] * y[l];
  }
  return x;
}

std::vector<Rational> CoordinateChange::transform_linear_form(
    std::span<const Rational> lambda) const {
  if (lambda.size() != n) throw InvalidArgument("linear form dimension mismatch");
  std::vector<Rational> mu(lambda.begin(), lambda.end());
  for (std::size_t l = 0; l < level; ++l) {
    for (std::size_t k = level; k < n; ++k) mu[l] -= lambda[k] * entries[k - level][l];
  }
  return mu;
}

CoordinateChange sample_generic_change(std::size_t n, std::size_t level, std::uint64_t seed,
                                       unsigned height) {
  if (height < 2) throw InvalidArgument("height must be at least 2");
  CoordinateChange a = CoordinateChange::identity(n, level);
  a.seed = seed;
  a.height = height;
  Rng rng(derive_seed(seed, "coordinate-change", n * 1024 + level));
  for (auto& row : a.entries) {
    for (auto& e : row) e = sample_rational(rng, height);
  }
  return a;
}

Slp apply_change(const Slp& f, const CoordinateChange& a) {
  if (f.n_vars() != a.n) {
    throw InvalidArgument("coordinate change has " + std::to_string(a.n) +
                          " variables, SLP has " + std::to_string(f.n_vars()));
  }
  SlpBuilder b(a.n);
  std::vector<std::size_t> x(a.n);
  for (std::size_t k = 0; k < a.n; ++k) {
    x[k] = b.input(k);
    if (k < a.level) continue;
    for (std::size_t l = 0; l < a.level; ++l) {
      const Rational& c = a.entries[k - a.level][l];
      if (sgn(c) != 0) x[k] = b.add(x[k], b.mul(b.constant(c), b.input(l)));
    }
  }
  std::vector<std::size_t> map;
  map.reserve(f.nodes().size());
  for (const auto& node : f.nodes()) {
    switch (node.op) {
      case SlpOp::Input: map.push_back(x[node.lhs]); break;
      case SlpOp::Constant: map.push_back(b.constant(node.value)); break;
      case SlpOp::Add: map.push_back(b.add(map[node.lhs], map[node.rhs])); break;
      case SlpOp::Sub: map.push_back(b.sub(map[node.lhs], map[node.rhs])); break;
      case SlpOp::Mul: map.push_back(b.mul(map[node.lhs], map[node.rhs])); break;
    }
  }
  std::vector<std::size_t> outputs;
  for (std::size_t o : f.outputs()) outputs.push_back(map[o]);
  return std::move(b).finish(std::move(outputs));
}

MultiPoly apply_change(const MultiPoly& f, const CoordinateChange& a) {
  if (f.n_vars() != a.n) throw InvalidArgument("coordinate change dimension mismatch");
  std::vector<MultiPoly> x;
  for (std::size_t k = 0; k < a.n; ++k) {
    MultiPoly xk = MultiPoly::variable(a.n, k);
    for (std::size_t l = 0; k >= a.level && l < a.level; ++l) {
      xk += MultiPoly::variable(a.n, l) * a.entries[k - a.level][l];
    }
    x.push_back(std::move(xk));
  }
  return f.evaluate(MultiPolyRing{a.n}, std::span<const MultiPoly>(x));
}

void require_squarefree(const MultiPoly& f, std::uint64_t seed) {
  if (f.is_constant()) throw InvalidArgument("input polynomial is constant");
  const std::size_t n = f.n_vars();
  const int d = f.total_degree();
  Rng rng(derive_seed(seed, "squarefree-line"));
  std::string witness;
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<Rational> base(n), dir(n);
    for (std::size_t k = 0; k < n; ++k) {
      base[k] = sample_rational(rng, 997);
      dir[k] = sample_rational(rng, 997);
    }
    UniPoly line = f.restrict_to_line(base, dir);
    if (line.degree() != d) continue;
    UniPoly g = uni_gcd(line, line.derivative());
    if (g.is_constant()) return;
    witness = g.monic().to_string("t");
  }
  if (witness.empty()) {
    throw AssumptionViolation("could not find a line of full degree for the squarefree test");
  }
  throw NotSquarefree("input polynomial is not squarefree; repeated factor along a random line",
                      witness);
}

PolarSystem build_polar_system(const Slp& f, std::size_t level, const CoordinateChange& a) {
  const std::size_t n = f.n_vars();
  if (f.outputs().size() != 1) throw InvalidArgument("input SLP must have a single output");
  if (level >= n) throw InvalidArgument("level must be below the number of variables");
  if (a.n != n || a.level != level) {
    throw InvalidArgument("coordinate change does not match the requested level");
  }
  Slp gradient = gradient_slp(apply_change(f, a));
  std::vector<MultiPoly> polys = expand(gradient);
  require_squarefree(polys[0], a.seed);
  PolarSystem ps{level, n - level - 1, a, std::move(gradient), {}, {}, MultiPoly(n)};
  ps.equations.assign(polys.begin(), polys.begin() + static_cast<std::ptrdiff_t>(level + 1));
  ps.partials.assign(polys.begin() + 1, polys.end());
  ps.delta = sum_of_squares(ps.partials, n);
  return ps;
}

namespace {

// Rank of a matrix over the field Q[U]/(h), h irreducible.
std::size_t rank_mod(std::vector<std::vector<UniPoly>> m, const UniPoly& h) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    auto inv = inverse_mod(m[rank][c], h);
    if (!inv) throw Error("nonzero element is not invertible modulo an irreducible factor");
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      UniPoly f = rem(m[r][c] * *inv, h);
      for (std::size_t k = c; k < cols; ++k) m[r][k] = rem(m[r][k] - f * m[rank][k], h);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

RankCheck check_max_rank(std::span<const MultiPoly> equations, const MultiPoly& delta,
                         const UnivariateRepresentation& ur) {
  const std::size_t n = delta.n_vars();
  VerifyResult pre = verify_representation(ur, equations, MultiPoly::constant(n, 1));
  if (!pre) {
    throw InvalidArgument("representation is unverified: check (" + check_label(pre.failed) +
                          ") " + pre.detail);
  }
  RankCheck out;
  const UniPoly& q = ur.q;
  if (q.degree() < 1) {
    out.max_rank = out.delta_unit = true;
    return out;
  }
  UniPoly g = uni_gcd(compose_mod(delta, ur.p, q), q);
  out.delta_unit = g.is_constant();
  if (!out.delta_unit) out.detail = "gcd(delta(p), q) = " + g.to_string();

  out.max_rank = true;
  for (const auto& fac : factor_over_Q(q)) {
    const UniPoly& h = fac.poly;
    std::vector<std::vector<UniPoly>> jac;
    for (const auto& e : equations) {
      std::vector<UniPoly> row;
      for (std::size_t k = 0; k < n; ++k) row.push_back(compose_mod(e.derivative(k), ur.p, h));
      jac.push_back(std::move(row));
    }
    std::size_t rank = rank_mod(std::move(jac), h);
    if (rank < equations.size()) {
      out.max_rank = false;
      if (!out.detail.empty()) out.detail += "; ";
      out.detail += "Jacobian has rank " + std::to_string(rank) + " modulo " + h.to_string();
    }
  }
  return out;
}

RankCheck check_max_rank(const PolarSystem& ps, const UnivariateRepresentation& ur) {
  if (ps.free_count != 0) {
    throw InvalidArgument("rank check needs a zero-dimensional level; specialize first");
  }
  return check_max_rank(ps.equations, ps.delta, ur);
}

}  // namespace polar
