#include "polar/zerodim.hpp"

#include <map>

#include "polar/errors.hpp"
#include "polar/groebner.hpp"
#include "polar/random.hpp"
#include "polar/rings.hpp"

namespace polar {

UniPoly compose_mod(const MultiPoly& g, std::span<const UniPoly> p, const UniPoly& q) {
  if (q.degree() < 1) return {};
  QuotientRing ring(q);
  std::vector<UniPoly> reduced;
  reduced.reserve(p.size());
  for (const auto& pk : p) reduced.push_back(ring.reduce(pk));
  return g.evaluate(ring, std::span<const UniPoly>(reduced));
}

std::string check_label(RepresentationCheck c) {
  switch (c) {
    case RepresentationCheck::None: return "";
    case RepresentationCheck::Equations: return "a";
    case RepresentationCheck::LinearForm: return "b";
    case RepresentationCheck::Localization: return "c";
    case RepresentationCheck::SquarefreeMonic: return "d";
  }
  return "";
}

VerifyResult verify_representation(const UnivariateRepresentation& ur,
                                   std::span<const MultiPoly> polys, const MultiPoly& delta) {
  std::size_t n = delta.n_vars();
  if (ur.p.size() != n || ur.u_coeffs.size() != n) {
    throw InvalidArgument("representation has " + std::to_string(ur.p.size()) +
                          " coordinates, system has " + std::to_string(n));
  }
  const UniPoly& q = ur.q;
  if (q.is_zero()) return {RepresentationCheck::SquarefreeMonic, "q is the zero polynomial"};

  for (std::size_t k = 0; k < polys.size(); ++k) {
    UniPoly r = compose_mod(polys[k], ur.p, q);
    if (!r.is_zero()) {
      return {RepresentationCheck::Equations,
              "equation " + std::to_string(k) + " leaves remainder " + r.to_string()};
    }
  }

  if (q.degree() >= 1) {
    UniPoly lin;
    for (std::size_t k = 0; k < n; ++k) lin += ur.u_coeffs[k] * ur.p[k];
    UniPoly diff = rem(lin - UniPoly::variable(), q);
    if (!diff.is_zero()) {
      return {RepresentationCheck::LinearForm, "u(p) - U = " + diff.to_string() + " mod q"};
    }
    UniPoly d = compose_mod(delta, ur.p, q);
    UniPoly g = uni_gcd(d, q);
    if (!g.is_constant()) {
      return {RepresentationCheck::Localization, "gcd(delta(p), q) = " + g.to_string()};
    }
  }

  if (q.leading() != 1) return {RepresentationCheck::SquarefreeMonic, "q is not monic"};
  if (!is_squarefree(q)) return {RepresentationCheck::SquarefreeMonic, "q is not squarefree"};
  for (std::size_t k = 0; k < n; ++k) {
    if (ur.p[k].degree() >= q.degree()) {
      return {RepresentationCheck::SquarefreeMonic,
              "p_" + std::to_string(k + 1) + " has degree >= deg q"};
    }
  }
  return {};
}

namespace {

using Vec = std::vector<Rational>;

// Row echelon accumulator over Q that remembers how each stored row is
// combined from the vectors inserted so far.
class SpanTracker {
 public:
  explicit SpanTracker(std::size_t dim) : dim_(dim) {}

  // Express v in the span of inserted vectors; nullopt if independent.
  std::optional<Vec> express(const Vec& v) const {
    Vec x = v;
    Vec coef(count_);
    reduce(x, coef);
    for (const auto& c : x) {
      if (sgn(c) != 0) return std::nullopt;
    }
    return coef;
  }

  // Insert v, returning its combination over earlier vectors if dependent.
  std::optional<Vec> insert(const Vec& v) {
    Vec x = v;
    Vec coef(count_ + 1);
    reduce(x, coef);
    std::size_t pivot = dim_;
    for (std::size_t k = 0; k < dim_; ++k) {
      if (sgn(x[k]) != 0) {
        pivot = k;
        break;
      }
    }
    if (pivot == dim_) {
      coef.resize(count_);
      return coef;
    }
    // x = v - sum coef_j v_j
    Vec comb(count_ + 1);
    for (std::size_t j = 0; j < count_; ++j) comb[j] = -coef[j];
    comb[count_] = 1;
    rows_.push_back({std::move(x), pivot, std::move(comb)});
    ++count_;
    return std::nullopt;
  }

 private:
  struct Row {
    Vec v;
    std::size_t pivot;
    Vec comb;
  };

  void reduce(Vec& x, Vec& coef) const {
    for (const auto& row : rows_) {
      if (sgn(x[row.pivot]) == 0) continue;
      Rational f = x[row.pivot] / row.v[row.pivot];
      for (std::size_t k = row.pivot; k < dim_; ++k) {
        if (sgn(row.v[k]) != 0) x[k] -= f * row.v[k];
      }
      for (std::size_t j = 0; j < row.comb.size(); ++j) {
        if (sgn(row.comb[j]) != 0) coef[j] += f * row.comb[j];
      }
    }
  }

  std::size_t dim_;
  std::size_t count_ = 0;
  std::vector<Row> rows_;
};

MultiPoly extend_vars(const MultiPoly& p, std::size_t n_new) {
  MultiPoly out(n_new);
  for (const auto& [e, c] : p.terms()) {
    Exponent x = e;
    x.resize(n_new, 0);
    out.add_term(x, c);
  }
  return out;
}

Vec mat_vec(const std::vector<Vec>& columns, const Vec& v) {
  std::size_t dim = v.size();
  Vec out(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    if (sgn(v[j]) == 0) continue;
    for (std::size_t i = 0; i < dim; ++i) {
      if (sgn(columns[j][i]) != 0) out[i] += columns[j][i] * v[j];
    }
  }
  return out;
}

UniPoly from_coefficients(const Vec& c) { return UniPoly(Vec(c)); }

}  // namespace

ZeroDimSolution solve_zero_dim(std::span<const MultiPoly> polys, const MultiPoly& delta,
                               std::uint64_t seed, const ZeroDimOptions& options) {
  const std::size_t n = delta.n_vars();
  for (const auto& g : polys) {
    if (g.n_vars() != n) throw InvalidArgument("system polynomials disagree on variable count");
  }
  if (options.linear_form && options.linear_form->size() != n) {
    throw InvalidArgument("linear form has wrong length");
  }

  // Rabinowitsch: t (last variable) inverts delta.
  std::vector<MultiPoly> gens;
  for (const auto& g : polys) gens.push_back(extend_vars(g, n + 1));
  {
    MultiPoly td = extend_vars(delta, n + 1) * MultiPoly::variable(n + 1, n);
    td -= MultiPoly::constant(n + 1, Rational(1));
    gens.push_back(std::move(td));
  }
  gb::GroebnerBasis basis = gb::buchberger(gens, gb::Order::GrevLex);

  Rng rng(derive_seed(seed, "separating-form"));
  auto next_form = [&]() {
    if (options.linear_form) return *options.linear_form;
    Vec lambda(n);
    for (std::size_t k = 0; k + 1 < n; ++k) lambda[k] = sample_rational(rng, options.height);
    if (n > 0) lambda[n - 1] = 1;
    return lambda;
  };

  ZeroDimSolution sol;
  if (basis.is_unit()) {
    sol.rep.u_coeffs = next_form();
    sol.rep.q = UniPoly::constant(1);
    sol.rep.p.assign(n, UniPoly());
    sol.attempts = 1;
    return sol;
  }
  if (!basis.is_zero_dimensional()) {
    throw PositiveDimensional("critical system is positive-dimensional (dimension " +
                              std::to_string(basis.dimension()) + ")");
  }

  const auto standard = basis.standard_monomials();
  const std::size_t dim = standard.size();
  sol.quotient_dimension = dim;
  std::map<std::array<std::uint16_t, gb::kMaxVars>, std::size_t> index;
  for (std::size_t j = 0; j < dim; ++j) index.emplace(standard[j].e, j);
  auto to_vec = [&](const gb::Polynomial& p) {
    Vec v(dim);
    for (const auto& t : p.terms) v[index.at(t.m.e)] = t.c;
    return v;
  };

  // mult[k][j] = normal form of X_k * standard[j]
  std::vector<std::vector<Vec>> mult(n, std::vector<Vec>(dim));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < dim; ++j) {
      gb::Monomial m = standard[j];
      ++m.e[k];
      ++m.degree;
      gb::Polynomial p;
      p.terms.push_back({m, Rational(1)});
      mult[k][j] = to_vec(basis.normal_form(std::move(p)));
    }
  }
  const std::size_t one = index.at(gb::Monomial{}.e);

  std::string witness;
  unsigned budget = options.linear_form ? 1 : std::max(1u, options.retry_budget);
  for (unsigned attempt = 0; attempt < budget; ++attempt) {
    ++sol.attempts;
    Vec lambda = next_form();
    std::vector<Vec> mu(dim, Vec(dim));
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(lambda[k]) == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t i = 0; i < dim; ++i) {
          if (sgn(mult[k][j][i]) != 0) mu[j][i] += lambda[k] * mult[k][j][i];
        }
      }
    }

    SpanTracker span(dim);
    Vec power(dim);
    power[one] = 1;
    UniPoly q;
    for (std::size_t k = 0; k <= dim; ++k) {
      if (auto dep = span.insert(power)) {
        Vec c(k + 1);
        for (std::size_t j = 0; j < k; ++j) c[j] = -(*dep)[j];
        c[k] = 1;
        q = from_coefficients(c);
        break;
      }
      if (k < dim) power = mat_vec(mu, power);
    }
    if (static_cast<std::size_t>(q.degree()) < dim) {
      witness = "minimal polynomial of u has degree " + std::to_string(q.degree()) +
                " but the quotient algebra has dimension " + std::to_string(dim);
      continue;
    }
    if (!is_squarefree(q)) {
      throw NotRadical("saturated critical ideal is not radical (eliminant " + q.to_string() +
                       " has repeated factors)");
    }
    sol.rep.u_coeffs = lambda;
    sol.rep.q = q;
    sol.rep.p.clear();
    for (std::size_t k = 0; k < n; ++k) {
      Vec coord(dim);
      for (std::size_t i = 0; i < dim; ++i) coord[i] = mult[k][one][i];
      auto c = span.express(coord);
      if (!c) throw Error("coordinate outside the power basis of a cyclic algebra");
      sol.rep.p.push_back(from_coefficients(*c));
    }
    return sol;
  }
  throw SeparationFailure("no separating linear form found after " +
                          std::to_string(sol.attempts) + " attempts; last collision: " + witness);
}

}  // namespace polar
