#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "polar/rational.hpp"
#include "polar/rings.hpp"
#include "polar/unipoly.hpp"

namespace polar {

using Exponent = std::vector<unsigned>;

/// Sparse polynomial in a fixed number of variables over Q. Terms are keyed
/// by exponent vectors of length n_vars(); zero coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rational>;

  explicit MultiPoly(std::size_t n_vars = 0) : n_(n_vars) {}

  static MultiPoly constant(std::size_t n_vars, const Rational& c);
  static MultiPoly variable(std::size_t n_vars, std::size_t index);

  std::size_t n_vars() const noexcept { return n_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (0 when absent).
  Rational constant_term() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;

  void add_term(const Exponent& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

  MultiPoly pow(unsigned k) const;
  MultiPoly derivative(std::size_t var) const;

  /// Replace variable `var` by the constant c (variable count unchanged).
  MultiPoly substitute(std::size_t var, const Rational& c) const;
  /// Substitute the first values.size() variables and drop them.
  MultiPoly specialize_leading(std::span<const Rational> values) const;

  template <EvaluationRing R>
  typename R::value_type evaluate(const R& ring,
                                  std::span<const typename R::value_type> point) const;
  Rational evaluate(std::span<const Rational> point) const;

  /// f(a + t*b) as a polynomial in t.
  UniPoly restrict_to_line(std::span<const Rational> a,
                           std::span<const Rational> b) const;

  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  std::size_t n_;
  TermMap terms_;
};

template <EvaluationRing R>
typename R::value_type MultiPoly::evaluate(
    const R& ring, std::span<const typename R::value_type> point) const {
  using V = typename R::value_type;
  if (point.size() != n_) throw InvalidArgument("evaluation arity mismatch");
  // powers[v][k] = point[v]^k, grown on demand
  std::vector<std::vector<V>> powers(n_);
  for (std::size_t v = 0; v < n_; ++v) {
    powers[v].push_back(ring.from_rational(Rational(1)));
  }
  V acc = ring.from_rational(Rational(0));
  for (const auto& [e, c] : terms_) {
    V term = ring.from_rational(c);
    for (std::size_t v = 0; v < n_; ++v) {
      if (e[v] == 0) continue;
      auto& pw = powers[v];
      while (pw.size() <= e[v]) pw.push_back(ring.mul(pw.back(), point[v]));
      term = ring.mul(term, pw[e[v]]);
    }
    acc = ring.add(acc, term);
  }
  return acc;
}

/// Zero polynomials in n variables behave as additive identities.
MultiPoly sum_of_squares(std::span<const MultiPoly> polys, std::size_t n_vars);

}  // namespace polar
