#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "polar/multipoly.hpp"
#include "polar/rational.hpp"

namespace polar::gb {

inline constexpr std::size_t kMaxVars = 8;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t degree = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  bool divides(const Monomial& o, std::size_t n) const;
  bool coprime(const Monomial& o, std::size_t n) const;
};

Monomial lcm(const Monomial& a, const Monomial& b, std::size_t n);
Monomial operator*(const Monomial& a, const Monomial& b);
/// a / b; b must divide a.
Monomial quotient(const Monomial& a, const Monomial& b, std::size_t n);

enum class Order { GrevLex, Lex };

/// Three-way comparison of monomials under the order: <0, 0, >0.
int compare(const Monomial& a, const Monomial& b, std::size_t n, Order order);

struct Term {
  Monomial m;
  Rational c;
};

/// Polynomial as terms sorted strictly descending in the given order.
struct Polynomial {
  std::vector<Term> terms;
  bool is_zero() const noexcept { return terms.empty(); }
  const Monomial& lm() const { return terms.front().m; }
};

Polynomial from_multipoly(const MultiPoly& p, Order order);
MultiPoly to_multipoly(const Polynomial& p, std::size_t n);

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

/// Reduced Groebner basis (monic, sorted by leading monomial ascending).
class GroebnerBasis {
 public:
  GroebnerBasis(std::size_t n_vars, Order order, std::vector<Polynomial> polys);

  std::size_t n_vars() const noexcept { return n_; }
  Order order() const noexcept { return order_; }
  const std::vector<Polynomial>& polys() const noexcept { return polys_; }

  /// The ideal is the whole ring.
  bool is_unit() const;
  /// Every variable has a pure power among the leading monomials.
  bool is_zero_dimensional() const;
  /// Krull dimension of the ideal; -1 for the unit ideal.
  int dimension() const;
  /// Monomials outside the leading ideal, ascending; requires zero-dimensional.
  std::vector<Monomial> standard_monomials() const;

  Polynomial normal_form(Polynomial p) const;

 private:
  std::size_t n_;
  Order order_;
  std::vector<Polynomial> polys_;
};

GroebnerBasis buchberger(std::span<const MultiPoly> generators, Order order,
                         BuchbergerStats* stats = nullptr);

}  // namespace polar::gb
