#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polar/rational.hpp"

namespace polar {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The coefficient list never ends in a zero; the zero polynomial is empty.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<long> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, std::size_t degree);
  /// The polynomial U.
  static UniPoly variable();

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(std::size_t k) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const;

  UniPoly derivative() const;
  UniPoly monic() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator-(UniPoly a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  std::string to_string(const std::string& var = "U") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division; throws InvalidArgument on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly rem(const UniPoly& a, const UniPoly& b);
/// a / b, throwing InvalidArgument unless b divides a exactly.
UniPoly exact_quotient(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& d, const UniPoly& a);

/// Monic gcd. Both zero is an error; gcd(a, 0) = monic(a).
UniPoly uni_gcd(const UniPoly& a, const UniPoly& b);

struct ExtendedGcd {
  UniPoly gcd;  // monic
  UniPoly s;    // s*a + t*b = gcd
  UniPoly t;
};
ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b);

/// Monic p / gcd(p, p'); throws on zero input.
UniPoly squarefree_part(const UniPoly& p);
bool is_squarefree(const UniPoly& p);

/// Yun's algorithm: monic a_1, a_2, ... with p = lc(p) * prod a_i^i.
/// Entry k holds a_{k+1}; trailing entries are nonconstant.
std::vector<UniPoly> squarefree_decomposition(const UniPoly& p);

/// Inverse of a modulo m, or nullopt when gcd(a, m) != 1.
std::optional<UniPoly> inverse_mod(const UniPoly& a, const UniPoly& m);

/// a(b(U)).
UniPoly compose(const UniPoly& a, const UniPoly& b);

/// Multiply by a rational so that all coefficients are coprime integers
/// with positive leading coefficient.
std::vector<Integer> primitive_integer_coeffs(const UniPoly& p);

}  // namespace polar
