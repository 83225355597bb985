#pragma once

#include <concepts>
#include <cstdint>

#include "polar/errors.hpp"
#include "polar/rational.hpp"
#include "polar/unipoly.hpp"

namespace polar {

/// A commutative ring a straight-line program or polynomial can be
/// evaluated in. Constants enter through from_rational.
template <class R>
concept EvaluationRing = requires(const R& r, const typename R::value_type& a,
                                  const Rational& c) {
  { r.from_rational(c) } -> std::convertible_to<typename R::value_type>;
  { r.add(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.sub(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.mul(a, a) } -> std::convertible_to<typename R::value_type>;
};

struct RationalRing {
  using value_type = Rational;
  Rational from_rational(const Rational& c) const { return c; }
  Rational add(const Rational& a, const Rational& b) const { return a + b; }
  Rational sub(const Rational& a, const Rational& b) const { return a - b; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
};

/// Z/pZ with p < 2^32 so that products fit in 64 bits.
class ModularRing {
 public:
  using value_type = std::uint64_t;
  explicit ModularRing(std::uint64_t p) : p_(p) {
    if (p < 2 || p >= (std::uint64_t{1} << 32)) {
      throw InvalidArgument("modulus must lie in [2, 2^32)");
    }
  }
  std::uint64_t modulus() const noexcept { return p_; }
  std::uint64_t reduce(const Integer& z) const {
    Integer r = z % Integer(static_cast<unsigned long>(p_));
    if (r < 0) r += static_cast<unsigned long>(p_);
    return r.get_ui();
  }
  std::uint64_t from_rational(const Rational& c) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  /// Inverse by Fermat; p must be prime and a nonzero.
  std::uint64_t inv(std::uint64_t a) const;

 private:
  std::uint64_t p_;
};

inline std::uint64_t ModularRing::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % p_;
  a %= p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t ModularRing::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw InvalidArgument("zero has no modular inverse");
  return pow(a, p_ - 2);
}

inline std::uint64_t ModularRing::from_rational(const Rational& c) const {
  std::uint64_t den = reduce(c.get_den());
  if (den == 0) throw InvalidArgument("denominator vanishes modulo p");
  return mul(reduce(c.get_num()), inv(den));
}

/// Q[U] without reduction.
struct UniPolyRing {
  using value_type = UniPoly;
  UniPoly from_rational(const Rational& c) const { return UniPoly::constant(c); }
  UniPoly add(const UniPoly& a, const UniPoly& b) const { return a + b; }
  UniPoly sub(const UniPoly& a, const UniPoly& b) const { return a - b; }
  UniPoly mul(const UniPoly& a, const UniPoly& b) const { return a * b; }
};

/// Q[U]/(m): elements are kept reduced, degree < deg m.
class QuotientRing {
 public:
  using value_type = UniPoly;
  explicit QuotientRing(UniPoly modulus) : m_(std::move(modulus)) {
    if (m_.degree() < 1) {
      throw InvalidArgument("quotient ring modulus must be nonconstant");
    }
  }
  const UniPoly& modulus() const noexcept { return m_; }
  UniPoly reduce(const UniPoly& a) const { return rem(a, m_); }
  UniPoly from_rational(const Rational& c) const { return UniPoly::constant(c); }
  UniPoly add(const UniPoly& a, const UniPoly& b) const { return a + b; }
  UniPoly sub(const UniPoly& a, const UniPoly& b) const { return a - b; }
  UniPoly mul(const UniPoly& a, const UniPoly& b) const { return rem(a * b, m_); }

 private:
  UniPoly m_;
};

}  // namespace polar
