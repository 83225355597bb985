#pragma once

#include <optional>
#include <vector>

#include "polar/rational.hpp"
#include "polar/unipoly.hpp"

namespace polar {

/// A real endpoint that may be -infinity or +infinity.
class Endpoint {
 public:
  Endpoint(const Rational& v) : kind_(Kind::Finite), value_(v) {}  // NOLINT
  Endpoint(long v) : kind_(Kind::Finite), value_(v) {}             // NOLINT
  static Endpoint neg_infinity() { return Endpoint(Kind::NegInf); }
  static Endpoint pos_infinity() { return Endpoint(Kind::PosInf); }

  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_neg_infinity() const noexcept { return kind_ == Kind::NegInf; }
  bool is_pos_infinity() const noexcept { return kind_ == Kind::PosInf; }
  const Rational& value() const;

  friend bool operator<(const Endpoint& a, const Endpoint& b);

 private:
  enum class Kind { NegInf, Finite, PosInf };
  explicit Endpoint(Kind k) : kind_(k) {}
  Kind kind_;
  Rational value_;
};

/// p, p', then negated remainders; the last entry is a nonzero constant
/// for squarefree p.
class SturmSequence {
 public:
  /// Throws InvalidArgument when p is zero or not squarefree.
  explicit SturmSequence(const UniPoly& p);

  const std::vector<UniPoly>& chain() const noexcept { return chain_; }
  /// Sign variations of the chain at x (zeros skipped).
  int variations(const Endpoint& x) const;
  /// Distinct real roots in (lo, hi]; lo < hi required.
  int count(const Endpoint& lo, const Endpoint& hi) const;

 private:
  std::vector<UniPoly> chain_;
};

/// Distinct real roots of squarefree p in (lo, hi].
int sturm_root_count(const UniPoly& p, const Endpoint& lo, const Endpoint& hi);

/// Cauchy bound: every complex root z satisfies |z| < bound.
Rational cauchy_root_bound(const UniPoly& p);

}  // namespace polar
