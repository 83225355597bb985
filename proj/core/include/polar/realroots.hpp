#pragma once

#include <span>
#include <string>
#include <vector>

#include "polar/multipoly.hpp"
#include "polar/rational.hpp"
#include "polar/unipoly.hpp"
#include "polar/zerodim.hpp"

namespace polar {

/// Closed rational interval [lo, hi].
struct Interval {
  Rational lo;
  Rational hi;

  static Interval point(const Rational& x) { return {x, x}; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Enclosure of p over x by Horner's rule in interval arithmetic.
Interval evaluate(const UniPoly& p, const Interval& x);

/// Exactly one root of the associated polynomial in (lo, hi], with nonzero
/// values at both endpoints; or, when exact, the rational root lo == hi.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  bool exact = false;

  Rational width() const { return hi - lo; }
  friend bool operator==(const IsolatingInterval&, const IsolatingInterval&) = default;
};

/// Sturm bisection from the Cauchy bound; ascending, pairwise disjoint.
/// Throws InvalidArgument for zero or non-squarefree q.
std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& q);

/// Bisect until width <= 2^-precision_bits (or an exact root is hit).
IsolatingInterval refine_interval(const IsolatingInterval& iv, const UniPoly& q,
                                  unsigned precision_bits);

struct RealPoint {
  std::size_t root_index = 0;  // position among the real roots of q, ascending
  IsolatingInterval root;
  std::vector<Interval> coords;
  std::vector<std::string> decimal;
};

/// Decimal places shown for a binary precision.
unsigned decimal_digits(unsigned precision_bits);

/// One point per real root of ur.q, every coordinate enclosed in an
/// interval of width <= 2^-precision_bits.
std::vector<RealPoint> extract_points(const UnivariateRepresentation& ur,
                                      unsigned precision_bits);

/// As above, after checking g(p) = 0 mod q exactly for every g in polys;
/// throws InvalidArgument on a nonzero residual.
std::vector<RealPoint> extract_points(const UnivariateRepresentation& ur,
                                      std::span<const MultiPoly> polys,
                                      unsigned precision_bits);

}  // namespace polar
