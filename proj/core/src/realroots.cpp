#include "polar/realroots.hpp"

#include <algorithm>

#include "polar/errors.hpp"
#include "polar/sturm.hpp"

namespace polar {

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

Interval evaluate(const UniPoly& p, const Interval& x) {
  const auto& c = p.coeffs();
  Interval acc = Interval::point(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Interval::point(*it);
  return acc;
}

namespace {

// Shrink (lo, hi] holding one root until neither endpoint is a root.
IsolatingInterval settle(const UniPoly& q, const SturmSequence& s, Rational lo, Rational hi) {
  while (true) {
    if (q.sign_at(hi) == 0) return {hi, hi, true};
    if (q.sign_at(lo) != 0) return {lo, hi, false};
    Rational mid = (lo + hi) / 2;
    if (s.count(lo, mid) == 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
}

}  // namespace

std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& q) {
  if (q.is_zero()) throw InvalidArgument("cannot isolate the roots of the zero polynomial");
  std::vector<IsolatingInterval> out;
  if (q.degree() == 0) return out;
  SturmSequence s(q);
  Rational bound = cauchy_root_bound(q);
  struct Pending {
    Rational lo, hi;
    int count;
  };
  Rational lo = -bound;
  std::vector<Pending> stack{{lo, bound, s.count(lo, bound)}};
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    if (cur.count == 0) continue;
    if (cur.count == 1) {
      out.push_back(settle(q, s, cur.lo, cur.hi));
      continue;
    }
    Rational mid = (cur.lo + cur.hi) / 2;
    int left = s.count(cur.lo, mid);
    stack.push_back({mid, cur.hi, cur.count - left});
    stack.push_back({cur.lo, mid, left});
  }
  std::sort(out.begin(), out.end(),
            [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.hi < b.hi; });
  return out;
}

IsolatingInterval refine_interval(const IsolatingInterval& iv, const UniPoly& q,
                                  unsigned precision_bits) {
  if (iv.exact) return iv;
  Rational target = pow2(-static_cast<long>(precision_bits));
  IsolatingInterval out = iv;
  int s_lo = q.sign_at(out.lo);
  while (out.width() > target) {
    Rational mid = (out.lo + out.hi) / 2;
    int s_mid = q.sign_at(mid);
    if (s_mid == 0) return {mid, mid, true};
    if (s_mid == s_lo) {
      out.lo = mid;
    } else {
      out.hi = mid;
    }
  }
  return out;
}

unsigned decimal_digits(unsigned precision_bits) {
  // ceil(bits * log10(2))
  return static_cast<unsigned>((static_cast<unsigned long>(precision_bits) * 30103 + 99999) /
                               100000);
}

std::vector<RealPoint> extract_points(const UnivariateRepresentation& ur,
                                      unsigned precision_bits) {
  if (ur.q.degree() < 1) return {};
  const Rational target = pow2(-static_cast<long>(precision_bits));
  const unsigned digits = decimal_digits(precision_bits);
  std::vector<RealPoint> points;
  auto roots = isolate_real_roots(ur.q);
  for (std::size_t r = 0; r < roots.size(); ++r) {
    RealPoint pt;
    pt.root_index = r;
    unsigned bits = precision_bits;
    while (true) {
      pt.root = refine_interval(roots[r], ur.q, bits);
      Interval x{pt.root.lo, pt.root.hi};
      pt.coords.clear();
      bool narrow = true;
      for (const auto& pk : ur.p) {
        pt.coords.push_back(pt.root.exact ? Interval::point(pk(pt.root.lo)) : evaluate(pk, x));
        narrow = narrow && pt.coords.back().width() <= target;
      }
      if (narrow) break;
      bits += 16;
    }
    for (const auto& c : pt.coords) pt.decimal.push_back(to_decimal(c.midpoint(), digits));
    points.push_back(std::move(pt));
  }
  return points;
}

std::vector<RealPoint> extract_points(const UnivariateRepresentation& ur,
                                      std::span<const MultiPoly> polys,
                                      unsigned precision_bits) {
  for (std::size_t k = 0; k < polys.size(); ++k) {
    UniPoly r = compose_mod(polys[k], ur.p, ur.q);
    if (!r.is_zero()) {
      throw InvalidArgument("representation leaves residual " + r.to_string() +
                            " for polynomial " + std::to_string(k));
    }
  }
  return extract_points(ur, precision_bits);
}

}  // namespace polar
