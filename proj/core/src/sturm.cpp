#include "polar/sturm.hpp"

#include "polar/errors.hpp"

namespace polar {

const Rational& Endpoint::value() const {
  if (kind_ != Kind::Finite) throw InvalidArgument("infinite endpoint has no value");
  return value_;
}

bool operator<(const Endpoint& a, const Endpoint& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  return a.kind_ == Endpoint::Kind::Finite && a.value_ < b.value_;
}

SturmSequence::SturmSequence(const UniPoly& p) {
  if (p.is_zero()) throw InvalidArgument("Sturm sequence of the zero polynomial");
  if (!is_squarefree(p)) {
    throw InvalidArgument(
        "Sturm sequence needs a squarefree polynomial; take squarefree_part first");
  }
  chain_.push_back(p);
  if (p.is_constant()) return;
  chain_.push_back(p.derivative());
  while (!chain_.back().is_constant()) {
    const UniPoly& a = chain_[chain_.size() - 2];
    const UniPoly& b = chain_.back();
    UniPoly r = -rem(a, b);
    // positive rescaling keeps the sign pattern and tames coefficient growth
    if (!r.is_zero()) r *= Rational(1) / ::abs(r.leading());
    chain_.push_back(std::move(r));
  }
}

namespace {

int sign_at_infinity(const UniPoly& p, bool positive) {
  int s = sgn(p.leading());
  if (!positive && p.degree() % 2 == 1) s = -s;
  return s;
}

}  // namespace

int SturmSequence::variations(const Endpoint& x) const {
  int count = 0;
  int last = 0;
  for (const auto& p : chain_) {
    int s = x.is_finite() ? p.sign_at(x.value())
                          : sign_at_infinity(p, x.is_pos_infinity());
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::count(const Endpoint& lo, const Endpoint& hi) const {
  if (!(lo < hi)) throw InvalidArgument("Sturm count needs lo < hi");
  return variations(lo) - variations(hi);
}

int sturm_root_count(const UniPoly& p, const Endpoint& lo, const Endpoint& hi) {
  return SturmSequence(p).count(lo, hi);
}

Rational cauchy_root_bound(const UniPoly& p) {
  if (p.is_zero()) throw InvalidArgument("root bound of the zero polynomial");
  Rational m(0);
  const Rational& lc = p.leading();
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = ::abs(p.coeffs()[static_cast<std::size_t>(k)] / lc);
    if (r > m) m = r;
  }
  return m + 1;
}

}  // namespace polar
