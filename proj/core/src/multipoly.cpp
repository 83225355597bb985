#include "polar/multipoly.hpp"

#include <sstream>

#include "polar/errors.hpp"

namespace polar {

MultiPoly MultiPoly::constant(std::size_t n_vars, const Rational& c) {
  MultiPoly p(n_vars);
  p.add_term(Exponent(n_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t n_vars, std::size_t index) {
  if (index >= n_vars) throw InvalidArgument("variable index out of range");
  MultiPoly p(n_vars);
  Exponent e(n_vars, 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (unsigned k : terms_.begin()->first) {
    if (k != 0) return false;
  }
  return true;
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Exponent(n_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (unsigned k : e) d += static_cast<int>(k);
    best = std::max(best, d);
  }
  return best;
}

int MultiPoly::degree_in(std::size_t var) const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, static_cast<int>(e[var]));
  return best;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != n_) throw InvalidArgument("exponent length mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.n_ != n_) throw InvalidArgument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.n_ != n_) throw InvalidArgument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.n_ != b.n_) throw InvalidArgument("variable count mismatch");
  MultiPoly r(a.n_);
  Exponent e(a.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < a.n_; ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(n_, Rational(1));
  MultiPoly base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= n_) throw InvalidArgument("variable index out of range");
  MultiPoly r(n_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    r.add_term(d, c * static_cast<long>(e[var]));
  }
  return r;
}

MultiPoly MultiPoly::substitute(std::size_t var, const Rational& c) const {
  if (var >= n_) throw InvalidArgument("variable index out of range");
  MultiPoly r(n_);
  for (const auto& [e, v] : terms_) {
    Exponent d = e;
    d[var] = 0;
    Rational f = v;
    for (unsigned k = 0; k < e[var]; ++k) f *= c;
    r.add_term(d, f);
  }
  return r;
}

MultiPoly MultiPoly::specialize_leading(std::span<const Rational> values) const {
  std::size_t r = values.size();
  if (r > n_) throw InvalidArgument("too many specialization values");
  MultiPoly out(n_ - r);
  for (const auto& [e, v] : terms_) {
    Rational f = v;
    for (std::size_t k = 0; k < r; ++k) {
      for (unsigned j = 0; j < e[k]; ++j) f *= values[k];
    }
    out.add_term(Exponent(e.begin() + static_cast<std::ptrdiff_t>(r), e.end()), f);
  }
  return out;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  return evaluate(RationalRing{}, point);
}

UniPoly MultiPoly::restrict_to_line(std::span<const Rational> a,
                                    std::span<const Rational> b) const {
  if (a.size() != n_ || b.size() != n_) throw InvalidArgument("line dimension mismatch");
  std::vector<UniPoly> pt;
  pt.reserve(n_);
  for (std::size_t k = 0; k < n_; ++k) pt.push_back(UniPoly({a[k], b[k]}));
  return evaluate(UniPolyRing{}, std::span<const UniPoly>(pt));
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Rational mag = ::abs(c);
    bool has_var = false;
    for (unsigned k : e) has_var = has_var || k > 0;
    bool coeff_written = false;
    if (mag != 1 || !has_var) {
      os << mag.get_str();
      coeff_written = true;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (e[v] == 0) continue;
      if (coeff_written) os << "*";
      coeff_written = true;
      if (v < names.size()) os << names[v];
      else os << "x" << (v + 1);
      if (e[v] > 1) os << "^" << e[v];
    }
  }
  return os.str();
}

MultiPoly sum_of_squares(std::span<const MultiPoly> polys, std::size_t n_vars) {
  MultiPoly acc(n_vars);
  for (const auto& p : polys) acc += p * p;
  return acc;
}

}  // namespace polar
