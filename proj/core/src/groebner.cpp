#include "polar/groebner.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "polar/errors.hpp"

namespace polar::gb {

bool Monomial::divides(const Monomial& o, std::size_t n) const {
  if (degree > o.degree) return false;
  for (std::size_t k = 0; k < n; ++k) {
    if (e[k] > o.e[k]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& o, std::size_t n) const {
  for (std::size_t k = 0; k < n; ++k) {
    if (e[k] && o.e[k]) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b, std::size_t n) {
  Monomial r;
  for (std::size_t k = 0; k < n; ++k) {
    r.e[k] = std::max(a.e[k], b.e[k]);
    r.degree += r.e[k];
  }
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t k = 0; k < kMaxVars; ++k) r.e[k] = static_cast<std::uint16_t>(a.e[k] + b.e[k]);
  r.degree = a.degree + b.degree;
  return r;
}

Monomial quotient(const Monomial& a, const Monomial& b, std::size_t n) {
  Monomial r;
  for (std::size_t k = 0; k < n; ++k) r.e[k] = static_cast<std::uint16_t>(a.e[k] - b.e[k]);
  r.degree = a.degree - b.degree;
  return r;
}

int compare(const Monomial& a, const Monomial& b, std::size_t n, Order order) {
  if (order == Order::GrevLex) {
    if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
    for (std::size_t k = n; k-- > 0;) {
      if (a.e[k] != b.e[k]) return a.e[k] > b.e[k] ? -1 : 1;
    }
    return 0;
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (a.e[k] != b.e[k]) return a.e[k] < b.e[k] ? -1 : 1;
  }
  return 0;
}

Polynomial from_multipoly(const MultiPoly& p, Order order) {
  std::size_t n = p.n_vars();
  if (n > kMaxVars) throw InvalidArgument("too many variables for the Groebner engine");
  Polynomial out;
  for (const auto& [e, c] : p.terms()) {
    Term t;
    for (std::size_t k = 0; k < n; ++k) {
      if (e[k] > 0xffff) throw InvalidArgument("exponent too large for the Groebner engine");
      t.m.e[k] = static_cast<std::uint16_t>(e[k]);
      t.m.degree += e[k];
    }
    t.c = c;
    out.terms.push_back(std::move(t));
  }
  std::sort(out.terms.begin(), out.terms.end(), [&](const Term& a, const Term& b) {
    return compare(a.m, b.m, n, order) > 0;
  });
  return out;
}

MultiPoly to_multipoly(const Polynomial& p, std::size_t n) {
  MultiPoly out(n);
  Exponent e(n);
  for (const auto& t : p.terms) {
    for (std::size_t k = 0; k < n; ++k) e[k] = t.m.e[k];
    out.add_term(e, t.c);
  }
  return out;
}

namespace {

struct Context {
  std::size_t n;
  Order order;
  int cmp(const Monomial& a, const Monomial& b) const { return compare(a, b, n, order); }
};

void make_monic(Polynomial& p) {
  if (p.is_zero() || p.terms.front().c == 1) return;
  Rational inv = 1 / p.terms.front().c;
  for (auto& t : p.terms) t.c *= inv;
}

// acc (ascending) minus c * m * g, dropping g's leading term (which the
// caller has already cancelled against acc's last entry).
void subtract_multiple(std::vector<Term>& acc, const Rational& c, const Monomial& m,
                       const Polynomial& g, const Context& ctx) {
  std::vector<Term> out;
  out.reserve(acc.size() + g.terms.size());
  std::size_t i = 0;
  std::size_t j = g.terms.size();  // walk g from the tail (smallest) upward
  std::size_t stop = 1;            // skip the leading term
  while (i < acc.size() || j > stop) {
    if (j <= stop) {
      out.push_back(std::move(acc[i++]));
      continue;
    }
    Monomial gm = g.terms[j - 1].m * m;
    if (i >= acc.size()) {
      out.push_back({gm, -c * g.terms[j - 1].c});
      --j;
      continue;
    }
    int s = ctx.cmp(acc[i].m, gm);
    if (s < 0) {
      out.push_back(std::move(acc[i++]));
    } else if (s > 0) {
      out.push_back({gm, -c * g.terms[j - 1].c});
      --j;
    } else {
      Rational v = acc[i].c - c * g.terms[j - 1].c;
      if (sgn(v) != 0) out.push_back({acc[i].m, std::move(v)});
      ++i;
      --j;
    }
  }
  acc = std::move(out);
}

const Polynomial* find_divisor(const std::vector<const Polynomial*>& basis, const Monomial& m,
                               std::size_t n) {
  for (const Polynomial* g : basis) {
    if (g->lm().divides(m, n)) return g;
  }
  return nullptr;
}

Polynomial reduce(Polynomial p, const std::vector<const Polynomial*>& basis, const Context& ctx) {
  std::vector<Term> cur(std::make_move_iterator(p.terms.rbegin()),
                        std::make_move_iterator(p.terms.rend()));
  std::vector<Term> done;  // descending
  while (!cur.empty()) {
    Term& lead = cur.back();
    const Polynomial* g = find_divisor(basis, lead.m, ctx.n);
    if (!g) {
      done.push_back(std::move(lead));
      cur.pop_back();
      continue;
    }
    // basis elements are monic
    Rational c = lead.c;
    Monomial m = quotient(lead.m, g->lm(), ctx.n);
    cur.pop_back();
    subtract_multiple(cur, c, m, *g, ctx);
  }
  return Polynomial{std::move(done)};
}

Polynomial spoly(const Polynomial& f, const Polynomial& g, const Monomial& l, const Context& ctx) {
  Monomial mf = quotient(l, f.lm(), ctx.n);
  Monomial mg = quotient(l, g.lm(), ctx.n);
  std::vector<Term> acc;
  acc.reserve(f.terms.size());
  for (std::size_t k = f.terms.size(); k-- > 1;) acc.push_back({f.terms[k].m * mf, f.terms[k].c});
  subtract_multiple(acc, Rational(1), mg, g, ctx);
  std::reverse(acc.begin(), acc.end());
  return Polynomial{std::move(acc)};
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class Engine {
 public:
  explicit Engine(Context ctx) : ctx_(ctx) {}

  std::size_t considered() const noexcept { return considered_; }

  // returns false once the unit ideal is detected
  bool insert(Polynomial h) {
    make_monic(h);
    if (h.lm().degree == 0) {
      unit_ = true;
      return false;
    }
    std::size_t hi = basis_.size();
    basis_.push_back(std::move(h));
    active_.push_back(true);
    const Monomial& lh = basis_[hi].lm();

    std::deque<Pair> C;
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g]) C.push_back({g, hi, lcm(basis_[g].lm(), lh, ctx_.n)});
    }
    considered_ += C.size();
    std::vector<Pair> D;
    while (!C.empty()) {
      Pair p = C.front();
      C.pop_front();
      bool keep = basis_[p.i].lm().coprime(lh, ctx_.n);
      if (!keep) {
        keep = true;
        for (const auto& q : C) {
          if (q.lcm.divides(p.lcm, ctx_.n)) {
            keep = false;
            break;
          }
        }
        if (keep) {
          for (const auto& q : D) {
            if (q.lcm.divides(p.lcm, ctx_.n)) {
              keep = false;
              break;
            }
          }
        }
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> next;
    for (const auto& p : pairs_) {
      bool drop = lh.divides(p.lcm, ctx_.n) &&
                  !(lcm(basis_[p.i].lm(), lh, ctx_.n) == p.lcm) &&
                  !(lcm(basis_[p.j].lm(), lh, ctx_.n) == p.lcm);
      if (!drop) next.push_back(p);
    }
    for (const auto& p : D) {
      if (!basis_[p.i].lm().coprime(lh, ctx_.n)) next.push_back(p);
    }
    pairs_ = std::move(next);
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && lh.divides(basis_[g].lm(), ctx_.n)) active_[g] = false;
    }
    return true;
  }

  void run(BuchbergerStats* stats) {
    while (!pairs_.empty() && !unit_) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        int s = ctx_.cmp(a.lcm, b.lcm);
        if (s != 0) return s < 0;
        return std::pair(a.j, a.i) < std::pair(b.j, b.i);
      });
      Pair p = *best;
      pairs_.erase(best);
      if (stats) ++stats->pairs_reduced;
      Polynomial s = spoly(basis_[p.i], basis_[p.j], p.lcm, ctx_);
      Polynomial h = reduce(std::move(s), active_list(), ctx_);
      if (h.is_zero()) {
        if (stats) ++stats->zero_reductions;
        continue;
      }
      insert(std::move(h));
    }
  }

  std::vector<Polynomial> reduced_basis() {
    if (unit_) {
      Polynomial one;
      one.terms.push_back({Monomial{}, Rational(1)});
      return {one};
    }
    std::vector<Polynomial> g;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (active_[k]) g.push_back(basis_[k]);
    }
    std::sort(g.begin(), g.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ctx_.cmp(a.lm(), b.lm()) < 0;
    });
    std::vector<Polynomial> minimal;
    for (auto& p : g) {
      bool redundant = false;
      for (const auto& q : minimal) {
        if (q.lm().divides(p.lm(), ctx_.n)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal.push_back(std::move(p));
    }
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const Polynomial*> others;
      for (std::size_t m = 0; m < minimal.size(); ++m) {
        if (m != k) others.push_back(&minimal[m]);
      }
      Polynomial tail;
      tail.terms.assign(minimal[k].terms.begin() + 1, minimal[k].terms.end());
      Polynomial r = reduce(std::move(tail), others, ctx_);
      Polynomial full;
      full.terms.push_back(minimal[k].terms.front());
      for (auto& t : r.terms) full.terms.push_back(std::move(t));
      out.push_back(std::move(full));
    }
    return out;
  }

  std::vector<const Polynomial*> active_list() const {
    std::vector<const Polynomial*> out;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (active_[k]) out.push_back(&basis_[k]);
    }
    return out;
  }

  bool unit() const { return unit_; }

 private:
  Context ctx_;
  std::vector<Polynomial> basis_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
  std::size_t considered_ = 0;
};

}  // namespace

GroebnerBasis::GroebnerBasis(std::size_t n_vars, Order order, std::vector<Polynomial> polys)
    : n_(n_vars), order_(order), polys_(std::move(polys)) {}

bool GroebnerBasis::is_unit() const {
  return polys_.size() == 1 && polys_.front().lm().degree == 0;
}

bool GroebnerBasis::is_zero_dimensional() const {
  if (is_unit()) return true;
  for (std::size_t v = 0; v < n_; ++v) {
    bool found = false;
    for (const auto& p : polys_) {
      const Monomial& m = p.lm();
      if (m.e[v] > 0 && m.e[v] == m.degree) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

int GroebnerBasis::dimension() const {
  if (is_unit()) return -1;
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n_); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& p : polys_) {
      const Monomial& m = p.lm();
      bool inside = true;
      for (std::size_t v = 0; v < n_; ++v) {
        if (m.e[v] && !(mask & (1u << v))) {
          inside = false;
          break;
        }
      }
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

std::vector<Monomial> GroebnerBasis::standard_monomials() const {
  if (!is_zero_dimensional()) throw InvalidArgument("standard monomials of a positive-dimensional ideal");
  std::vector<Monomial> out;
  if (is_unit()) return out;
  auto in_ideal = [&](const Monomial& m) {
    for (const auto& p : polys_) {
      if (p.lm().divides(m, n_)) return true;
    }
    return false;
  };
  auto key = [&](const Monomial& m) { return std::vector<std::uint16_t>(m.e.begin(), m.e.begin() + static_cast<std::ptrdiff_t>(n_)); };
  std::set<std::vector<std::uint16_t>> seen;
  std::deque<Monomial> queue{Monomial{}};
  seen.insert(key(Monomial{}));
  while (!queue.empty()) {
    Monomial m = queue.front();
    queue.pop_front();
    if (in_ideal(m)) continue;
    out.push_back(m);
    for (std::size_t v = 0; v < n_; ++v) {
      Monomial next = m;
      ++next.e[v];
      ++next.degree;
      if (seen.insert(key(next)).second) queue.push_back(next);
    }
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return compare(a, b, n_, order_) < 0;
  });
  return out;
}

Polynomial GroebnerBasis::normal_form(Polynomial p) const {
  std::vector<const Polynomial*> basis;
  for (const auto& g : polys_) basis.push_back(&g);
  return reduce(std::move(p), basis, Context{n_, order_});
}

GroebnerBasis buchberger(std::span<const MultiPoly> generators, Order order,
                         BuchbergerStats* stats) {
  if (generators.empty()) throw InvalidArgument("Groebner basis of an empty generator list");
  std::size_t n = generators.front().n_vars();
  Context ctx{n, order};
  Engine engine(ctx);
  for (const auto& g : generators) {
    if (g.n_vars() != n) throw InvalidArgument("generators disagree on variable count");
    Polynomial p = from_multipoly(g, order);
    p = reduce(std::move(p), engine.active_list(), ctx);
    if (p.is_zero()) continue;
    if (!engine.insert(std::move(p))) break;
  }
  engine.run(stats);
  if (stats) stats->pairs_considered = engine.considered();
  return GroebnerBasis(n, order, engine.reduced_basis());
}

}  // namespace polar::gb
