#include "polar/factor.hpp"

#include <algorithm>
#include <cstdint>

#include "polar/errors.hpp"
#include "polar/rings.hpp"

namespace polar {

namespace {

using u64 = std::uint64_t;

// ---------------------------------------------------------------------------
// Dense polynomials over Z/pZ, lowest degree first, no trailing zeros.

struct ModPoly {
  std::vector<u64> c;
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
};

void trim(ModPoly& a) {
  while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

ModPoly mod_sub(const ModPoly& a, const ModPoly& b, const ModularRing& F) {
  ModPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t k = 0; k < r.c.size(); ++k) {
    u64 x = k < a.c.size() ? a.c[k] : 0;
    u64 y = k < b.c.size() ? b.c[k] : 0;
    r.c[k] = F.sub(x, y);
  }
  trim(r);
  return r;
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b, const ModularRing& F) {
  if (a.is_zero() || b.is_zero()) return {};
  ModPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    }
  }
  trim(r);
  return r;
}

std::pair<ModPoly, ModPoly> mod_divmod(const ModPoly& a, const ModPoly& b,
                                       const ModularRing& F) {
  if (b.is_zero()) throw InvalidArgument("modular division by zero");
  if (a.degree() < b.degree()) return {ModPoly{}, a};
  std::vector<u64> r = a.c;
  std::vector<u64> q(a.c.size() - b.c.size() + 1, 0);
  u64 inv = F.inv(b.c.back());
  std::size_t db = b.c.size() - 1;
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    u64 f = F.mul(r[k], inv);
    q[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) {
      r[k - db + j] = F.sub(r[k - db + j], F.mul(f, b.c[j]));
    }
  }
  r.resize(db);
  ModPoly qq{std::move(q)}, rr{std::move(r)};
  trim(qq);
  trim(rr);
  return {qq, rr};
}

ModPoly mod_rem(const ModPoly& a, const ModPoly& b, const ModularRing& F) {
  return mod_divmod(a, b, F).second;
}

ModPoly mod_monic(ModPoly a, const ModularRing& F) {
  if (a.is_zero()) return a;
  u64 inv = F.inv(a.c.back());
  for (auto& x : a.c) x = F.mul(x, inv);
  return a;
}

ModPoly mod_gcd(ModPoly a, ModPoly b, const ModularRing& F) {
  while (!b.is_zero()) {
    ModPoly r = mod_rem(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return mod_monic(std::move(a), F);
}

// s*a + t*b = 1 for coprime a, b.
std::pair<ModPoly, ModPoly> mod_bezout(const ModPoly& a, const ModPoly& b,
                                       const ModularRing& F) {
  ModPoly r0 = a, r1 = b;
  ModPoly s0{{1}}, s1{}, t0{}, t1{{1}};
  while (!r1.is_zero()) {
    auto [q, r] = mod_divmod(r0, r1, F);
    ModPoly s2 = mod_sub(s0, mod_mul(q, s1, F), F);
    ModPoly t2 = mod_sub(t0, mod_mul(q, t1, F), F);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.degree() != 0) throw InvalidArgument("Bezout of non-coprime polynomials");
  u64 inv = F.inv(r0.c[0]);
  for (auto& x : s0.c) x = F.mul(x, inv);
  for (auto& x : t0.c) x = F.mul(x, inv);
  return {s0, t0};
}

ModPoly mod_derivative(const ModPoly& a, const ModularRing& F) {
  ModPoly d;
  for (std::size_t k = 1; k < a.c.size(); ++k) {
    d.c.push_back(F.mul(a.c[k], k % F.modulus()));
  }
  trim(d);
  return d;
}

ModPoly mod_powmod_x(u64 e, const ModPoly& f, const ModularRing& F) {
  ModPoly result{{1}};
  ModPoly base{{0, 1}};
  base = mod_rem(base, f, F);
  while (e) {
    if (e & 1) result = mod_rem(mod_mul(result, base, F), f, F);
    e >>= 1;
    if (e) base = mod_rem(mod_mul(base, base, F), f, F);
  }
  return result;
}

ModPoly reduce_mod(const std::vector<Integer>& f, const ModularRing& F) {
  ModPoly r;
  r.c.reserve(f.size());
  for (const auto& x : f) r.c.push_back(F.reduce(x));
  trim(r);
  return r;
}

// Null space of an n x n matrix over Z/pZ.
std::vector<std::vector<u64>> mod_nullspace(std::vector<std::vector<u64>> m,
                                            const ModularRing& F) {
  std::size_t n = m.size();
  std::vector<int> pivot_col_of_row;
  std::vector<int> pivot_row_of_col(n, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t sel = row;
    while (sel < n && m[sel][col] == 0) ++sel;
    if (sel == n) continue;
    std::swap(m[sel], m[row]);
    u64 inv = F.inv(m[row][col]);
    for (auto& x : m[row]) x = F.mul(x, inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      u64 f = m[r][col];
      for (std::size_t c = 0; c < n; ++c) m[r][c] = F.sub(m[r][c], F.mul(f, m[row][c]));
    }
    pivot_row_of_col[col] = static_cast<int>(row);
    ++row;
  }
  std::vector<std::vector<u64>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (pivot_row_of_col[free] != -1) continue;
    std::vector<u64> v(n, 0);
    v[free] = 1;
    for (std::size_t col = 0; col < n; ++col) {
      int r = pivot_row_of_col[col];
      if (r >= 0) v[col] = F.sub(0, m[static_cast<std::size_t>(r)][free]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Berlekamp factorization of a monic squarefree polynomial modulo p.
std::vector<ModPoly> berlekamp(const ModPoly& f, const ModularRing& F) {
  std::size_t n = static_cast<std::size_t>(f.degree());
  if (n <= 1) return {f};
  u64 p = F.modulus();
  ModPoly xp = mod_powmod_x(p, f, F);
  // transpose of (Q - I): column i holds x^(p*i) mod f minus e_i
  std::vector<std::vector<u64>> mt(n, std::vector<u64>(n, 0));
  ModPoly row{{1}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      u64 v = j < row.c.size() ? row.c[j] : 0;
      if (i == j) v = F.sub(v, 1);
      mt[j][i] = v;
    }
    row = mod_rem(mod_mul(row, xp, F), f, F);
  }
  auto basis = mod_nullspace(std::move(mt), F);
  std::size_t r = basis.size();
  std::vector<ModPoly> factors{f};
  for (const auto& vec : basis) {
    if (factors.size() == r) break;
    ModPoly v{vec};
    trim(v);
    if (v.degree() < 1) continue;
    std::vector<ModPoly> next;
    for (std::size_t hi = 0; hi < factors.size(); ++hi) {
      std::vector<ModPoly> pieces{factors[hi]};
      std::size_t others = next.size() + (factors.size() - hi - 1);
      for (u64 s = 0; s < p && others + pieces.size() < r; ++s) {
        ModPoly vs = v;
        vs.c[0] = F.sub(vs.c[0], s);
        trim(vs);
        std::vector<ModPoly> split;
        for (const auto& piece : pieces) {
          if (piece.degree() <= 1 || vs.is_zero()) {
            split.push_back(piece);
            continue;
          }
          ModPoly g = mod_gcd(piece, vs, F);
          if (g.degree() > 0 && g.degree() < piece.degree()) {
            split.push_back(mod_divmod(piece, g, F).first);
            split.push_back(g);
          } else {
            split.push_back(piece);
          }
        }
        pieces = std::move(split);
      }
      for (auto& piece : pieces) next.push_back(mod_monic(std::move(piece), F));
    }
    factors = std::move(next);
  }
  return factors;
}

// ---------------------------------------------------------------------------
// Integer polynomials.

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
  ztrim(r);
  return r;
}

ZPoly from_mod(const ModPoly& a) {
  ZPoly r;
  for (u64 x : a.c) r.emplace_back(static_cast<unsigned long>(x));
  return r;
}

void reduce_nonneg(ZPoly& a, const Integer& m) {
  for (auto& x : a) {
    x %= m;
    if (x < 0) x += m;
  }
  ztrim(a);
}

ZPoly symmetric(ZPoly a, const Integer& m) {
  Integer half = m / 2;
  for (auto& x : a) {
    x %= m;
    if (x < 0) x += m;
    if (x > half) x -= m;
  }
  ztrim(a);
  return a;
}

ZPoly primitive(ZPoly a) {
  Integer g(0);
  for (const auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& x : a) x /= g;
  return a;
}

UniPoly zpoly_to_uni(const ZPoly& a) {
  std::vector<Rational> c;
  c.reserve(a.size());
  for (const auto& x : a) c.emplace_back(x);
  return UniPoly(std::move(c));
}

// Exact quotient a / b over Z if b divides a, else nullopt.
std::optional<ZPoly> zdivide(const ZPoly& a, const ZPoly& b) {
  if (a.size() < b.size()) return std::nullopt;
  ZPoly r = a;
  ZPoly q(a.size() - b.size() + 1, Integer(0));
  std::size_t db = b.size() - 1;
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    Integer f = r[k] / b.back();
    q[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= f * b[j];
  }
  for (std::size_t k = 0; k < db; ++k) {
    if (r[k] != 0) return std::nullopt;
  }
  ztrim(q);
  return q;
}

// Lift F = g*h (mod p) to F = G*H (mod p^k); g monic, lc(h) = lc(F) mod p.
std::pair<ZPoly, ZPoly> hensel_lift(const ZPoly& F, const ModPoly& g,
                                    const ModPoly& h, const ModularRing& R,
                                    unsigned k) {
  auto [s, t] = mod_bezout(g, h, R);
  (void)s;
  ZPoly G = from_mod(g);
  ZPoly H = from_mod(h);
  H.back() = F.back();
  Integer pj(static_cast<unsigned long>(R.modulus()));
  for (unsigned j = 1; j < k; ++j) {
    ZPoly E = zsub(F, zmul(G, H));
    for (auto& x : E) x /= pj;
    ModPoly e = reduce_mod(E, R);
    ModPoly dG = mod_rem(mod_mul(t, e, R), g, R);
    ModPoly dH = mod_divmod(mod_sub(e, mod_mul(dG, h, R), R), g, R).first;
    ZPoly zdG = from_mod(dG), zdH = from_mod(dH);
    if (G.size() < zdG.size()) G.resize(zdG.size(), Integer(0));
    if (H.size() < zdH.size()) H.resize(zdH.size(), Integer(0));
    for (std::size_t i = 0; i < zdG.size(); ++i) G[i] += pj * zdG[i];
    for (std::size_t i = 0; i < zdH.size(); ++i) H[i] += pj * zdH[i];
    pj *= static_cast<unsigned long>(R.modulus());
  }
  return {G, H};
}

std::vector<u64> small_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> out;
    const u64 limit = 2000;
    std::vector<bool> composite(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

struct ModularImage {
  u64 prime = 0;
  std::vector<ModPoly> factors;
};

ModularImage choose_prime(const ZPoly& f) {
  constexpr int kCandidates = 5;
  ModularImage best;
  int good = 0;
  for (u64 p : small_primes()) {
    if (p < 3) continue;
    ModularRing R(p);
    if (R.reduce(f.back()) == 0) continue;
    ModPoly fp = reduce_mod(f, R);
    if (mod_gcd(fp, mod_derivative(fp, R), R).degree() != 0) continue;
    auto factors = berlekamp(mod_monic(fp, R), R);
    if (best.prime == 0 || factors.size() < best.factors.size()) {
      best = {p, std::move(factors)};
    }
    if (best.factors.size() == 1 || ++good == kCandidates) break;
  }
  if (best.prime == 0) throw Error("no suitable prime for modular factorization");
  return best;
}

bool uni_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(),
                                      b.coeffs().begin(), b.coeffs().end());
}

}  // namespace

std::vector<std::vector<Integer>> factor_squarefree_integer(
    const std::vector<Integer>& input) {
  ZPoly f = primitive(input);
  ztrim(f);
  if (f.size() <= 2) return {f};

  ModularImage image = choose_prime(f);
  if (image.factors.size() == 1) return {f};
  ModularRing R(image.prime);
  const Integer p(static_cast<unsigned long>(image.prime));

  // Landau-Mignotte: lc(f) * (any factor) has coefficients below lc * 2^n * |f|_2.
  std::size_t n = f.size() - 1;
  Integer norm2(0);
  for (const auto& x : f) norm2 += x * x;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Integer bound = 2 * ::abs(f.back()) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
  unsigned k = 1;
  Integer modulus = p;
  while (modulus <= bound) {
    modulus *= p;
    ++k;
  }

  // Lift the modular factors one at a time.
  std::vector<ZPoly> lifted;
  ZPoly current = f;
  for (std::size_t i = 0; i + 1 < image.factors.size(); ++i) {
    ModPoly rest{{R.reduce(current.back())}};
    for (std::size_t j = i + 1; j < image.factors.size(); ++j) {
      rest = mod_mul(rest, image.factors[j], R);
    }
    auto [G, H] = hensel_lift(current, image.factors[i], rest, R, k);
    reduce_nonneg(G, modulus);
    lifted.push_back(std::move(G));
    current = std::move(H);
  }
  {
    Integer inv;
    Integer lc = current.back() % modulus;
    if (lc < 0) lc += modulus;
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
    for (auto& x : current) x *= inv;
    reduce_nonneg(current, modulus);
    lifted.push_back(std::move(current));
  }

  // Zassenhaus recombination over subsets of increasing size.
  std::vector<ZPoly> result;
  ZPoly remaining = f;
  std::vector<ZPoly> pool = std::move(lifted);
  std::size_t s = 1;
  while (2 * s <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      ZPoly cand{remaining.back()};
      for (std::size_t i : idx) {
        cand = zmul(cand, pool[i]);
        reduce_nonneg(cand, modulus);
      }
      cand = primitive(symmetric(cand, modulus));
      if (cand.size() >= 2) {
        if (auto q = zdivide(remaining, cand)) {
          result.push_back(cand);
          remaining = primitive(*q);
          std::vector<ZPoly> rest;
          for (std::size_t j = 0; j < pool.size(); ++j) {
            if (std::find(idx.begin(), idx.end(), j) == idx.end()) {
              rest.push_back(std::move(pool[j]));
            }
          }
          pool = std::move(rest);
          found = true;
          break;
        }
      }
      // next combination
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == pool.size() - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (remaining.size() >= 2) result.push_back(primitive(remaining));
  return result;
}

std::vector<Factor> factor_over_Q(const UniPoly& p) {
  if (p.degree() < 1) throw InvalidArgument("cannot factor a constant polynomial");
  std::vector<Factor> out;
  auto parts = squarefree_decomposition(p);
  for (std::size_t m = 0; m < parts.size(); ++m) {
    const UniPoly& a = parts[m];
    if (a.degree() < 1) continue;
    unsigned mult = static_cast<unsigned>(m + 1);
    if (a.degree() == 1) {
      out.push_back({a.monic(), mult});
      continue;
    }
    for (const auto& z : factor_squarefree_integer(primitive_integer_coeffs(a))) {
      out.push_back({zpoly_to_uni(z).monic(), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
    return uni_less(a.poly, b.poly);
  });
  return out;
}

UniPoly expand_factors(const std::vector<Factor>& factors) {
  UniPoly acc = UniPoly::constant(1);
  for (const auto& f : factors) {
    for (unsigned k = 0; k < f.multiplicity; ++k) acc *= f.poly;
  }
  return acc;
}

}  // namespace polar
