#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "polar/multipoly.hpp"
#include "polar/random.hpp"
#include "polar/slp.hpp"
#include "polar/unipoly.hpp"

namespace polar::testing {

inline std::vector<std::string> names(std::size_t n) {
  static const char* xyz[] = {"x", "y", "z", "w"};
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) out.emplace_back(xyz[k]);
  return out;
}

/// Parse over x, y, z, ... (first n).
inline MultiPoly poly(const std::string& text, std::size_t n) {
  auto v = names(n);
  return parse_poly(text, v).poly;
}

inline Slp slp(const std::string& text, std::size_t n) {
  auto v = names(n);
  return parse_poly(text, v).slp;
}

inline UniPoly upoly(std::vector<long> c) {
  std::vector<Rational> r(c.begin(), c.end());
  return UniPoly(std::move(r));
}

/// Dense random polynomial of total degree exactly d with integer
/// coefficients in [-bound, bound].
inline MultiPoly random_poly(Rng& rng, std::size_t n, unsigned d, long bound) {
  MultiPoly p(n);
  std::vector<unsigned> e(n, 0);
  // enumerate exponents with total degree <= d
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t k, unsigned left) {
    if (k == n) {
      p.add_term(e, Rational(rng.between(-bound, bound)));
      return;
    }
    for (unsigned j = 0; j <= left; ++j) {
      e[k] = j;
      rec(k + 1, left - j);
    }
    e[k] = 0;
  };
  rec(0, d);
  if (p.total_degree() < static_cast<int>(d)) {
    std::vector<unsigned> top(n, 0);
    top[0] = d;
    p.add_term(top, Rational(1));
  }
  return p;
}

inline UniPoly random_upoly(Rng& rng, unsigned d, long bound) {
  std::vector<Rational> c;
  for (unsigned k = 0; k <= d; ++k) c.emplace_back(rng.between(-bound, bound));
  if (sgn(c.back()) == 0) c.back() = 1;
  return UniPoly(std::move(c));
}

// Random division-free program: inputs, small constants, then random
// add/sub/mul nodes whose degree is capped so expansion stays small.
inline Slp random_slp(Rng& rng, std::size_t n, std::size_t ops, unsigned max_degree) {
  SlpBuilder b(n);
  std::vector<std::size_t> pool;
  std::vector<unsigned> degree;
  for (std::size_t k = 0; k < n; ++k) {
    pool.push_back(b.input(k));
    degree.push_back(1);
  }
  for (int c = 0; c < 3; ++c) {
    pool.push_back(b.constant(sample_rational(rng, 9)));
    degree.push_back(0);
  }
  for (std::size_t i = 0; i < ops; ++i) {
    std::size_t a = rng.below(pool.size()), c = rng.below(pool.size());
    auto kind = rng.below(3);
    if (kind == 2 && degree[a] + degree[c] > max_degree) kind = rng.below(2);
    std::size_t node = 0;
    unsigned d = std::max(degree[a], degree[c]);
    switch (kind) {
      case 0: node = b.add(pool[a], pool[c]); break;
      case 1: node = b.sub(pool[a], pool[c]); break;
      default:
        node = b.mul(pool[a], pool[c]);
        d = degree[a] + degree[c];
        break;
    }
    pool.push_back(node);
    degree.push_back(d);
  }
  return std::move(b).finish({pool.back()});
}

inline std::vector<Rational> random_point(Rng& rng, std::size_t n) {
  std::vector<Rational> p;
  for (std::size_t k = 0; k < n; ++k) p.push_back(sample_rational(rng, 20));
  return p;
}

}  // namespace polar::testing
