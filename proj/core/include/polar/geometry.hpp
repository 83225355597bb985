#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polar/multipoly.hpp"
#include "polar/slp.hpp"
#include "polar/unipoly.hpp"
#include "polar/zerodim.hpp"

namespace polar {

/// x = A y with A = [[I_i, 0], [(a_kl), I_{n-i}]], unit lower block
/// triangular. Entries are stored row by row for k = i+1..n, l = 1..i.
struct CoordinateChange {
  std::size_t n = 0;
  std::size_t level = 0;
  std::vector<std::vector<Rational>> entries;  // (n - level) x level
  std::uint64_t seed = 0;
  unsigned height = 0;

  static CoordinateChange identity(std::size_t n, std::size_t level);

  Rational entry(std::size_t k, std::size_t l) const;  // 0-based matrix position
  std::vector<std::vector<Rational>> matrix() const;
  Rational determinant() const;

  /// x = A y.
  std::vector<Rational> apply(std::span<const Rational> y) const;
  /// y = A^{-1} x.
  std::vector<Rational> apply_inverse(std::span<const Rational> x) const;
  /// Coordinates of parametrized points, x = A p(U).
  std::vector<UniPoly> apply(std::span<const UniPoly> y) const;
  /// Coefficients mu with mu . x = lambda . y, i.e. mu = A^{-T} lambda.
  std::vector<Rational> transform_linear_form(std::span<const Rational> lambda) const;
};

CoordinateChange sample_generic_change(std::size_t n, std::size_t level, std::uint64_t seed,
                                       unsigned height = 997);

/// SLP for f(A y).
Slp apply_change(const Slp& f, const CoordinateChange& a);
MultiPoly apply_change(const MultiPoly& f, const CoordinateChange& a);

struct PolarSystem {
  std::size_t level = 0;
  std::size_t free_count = 0;  // n - level - 1
  CoordinateChange change;
  Slp gradient;                       // f(A y) and all n partials
  std::vector<MultiPoly> equations;   // f, df/dY_1, ..., df/dY_level
  std::vector<MultiPoly> partials;    // df/dY_1, ..., df/dY_n
  MultiPoly delta;                    // sum of squared partials

  std::size_t n_vars() const noexcept { return change.n; }
};

/// Throws InvalidArgument for constant f and NotSquarefree (with the
/// repeated factor along a random line as witness) otherwise.
void require_squarefree(const MultiPoly& f, std::uint64_t seed);

PolarSystem build_polar_system(const Slp& f, std::size_t level, const CoordinateChange& a);

struct RankCheck {
  bool max_rank = false;   // Jacobian rank level+1 modulo every factor of q
  bool delta_unit = false; // gcd(delta(p) mod q, q) = 1
  std::string detail;
  bool ok() const noexcept { return max_rank && delta_unit; }
  explicit operator bool() const noexcept { return ok(); }
};

/// Requires checks (a), (b) and (d) of verify_representation to hold;
/// throws InvalidArgument otherwise.
RankCheck check_max_rank(std::span<const MultiPoly> equations, const MultiPoly& delta,
                         const UnivariateRepresentation& ur);
RankCheck check_max_rank(const PolarSystem& ps, const UnivariateRepresentation& ur);

}  // namespace polar
