#pragma once

#include <utility>
#include <vector>

#include "polar/unipoly.hpp"

namespace polar {

struct Factor {
  UniPoly poly;  // monic, irreducible over Q
  unsigned multiplicity;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Factorization over Q by squarefree decomposition, Berlekamp modulo a
/// small prime, Hensel lifting and subset recombination (Zassenhaus).
/// Factors are monic and sorted by degree, then by coefficient list compared
/// lexicographically from the constant term up. Throws on constant input.
std::vector<Factor> factor_over_Q(const UniPoly& p);

/// Irreducible factors of a squarefree primitive integer polynomial,
/// returned as primitive integer polynomials (positive leading coefficient).
std::vector<std::vector<Integer>> factor_squarefree_integer(
    const std::vector<Integer>& f);

/// Product of factor^multiplicity.
UniPoly expand_factors(const std::vector<Factor>& factors);

}  // namespace polar
