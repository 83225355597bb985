#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polar/geometry.hpp"
#include "polar/slp.hpp"
#include "polar/unipoly.hpp"
#include "polar/zerodim.hpp"

namespace polar {

struct SpecializationChoice {
  std::vector<Rational> values;  // eta_1, ..., eta_r
  std::uint64_t seed = 0;
  unsigned height = 0;
};

SpecializationChoice sample_specialization(std::size_t r, std::uint64_t seed,
                                           unsigned height = 997);

/// The polar system with Y_1..Y_r fixed, in the remaining n - r variables.
struct SpecializedSystem {
  std::vector<MultiPoly> equations;
  MultiPoly delta;
};

SpecializedSystem specialize_free_variables(const PolarSystem& ps,
                                            const SpecializationChoice& sc);

struct RealPartSplit {
  std::vector<UniPoly> kept;       // irreducible factors with a real root
  std::vector<UniPoly> discarded;  // irreducible factors without one
  UniPoly q_star = UniPoly::constant(1);
};

/// Throws InvalidArgument unless q is nonzero and squarefree.
RealPartSplit split_real_part(const UniPoly& q);
UniPoly clean_real_part(const UniPoly& q);

/// Replace q by q_star (a divisor) and reduce the parametrization.
UnivariateRepresentation prune_representation(const UnivariateRepresentation& ur,
                                              const UniPoly& q_star);

struct GenericityOptions {
  unsigned height = 997;
  unsigned retry_budget = 8;
};

/// Certified solve of the level n-1 critical system: sample A, build the
/// polar system, solve, verify and rank-check, resampling A on failure.
struct CertifiedLevel {
  PolarSystem system;
  ZeroDimSolution solution;
  unsigned attempts = 0;               // coordinate changes tried
  std::vector<std::string> rejections; // why earlier changes were refused
};

/// Throws RetryExhausted with the last failing certificate.
CertifiedLevel solve_top_level(const Slp& f, std::uint64_t seed,
                               const GenericityOptions& options = {});

struct DegreeProfile {
  std::size_t level = 0;
  std::size_t affine_degree = 0;  // deg q
  std::size_t real_degree = 0;    // deg q_star
  UniPoly q = UniPoly::constant(1);
  UniPoly q_star = UniPoly::constant(1);
  std::vector<Rational> eta;      // specialization used (empty at level n-1)
  unsigned attempts = 0;
};

struct ProfileOptions {
  GenericityOptions genericity;
  /// Specializations tried per certified coordinate change; the largest
  /// real degree seen is reported.
  unsigned samples = 4;
  /// Real points of {f = 0} in original coordinates used to place eta.
  /// Computed from the level n-1 solve when absent.
  std::optional<std::vector<std::vector<Rational>>> guides;
};

DegreeProfile degree_profile(const Slp& f, std::size_t level, std::uint64_t seed,
                             const ProfileOptions& options = {});

}  // namespace polar
