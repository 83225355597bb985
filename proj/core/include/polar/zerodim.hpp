#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polar/multipoly.hpp"
#include "polar/unipoly.hpp"

namespace polar {

/// Zero-dimensional set {xi = (p_1(tau), ..., p_n(tau)) : q(tau) = 0} with
/// u = sum u_coeffs[k] * X_k taking the value tau at xi.
struct UnivariateRepresentation {
  std::vector<Rational> u_coeffs;
  UniPoly q = UniPoly::constant(1);  // monic
  std::vector<UniPoly> p;            // deg p_k < deg q
  Rational rho{1};                   // always 1 once no free variables remain

  std::size_t n_vars() const noexcept { return p.size(); }
  bool empty() const noexcept { return q.degree() <= 0; }
};

/// g(p_1, ..., p_n) reduced modulo q.
UniPoly compose_mod(const MultiPoly& g, std::span<const UniPoly> p, const UniPoly& q);

enum class RepresentationCheck {
  None,
  Equations,       // (a) every input vanishes on the parametrization
  LinearForm,      // (b) u(p) = U mod q
  Localization,    // (c) delta(p) is a unit modulo q
  SquarefreeMonic  // (d) q monic and squarefree
};

/// "a".."d" for the named check, "" for None.
std::string check_label(RepresentationCheck c);

struct VerifyResult {
  RepresentationCheck failed = RepresentationCheck::None;
  std::string detail;
  bool ok() const noexcept { return failed == RepresentationCheck::None; }
  explicit operator bool() const noexcept { return ok(); }
};

VerifyResult verify_representation(const UnivariateRepresentation& ur,
                                   std::span<const MultiPoly> polys, const MultiPoly& delta);

struct ZeroDimOptions {
  unsigned height = 997;
  unsigned retry_budget = 8;
  /// Use this separating form instead of sampling one (no retries).
  std::optional<std::vector<Rational>> linear_form;
};

struct ZeroDimSolution {
  UnivariateRepresentation rep;
  std::size_t quotient_dimension = 0;  // points of the saturated system
  unsigned attempts = 0;               // linear forms tried
};

/// Solve {polys = 0, delta != 0} exactly: Groebner basis of the ideal with
/// t*delta - 1 adjoined, then the minimal polynomial of a separating form u
/// and coordinates in the quotient algebra. Throws PositiveDimensional,
/// SeparationFailure or NotRadical.
ZeroDimSolution solve_zero_dim(std::span<const MultiPoly> polys, const MultiPoly& delta,
                               std::uint64_t seed, const ZeroDimOptions& options = {});

}  // namespace polar
