#pragma once

#include <optional>
#include <vector>

#include "smflab/rep_data.hpp"
#include "smflab/root_system.hpp"

namespace smflab {

/// chi(lambda) = (lambda, lambda + 2 delta): the scalar by which the
/// quadratic Casimir element acts on V_lambda under the library's
/// normalization of the invariant form. Defined for any weight (used as a
/// formal value on non-dominant arguments).
Rat casimir_char(const RootSystemData& rs, const Weight& lambda);

/// Shifted coordinate data for the classical-family power-sum evaluation of
/// chi: zeta holds the coordinates indexed by the positive part of
/// index_set, alpha is the per-family offset, and index_set lists the full
/// (signed) index range. The negative-index coordinates are -zeta_i and
/// zeta_0 = 0.
struct YoungCoords {
  LieType type;
  RatVec zeta;
  Rat alpha;
  std::vector<long> index_set;
};

/// Classical families only; throws Unsupported for E and G types.
YoungCoords young_coords(const RootSystemData& rs, const Weight& lambda);

/// Independent evaluation of chi via the power-sum formula
/// S = sum_{i in I} [ (zeta_i + r_i + alpha)^2 - (r_i + alpha)^2 ],
/// r_i = (alpha + 1) sgn(i) - i. Exact; must agree with casimir_char with
/// constant 1 on every dominant weight of a classical family.
Rat popov_char(const RootSystemData& rs, const Weight& lambda);

/// Affine function nu -> (nu, shift) + constant in the fundamental
/// coordinates of nu. Encodes the Casimir eigenvalue function
/// f(nu) = (nu, mu) + chi(mu)/2 - chi(lambda)/2 attached to the summand
/// V_{nu+mu} of V_lambda (x) V_nu.
struct EigFn {
  Weight shift;  ///< mu, a weight of V_lambda
  Rat constant;
  RatVec coeffs;  ///< coeffs[i] = (omega_{i+1}, mu)

  Rat eval(const Weight& nu) const;
  bool operator==(const EigFn& o) const { return shift == o.shift && constant == o.constant && coeffs == o.coeffs; }
};

EigFn eig_fn(const RootSystemData& rs, const Weight& lambda, const Weight& mu);

/// Translated Weyl action: word (i_1, ..., i_m) acts as
/// s_{i_1} ... s_{i_m} on nu + delta, then delta is subtracted. Indices are
/// 1-based simple reflections.
Weight translated_weyl_action(const RootSystemData& rs, const std::vector<int>& word, const Weight& nu);

struct DistinctnessResult {
  bool distinct = true;
  /// Offending pair of shifts with equal eigenvalue when distinct == false.
  std::optional<std::pair<Weight, Weight>> offending;
  /// Number of (shift, shift) pairs compared.
  long pairs_checked = 0;
};

/// For every pair of weights mu != mu' of V_lambda with nu + mu and
/// nu + mu' both dominant, tests f values for equality (exact). The
/// strongly-multiplicity-free classification predicts distinctness for the
/// listed weights at every dominant nu.
DistinctnessResult char_distinctness_smf(const RootSystemData& rs, const WeightSystem& lambda_ws,
                                         const Weight& nu);

}  // namespace smflab
