#pragma once

#include <vector>

#include "smflab/rep_data.hpp"
#include "smflab/root_system.hpp"

namespace smflab {

/// Multiplicity list for V_left (x) V_right.
struct Decomposition {
  Weight left;
  Weight right;
  /// (highest weight, multiplicity), sorted lexicographically, all
  /// multiplicities positive.
  std::vector<std::pair<Weight, long>> summands;

  long multiplicity(const Weight& w) const;
};

/// Exact dimension sum over the summands; used for conservation checks.
Int decomposition_dim(const RootSystemData& rs, const Decomposition& d);

bool is_minuscule(const LieType& t, const Weight& lambda);

/// V_lambda (x) V_nu for minuscule lambda: one summand V_{nu+mu} for every
/// weight mu of V_lambda with nu + mu dominant. Throws Unsupported when
/// lambda is not minuscule.
Decomposition decompose_minuscule(const RootSystemData& rs, const Weight& lambda, const Weight& nu);

/// A-type rule for V_{k omega_1} (x) V_nu (or V_{k omega_l} when
/// use_last): summands b_i = a_i + c_i - c_{i+1} over the tuples
/// c_1..c_{l+1} >= 0 with sum k and c_{i+1} <= a_i, each with
/// multiplicity 1.
Decomposition decompose_pieri_A(const RootSystemData& rs, long k, const Weight& nu,
                                bool use_last = false);

/// C_3 rule for V_{omega_3} (x) V_nu via the closed coefficient formula
/// (signed sums with Pochhammer weights); see also the simplified
/// equivalent decompose_c3_omega3_simple.
Decomposition decompose_c3_omega3(const RootSystemData& rs, const Weight& nu);

/// Simplified equivalent of decompose_c3_omega3: the full sign pattern
/// (+,+,+) and the single-index patterns with an adjacency correction.
Decomposition decompose_c3_omega3_simple(const RootSystemData& rs, const Weight& nu);

/// General oracle: signed Weyl-translated shifts of nu by the weight system
/// of lambda. The cap bounds dim V_lambda (weight-system construction).
Decomposition decompose_klimyk(const RootSystemData& rs, const Weight& lambda, const Weight& nu,
                               long cap = default_cap());

}  // namespace smflab
