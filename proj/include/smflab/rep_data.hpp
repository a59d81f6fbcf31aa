#pragma once

#include <map>
#include <utility>
#include <vector>

#include "smflab/root_system.hpp"

namespace smflab {

/// Size budget for weight-system and module constructions. Defaults to
/// 10000; the environment variable SMFLAB_CAP overrides it.
long default_cap();

/// Exact dimension of the irreducible module with highest weight lambda
/// (Weyl product formula). Requires dominant integral lambda.
Int weyl_dimension(const RootSystemData& rs, const Weight& lambda);

/// height(lambda) = sum of the simple-root coordinates of lambda; rational
/// in general, and 2*height(lambda) is the largest eigenvalue of the
/// principal semisimple element h0 on V_lambda.
Rat height(const RootSystemData& rs, const Weight& lambda);

/// The full weight multiset of V_lambda.
struct WeightSystem {
  Weight highest;
  /// (weight, multiplicity), sorted lexicographically by weight.
  std::vector<std::pair<Weight, long>> weights;

  long total_dim() const;
  /// Multiplicity of a single weight (0 when absent).
  long multiplicity(const Weight& w) const;
};

/// Computes Pi(V_lambda) with multiplicities: Weyl orbits of the dominant
/// weights, Freudenthal recursion for the multiplicities, with a fast path
/// for minuscule highest weights. Throws CapExceeded when dim V_lambda
/// exceeds cap.
WeightSystem weight_system(const RootSystemData& rs, const Weight& lambda, long cap = default_cap());

/// Every weight multiplicity equals 1.
bool is_multiplicity_free(const WeightSystem& ws);

/// Multiplicity free and the weights form a chain in the dominance order.
bool is_strongly_multiplicity_free(const RootSystemData& rs, const WeightSystem& ws);

/// Whether V_lambda is irreducible under a principal sl2 subalgebra:
/// dim V_lambda == 2 height(lambda) + 1.
bool principal_sl2_irreducible(const RootSystemData& rs, const WeightSystem& ws);

/// Decomposition of V_lambda under a principal sl2: maps the h-eigenvalue m
/// of each sl2 highest vector to the number of irreducible sl2 summands
/// with that top eigenvalue (so the summand has dimension m+1). Computed
/// from the eigenvalue histogram of h0; a negative intermediate count is an
/// internal-consistency error.
std::map<long, long> principal_sl2_decomposition(const RootSystemData& rs, const WeightSystem& ws);

/// Coefficients of the generating polynomial sum_mu m_lambda(mu) q^(e(mu))
/// with e(mu) = height(lambda* + mu); returns the coefficient list indexed
/// by exponent 0 .. 2 height(lambda). All coefficients equal to 1 is
/// equivalent to the weights forming a multiplicity-free chain.
std::vector<long> dynkin_polynomial(const RootSystemData& rs, const WeightSystem& ws);

/// Highest weight of the dual module: -w0(lambda).
Weight dual_weight(const RootSystemData& rs, const Weight& lambda);

/// One multiplicity-free highest weight from the classification list.
struct CatalogEntry {
  LieType type;
  Weight lambda;
};

/// All multiplicity-free entries with rank <= rank_max; the two infinite
/// A-type families k omega_1 and k omega_l are truncated at k <= k_max.
std::vector<CatalogEntry> multiplicity_free_catalog(int rank_max, int k_max = 5);

/// Whether lambda is in the strongly-multiplicity-free classification list.
bool smf_listed(const LieType& t, const Weight& lambda);

}  // namespace smflab
