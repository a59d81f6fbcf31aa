#pragma once

#include <string>
#include <variant>
#include <vector>

#include "smflab/rep_data.hpp"
#include "smflab/root_system.hpp"

namespace smflab {

enum class PteClass { Trivial, Nontrivial, Invalid };

/// Candidate solution of the Prouhet-Tarry-Escott problem: two integer
/// lists whose j-th power sums agree for j = 1..degree.
struct PteSolution {
  std::vector<long> x;
  std::vector<long> y;
  int degree = 2;
};

/// Invalid when some power sum differs, Trivial when the lists are equal as
/// multisets, Nontrivial otherwise.
PteClass pte_check(const PteSolution& sol);

/// The classical one-parameter family of size-3 degree-2 solutions:
/// [s+1, s-3, s-4] and [s, s-1, s-5].
PteSolution pte_parametric_deg2(long s);

/// All nontrivial size-n degree-m solutions with entries in [-bound, bound],
/// deduplicated up to common translation and list order. Lists are sorted
/// ascending; each class is normalized so its smallest entry is 0.
std::vector<PteSolution> pte_bruteforce(int n, int m, long bound);

/// Witness that two summands of V_lambda (x) V_nu share the same Casimir
/// character: mu1 = nu + shift1 and mu2 = nu + shift2 are distinct dominant
/// weights with shifts in Pi(V_lambda) and chi(mu1) = chi(mu2) = char_value.
struct CollisionCertificate {
  LieType t;
  Weight lambda;
  Weight nu;
  Weight mu1;
  Weight mu2;
  Rat char_value;
};

/// Negative result of an exhaustive scan: for every dominant nu with
/// coordinates <= bound, the Casimir eigenvalue functions attached to the
/// dominant shifts of nu by weights of V_lambda take pairwise distinct
/// values.
struct DistinctnessCertificate {
  LieType t;
  Weight lambda;
  long bound = 0;
  unsigned long long tuples_checked = 0;
};

using CollisionOutcome = std::variant<CollisionCertificate, DistinctnessCertificate>;

/// For a multiplicity-free lambda: either a collision certificate (family
/// constructions with the smallest qualifying nu in (total, lexicographic)
/// order, or a bounded search for the interior A-type fundamentals) or a
/// distinctness certificate from an exhaustive sweep up to search_bound.
CollisionOutcome find_collision(const RootSystemData& rs, const Weight& lambda, long search_bound = 6);

/// Re-derives every claim of the certificate from scratch: dominance,
/// membership of the shifts in Pi(V_lambda), exact character equality, and
/// multiplicity one of both summands in the product (general oracle plus
/// the applicable closed rule). On failure fills reason and returns false.
bool verify_certificate(const RootSystemData& rs, const CollisionCertificate& cert,
                        std::string* reason = nullptr);

/// Exhaustive distinctness sweep used by find_collision for the
/// chain-classified weights; exposed for the benchmark tool and tests.
/// Evaluates the scaled eigenvalue forms in 64-bit integers (exact: the
/// common denominator is cleared). Returns an outcome of either kind.
CollisionOutcome sweep_distinctness(const RootSystemData& rs, const WeightSystem& lambda_ws,
                                    long bound, bool serial = false);

/// A-type certificates correspond to degree-2 PTE pairs via the shifted
/// coordinate lists x_i = f_i(mu) - i; throws Unsupported for other types.
PteSolution pte_from_certificate(const RootSystemData& rs, const CollisionCertificate& cert);

}  // namespace smflab
