#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smflab/collisions.hpp"
#include "smflab/rep_data.hpp"

namespace smflab {

/// Verdict for one entry of the multiplicity-free catalog. The four
/// criteria are computed independently:
///   a: the weights of V_lambda form a multiplicity-free chain,
///   b: the Casimir eigenvalue functions attached to the tensor summands are
///      pairwise distinct (certified by a sweep) or collide (certified by an
///      explicit pair),
///   e: dim V_lambda == 2 height(lambda) + 1,
///   f: V_lambda is a single irreducible module of a principal sl2.
struct ReportEntry {
  LieType type;
  Weight lambda;
  long dim = 0;
  bool listed = false;  ///< member of the strongly-multiplicity-free list
  bool crit_a = false;
  bool crit_b = false;
  bool crit_e = false;
  bool crit_f = false;
  bool consistent = false;  ///< a == b == e == f
  std::vector<std::string> flags;
  /// Exactly one of the two evidence fields is set, matching crit_b.
  std::optional<CollisionCertificate> certificate;
  std::optional<DistinctnessCertificate> sweep;
};

struct Report {
  int rank_max = 0;
  int k_max = 0;
  long sweep_bound = 0;
  std::vector<ReportEntry> entries;
  /// Every entry is internally consistent and matches the classification
  /// list, up to flagged exceptions.
  bool all_consistent = false;
  long flagged = 0;
};

/// Runs the four criteria over the full multiplicity-free catalog up to
/// rank_max. Collision certificates are re-verified before being accepted as
/// evidence (a failing certificate raises InternalError rather than
/// reporting a false criterion value). Listed entries are swept for
/// distinctness over the dominant box [0, sweep_bound]^rank.
Report verify_theorem(int rank_max = 8, int k_max = 5, long cap = default_cap(),
                      long sweep_bound = 3);

/// JSON with exact rationals encoded as reduced [numerator, denominator]
/// pairs, denominator positive. report_from_json(report_to_json(r))
/// reproduces r exactly.
std::string report_to_json(const Report& r);
Report report_from_json(const std::string& text);

}  // namespace smflab
