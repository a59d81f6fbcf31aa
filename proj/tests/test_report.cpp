#include <algorithm>
#include <string>

#include "doctest.h"
#include "smflab/report.hpp"

namespace {

using namespace smflab;

}  // namespace

TEST_CASE("criteria agree over the whole catalog at small rank") {
  const Report rep = verify_theorem(4, 5);
  CHECK(rep.entries.size() == 51);
  CHECK(rep.all_consistent);
  CHECK(rep.flagged == 1);

  long listed = 0;
  for (const ReportEntry& e : rep.entries) {
    CHECK(e.crit_a == e.crit_b);
    CHECK(e.crit_a == e.crit_e);
    CHECK(e.crit_a == e.crit_f);
    CHECK(e.consistent);
    if (e.listed) {
      ++listed;
      CHECK(e.crit_a);
      CHECK(e.sweep.has_value());
      CHECK(!e.certificate.has_value());
    }
    if (!e.crit_a) {
      CHECK(e.certificate.has_value());
      CHECK(!e.listed);
    }
    if (e.listed != e.crit_a) CHECK(!e.flags.empty());
  }
  CHECK(listed > 10);

  // The single flagged entry is the rank-2 spin module, strongly
  // multiplicity free but recorded in the classification under the
  // symplectic natural module it coincides with.
  const auto flagged = std::find_if(rep.entries.begin(), rep.entries.end(),
                                    [](const ReportEntry& e) { return !e.flags.empty(); });
  REQUIRE(flagged != rep.entries.end());
  CHECK(flagged->type == LieType{Family::B, 2});
  CHECK(flagged->lambda == Weight{0, 1});
  CHECK(flagged->crit_a);
  CHECK(!flagged->listed);
}

TEST_CASE("report serialization round-trips exactly") {
  const Report rep = verify_theorem(3, 4);
  const std::string text = report_to_json(rep);
  const Report back = report_from_json(text);
  CHECK(back.rank_max == rep.rank_max);
  CHECK(back.k_max == rep.k_max);
  CHECK(back.all_consistent == rep.all_consistent);
  CHECK(back.flagged == rep.flagged);
  REQUIRE(back.entries.size() == rep.entries.size());
  for (std::size_t i = 0; i < rep.entries.size(); ++i) {
    const ReportEntry& a = rep.entries[i];
    const ReportEntry& b = back.entries[i];
    CHECK(a.type == b.type);
    CHECK(a.lambda == b.lambda);
    CHECK(a.dim == b.dim);
    CHECK(a.listed == b.listed);
    CHECK(a.crit_a == b.crit_a);
    CHECK(a.crit_b == b.crit_b);
    CHECK(a.crit_e == b.crit_e);
    CHECK(a.crit_f == b.crit_f);
    CHECK(a.flags == b.flags);
    CHECK(a.certificate.has_value() == b.certificate.has_value());
    if (a.certificate) {
      CHECK(a.certificate->nu == b.certificate->nu);
      CHECK(a.certificate->mu1 == b.certificate->mu1);
      CHECK(a.certificate->mu2 == b.certificate->mu2);
      CHECK(a.certificate->char_value == b.certificate->char_value);
    }
    CHECK(a.sweep.has_value() == b.sweep.has_value());
    if (a.sweep) {
      CHECK(a.sweep->bound == b.sweep->bound);
      CHECK(a.sweep->tuples_checked == b.sweep->tuples_checked);
    }
  }
  // Serialization is deterministic.
  CHECK(report_to_json(back) == text);
}
