#include "smflab/report.hpp"

#include <stdexcept>
#include <utility>
#include <variant>

#include "json.hpp"
#include "smflab/errors.hpp"

namespace smflab {

namespace {

using nlohmann::json;

long exact_long(const Int& v) {
  if (!v.fits_slong_p()) throw InternalError("integer too large for serialization");
  return v.get_si();
}

json rat_to_json(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return json::array({exact_long(c.get_num()), exact_long(c.get_den())});
}

Rat rat_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [num, den] pair");
  Rat r(Int(j[0].get<long>()), Int(j[1].get<long>()));
  r.canonicalize();
  return r;
}

json weight_to_json(const Weight& w) {
  json out = json::array();
  for (const Rat& c : w.f) out.push_back(rat_to_json(c));
  return out;
}

Weight weight_from_json(const json& j) {
  RatVec f;
  for (const auto& c : j) f.push_back(rat_from_json(c));
  return Weight(std::move(f));
}

LieType type_from_json(const json& j) {
  auto t = parse_lie_type(j.get<std::string>());
  if (!t) throw std::invalid_argument("bad type name in report");
  return *t;
}

}  // namespace

Report verify_theorem(int rank_max, int k_max, long cap, long sweep_bound) {
  Report rep;
  rep.rank_max = rank_max;
  rep.k_max = k_max;
  rep.sweep_bound = sweep_bound;
  rep.all_consistent = true;

  const LieType b2{Family::B, 2};
  const Weight b2_spin{0, 1};

  for (const CatalogEntry& cat : multiplicity_free_catalog(rank_max, k_max)) {
    const RootSystemData& rs = root_system(cat.type);
    const WeightSystem ws = weight_system(rs, cat.lambda, cap);

    ReportEntry e;
    e.type = cat.type;
    e.lambda = cat.lambda;
    e.dim = ws.total_dim();
    e.listed = smf_listed(cat.type, cat.lambda);
    e.crit_a = is_strongly_multiplicity_free(rs, ws);
    e.crit_e = principal_sl2_irreducible(rs, ws);
    long sl2_summands = 0;
    for (const auto& [top, count] : principal_sl2_decomposition(rs, ws)) sl2_summands += count;
    e.crit_f = sl2_summands == 1;

    const bool swept = e.listed || (cat.type == b2 && cat.lambda == b2_spin);
    CollisionOutcome outcome = find_collision(rs, cat.lambda, swept ? sweep_bound : 6);
    if (std::holds_alternative<CollisionCertificate>(outcome)) {
      CollisionCertificate cert = std::get<CollisionCertificate>(outcome);
      std::string reason;
      if (!verify_certificate(rs, cert, &reason))
        throw InternalError("collision certificate for " + to_string(cat.type) + " " +
                            cat.lambda.to_string() + " failed verification: " + reason);
      e.crit_b = false;
      e.certificate = std::move(cert);
    } else {
      e.crit_b = true;
      e.sweep = std::get<DistinctnessCertificate>(outcome);
    }

    e.consistent = e.crit_a == e.crit_b && e.crit_b == e.crit_e && e.crit_e == e.crit_f;
    if (!e.consistent) rep.all_consistent = false;
    if (e.consistent && e.crit_a != e.listed) {
      if (cat.type == b2 && cat.lambda == b2_spin && e.crit_a) {
        e.flags.push_back(
            "all four criteria hold: the module coincides with the rank-2 symplectic natural "
            "module, which the classification records under type C");
        rep.flagged += 1;
      } else {
        rep.all_consistent = false;
      }
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

std::string report_to_json(const Report& r) {
  json out;
  out["rank_max"] = r.rank_max;
  out["k_max"] = r.k_max;
  out["sweep_bound"] = r.sweep_bound;
  out["all_consistent"] = r.all_consistent;
  out["flagged"] = r.flagged;
  json entries = json::array();
  for (const ReportEntry& e : r.entries) {
    json je;
    je["type"] = to_string(e.type);
    je["lambda"] = weight_to_json(e.lambda);
    je["dim"] = e.dim;
    je["listed"] = e.listed;
    je["criteria"] = {{"a", e.crit_a}, {"b", e.crit_b}, {"e", e.crit_e}, {"f", e.crit_f}};
    je["consistent"] = e.consistent;
    je["flags"] = e.flags;
    if (e.certificate) {
      const CollisionCertificate& c = *e.certificate;
      je["evidence"] = {{"kind", "collision"},       {"type", to_string(c.t)},
                        {"lambda", weight_to_json(c.lambda)}, {"nu", weight_to_json(c.nu)},
                        {"mu1", weight_to_json(c.mu1)},       {"mu2", weight_to_json(c.mu2)},
                        {"char_value", rat_to_json(c.char_value)}};
    } else if (e.sweep) {
      const DistinctnessCertificate& s = *e.sweep;
      je["evidence"] = {{"kind", "distinct"},
                        {"type", to_string(s.t)},
                        {"lambda", weight_to_json(s.lambda)},
                        {"bound", s.bound},
                        {"tuples_checked", s.tuples_checked}};
    }
    entries.push_back(std::move(je));
  }
  out["entries"] = std::move(entries);
  return out.dump(2);
}

Report report_from_json(const std::string& text) {
  const json in = json::parse(text);
  Report r;
  r.rank_max = in.at("rank_max").get<int>();
  r.k_max = in.at("k_max").get<int>();
  r.sweep_bound = in.at("sweep_bound").get<long>();
  r.all_consistent = in.at("all_consistent").get<bool>();
  r.flagged = in.at("flagged").get<long>();
  for (const auto& je : in.at("entries")) {
    ReportEntry e;
    e.type = type_from_json(je.at("type"));
    e.lambda = weight_from_json(je.at("lambda"));
    e.dim = je.at("dim").get<long>();
    e.listed = je.at("listed").get<bool>();
    const auto& cr = je.at("criteria");
    e.crit_a = cr.at("a").get<bool>();
    e.crit_b = cr.at("b").get<bool>();
    e.crit_e = cr.at("e").get<bool>();
    e.crit_f = cr.at("f").get<bool>();
    e.consistent = je.at("consistent").get<bool>();
    for (const auto& fl : je.at("flags")) e.flags.push_back(fl.get<std::string>());
    if (je.contains("evidence")) {
      const auto& ev = je.at("evidence");
      const std::string kind = ev.at("kind").get<std::string>();
      if (kind == "collision") {
        CollisionCertificate c;
        c.t = type_from_json(ev.at("type"));
        c.lambda = weight_from_json(ev.at("lambda"));
        c.nu = weight_from_json(ev.at("nu"));
        c.mu1 = weight_from_json(ev.at("mu1"));
        c.mu2 = weight_from_json(ev.at("mu2"));
        c.char_value = rat_from_json(ev.at("char_value"));
        e.certificate = std::move(c);
      } else if (kind == "distinct") {
        DistinctnessCertificate s;
        s.t = type_from_json(ev.at("type"));
        s.lambda = weight_from_json(ev.at("lambda"));
        s.bound = ev.at("bound").get<long>();
        s.tuples_checked = ev.at("tuples_checked").get<unsigned long long>();
        e.sweep = std::move(s);
      } else {
        throw std::invalid_argument("unknown evidence kind: " + kind);
      }
    }
    r.entries.push_back(std::move(e));
  }
  return r;
}

}  // namespace smflab
