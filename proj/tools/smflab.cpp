#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "smflab/casimir.hpp"
#include "smflab/collisions.hpp"
#include "smflab/errors.hpp"
#include "smflab/matrix_rep.hpp"
#include "smflab/rep_data.hpp"
#include "smflab/report.hpp"
#include "smflab/tensor.hpp"

namespace {

using nlohmann::json;
using namespace smflab;

struct Options {
  bool json_out = false;
  long cap = 0;
  unsigned seed = 0;
  std::vector<std::string> args;
  std::size_t next = 0;

  const std::string& take(const std::string& what) {
    if (next >= args.size()) throw Unsupported("missing argument: " + what);
    return args[next++];
  }
  void done() const {
    if (next < args.size()) throw Unsupported("unexpected argument: " + args[next]);
  }
};

LieType parse_type_args(Options& o) {
  const std::string& first = o.take("type");
  if (auto t = parse_lie_type(first)) return *t;
  const std::string& second = o.take("rank");
  if (auto t = parse_lie_type(first + second)) return *t;
  throw Unsupported("unrecognized type: " + first + " " + second);
}

Weight parse_weight_arg(const std::string& text, int rank) {
  RatVec coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) coords.push_back(rat_parse(item));
  if (static_cast<int>(coords.size()) != rank)
    throw Unsupported("weight has " + std::to_string(coords.size()) + " coordinates, expected " +
                      std::to_string(rank));
  return Weight(std::move(coords));
}

json rat_json(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (!c.get_num().fits_slong_p() || !c.get_den().fits_slong_p())
    throw InternalError("value too large for serialization");
  return json::array({c.get_num().get_si(), c.get_den().get_si()});
}

json weight_json(const Weight& w) {
  json out = json::array();
  for (const Rat& c : w.f) out.push_back(rat_json(c));
  return out;
}

json ratvec_json(const RatVec& v) {
  json out = json::array();
  for (const Rat& c : v) out.push_back(rat_json(c));
  return out;
}

std::string weight_str(const Weight& w) { return w.to_string(); }

int cmd_info(Options& o) {
  const LieType t = parse_type_args(o);
  o.done();
  const RootSystemData& rs = root_system(t);
  if (o.json_out) {
    json out;
    out["type"] = to_string(t);
    out["rank"] = t.rank;
    json cartan = json::array();
    for (const RatVec& row : rs.cartan) cartan.push_back(ratvec_json(row));
    out["cartan"] = cartan;
    json roots = json::array();
    for (const RatVec& r : rs.positive_roots) roots.push_back(ratvec_json(r));
    out["positive_roots"] = roots;
    out["delta"] = weight_json(rs.delta);
    out["coroot_coeffs"] = ratvec_json(rs.coroot_coeffs);
    json gram = json::array();
    for (const RatVec& row : rs.ip_gram) gram.push_back(ratvec_json(row));
    out["ip_gram"] = gram;
    out["d"] = ratvec_json(rs.d);
    out["killing_scale"] = rat_json(rs.killing_scale);
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << to_string(t) << ": rank " << t.rank << ", " << rs.positive_roots.size()
            << " positive roots\n";
  std::cout << "cartan matrix:\n";
  for (const RatVec& row : rs.cartan) {
    std::cout << "  [";
    for (std::size_t j = 0; j < row.size(); ++j)
      std::cout << (j ? ", " : "") << rat_to_string(row[j]);
    std::cout << "]\n";
  }
  std::cout << "delta = " << weight_str(rs.delta) << "\n";
  std::cout << "coroot coefficients = (";
  for (std::size_t i = 0; i < rs.coroot_coeffs.size(); ++i)
    std::cout << (i ? "," : "") << rat_to_string(rs.coroot_coeffs[i]);
  std::cout << ")\n";
  return 0;
}

int cmd_module(Options& o) {
  const LieType t = parse_type_args(o);
  const RootSystemData& rs = root_system(t);
  const Weight lambda = parse_weight_arg(o.take("weight"), t.rank);
  o.done();
  const WeightSystem ws = weight_system(rs, lambda, o.cap);
  const Rat ht = height(rs, lambda);
  const bool mf = is_multiplicity_free(ws);
  const bool smf = is_strongly_multiplicity_free(rs, ws);
  const bool sl2_irr = principal_sl2_irreducible(rs, ws);
  const auto sl2 = principal_sl2_decomposition(rs, ws);
  const auto dynkin = dynkin_polynomial(rs, ws);
  if (o.json_out) {
    json out;
    out["type"] = to_string(t);
    out["lambda"] = weight_json(lambda);
    out["dim"] = ws.total_dim();
    out["height"] = rat_json(ht);
    out["weights"] = ws.weights.size();
    out["multiplicity_free"] = mf;
    out["strongly_multiplicity_free"] = smf;
    out["listed"] = smf_listed(t, lambda);
    out["principal_sl2_irreducible"] = sl2_irr;
    json dec = json::array();
    for (auto it = sl2.rbegin(); it != sl2.rend(); ++it)
      dec.push_back(json::array({it->first, it->second}));
    out["principal_sl2_decomposition"] = dec;
    out["dynkin_polynomial"] = dynkin;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << to_string(t) << " module " << weight_str(lambda) << ":\n";
  std::cout << "  dim = " << ws.total_dim() << ", ht = " << rat_to_string(ht) << ", distinct weights = "
            << ws.weights.size() << "\n";
  std::cout << "  multiplicity free = " << (mf ? "yes" : "no")
            << ", strongly multiplicity free = " << (smf ? "yes" : "no") << "\n";
  std::cout << "  principal sl2: " << (sl2_irr ? "irreducible" : "reducible") << ", tops {";
  bool first = true;
  for (auto it = sl2.rbegin(); it != sl2.rend(); ++it)
    for (long c = 0; c < it->second; ++c) {
      std::cout << (first ? "" : ", ") << it->first;
      first = false;
    }
  std::cout << "}\n";
  std::cout << "  dynkin polynomial coefficients = [";
  for (std::size_t i = 0; i < dynkin.size(); ++i) std::cout << (i ? "," : "") << dynkin[i];
  std::cout << "]\n";
  return 0;
}

int cmd_verify(Options& o, int rank_max) {
  o.done();
  const Report rep = verify_theorem(rank_max, 5, o.cap, 3);
  if (o.json_out) {
    std::cout << report_to_json(rep) << "\n";
  } else {
    for (const ReportEntry& e : rep.entries) {
      std::cout << to_string(e.type) << " " << weight_str(e.lambda) << " dim=" << e.dim
                << " a=" << e.crit_a << " b=" << e.crit_b << " e=" << e.crit_e
                << " f=" << e.crit_f << (e.listed ? " [listed]" : "");
      for (const std::string& f : e.flags) std::cout << " flag: " << f;
      if (!e.consistent) std::cout << " INCONSISTENT";
      std::cout << "\n";
    }
    std::cout << "entries: " << rep.entries.size() << ", flagged: " << rep.flagged
              << ", consistent: " << (rep.all_consistent ? "yes" : "no") << "\n";
    std::cout << "criteria c and d are implied: c follows from b (invertibility of the "
                 "Vandermonde matrix of distinct eigenvalues) and d from e (the powers of the "
                 "principal nilpotent form a free basis)\n";
  }
  if (!rep.all_consistent) {
    for (const ReportEntry& e : rep.entries)
      if (!e.consistent || (e.flags.empty() && e.crit_a != e.listed))
        std::cerr << "inconsistent entry: " << to_string(e.type) << " " << weight_str(e.lambda)
                  << "\n";
    return 1;
  }
  return 0;
}

int cmd_casimir(Options& o, bool popov) {
  const LieType t = parse_type_args(o);
  const RootSystemData& rs = root_system(t);
  const Weight lambda = parse_weight_arg(o.take("weight"), t.rank);
  o.done();
  const Rat chi = casimir_char(rs, lambda);
  json out;
  out["chi"] = rat_json(chi);
  std::string text = "chi(" + weight_str(lambda) + ") = " + rat_to_string(chi);
  if (popov) {
    const Rat alt = popov_char(rs, lambda);
    out["popov"] = rat_json(alt);
    out["agree"] = alt == chi;
    text += ", power-sum value = " + rat_to_string(alt) + (alt == chi ? " (agree)" : " (DISAGREE)");
    if (alt != chi) throw InternalError("power-sum evaluation disagrees with the bilinear form");
  }
  if (o.json_out)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << text << "\n";
  return 0;
}

int cmd_tensor(Options& o, const std::string& rule) {
  const LieType t = parse_type_args(o);
  const RootSystemData& rs = root_system(t);
  const Weight lambda = parse_weight_arg(o.take("lambda"), t.rank);
  const Weight nu = parse_weight_arg(o.take("nu"), t.rank);
  o.done();
  Decomposition dec;
  if (rule == "minuscule") {
    dec = decompose_minuscule(rs, lambda, nu);
  } else if (rule == "pieri") {
    if (t.family != Family::A) throw Unsupported("the one-row rule applies to type A only");
    bool use_last = false;
    long k = 0;
    for (int i = 0; i < t.rank; ++i) {
      if (lambda.f[i] == 0) continue;
      if (i == 0)
        k = rat_to_long(lambda.f[0]);
      else if (i == t.rank - 1) {
        k = rat_to_long(lambda.f[i]);
        use_last = true;
      } else
        throw Unsupported("the one-row rule needs a multiple of the first or last fundamental weight");
      if ((i == 0 && lambda.f[t.rank - 1] != 0 && t.rank > 1))
        throw Unsupported("the one-row rule needs a multiple of the first or last fundamental weight");
    }
    dec = decompose_pieri_A(rs, k, nu, use_last);
  } else if (rule == "c3omega3") {
    dec = decompose_c3_omega3(rs, nu);
  } else if (rule == "klimyk") {
    dec = decompose_klimyk(rs, lambda, nu, o.cap);
  } else {
    throw Unsupported("unknown rule: " + rule);
  }
  if (o.json_out) {
    json out;
    out["type"] = to_string(t);
    out["lambda"] = weight_json(dec.left);
    out["nu"] = weight_json(dec.right);
    out["rule"] = rule;
    json sums = json::array();
    for (const auto& [w, m] : dec.summands) sums.push_back({{"component", weight_json(w)}, {"mult", m}});
    out["summands"] = sums;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << to_string(t) << " " << weight_str(dec.left) << " (x) " << weight_str(dec.right)
            << " [" << rule << "]:\n";
  for (const auto& [w, m] : dec.summands) {
    std::cout << "  " << weight_str(w);
    if (m != 1) std::cout << " (x" << m << ")";
    std::cout << "\n";
  }
  std::cout << "  " << dec.summands.size() << " distinct components, total dim "
            << decomposition_dim(rs, dec).get_str() << "\n";
  return 0;
}

int cmd_collide(Options& o, long bound) {
  const LieType t = parse_type_args(o);
  const RootSystemData& rs = root_system(t);
  const Weight lambda = parse_weight_arg(o.take("lambda"), t.rank);
  o.done();
  const CollisionOutcome outcome = find_collision(rs, lambda, bound);
  if (std::holds_alternative<CollisionCertificate>(outcome)) {
    const auto& c = std::get<CollisionCertificate>(outcome);
    std::string reason;
    const bool ok = verify_certificate(rs, c, &reason);
    if (!ok) throw InternalError("certificate failed verification: " + reason);
    if (o.json_out) {
      json out;
      out["kind"] = "collision";
      out["type"] = to_string(c.t);
      out["lambda"] = weight_json(c.lambda);
      out["nu"] = weight_json(c.nu);
      out["mu1"] = weight_json(c.mu1);
      out["mu2"] = weight_json(c.mu2);
      out["char_value"] = rat_json(c.char_value);
      out["verified"] = ok;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "collision for " << to_string(t) << " " << weight_str(lambda) << ":\n";
      std::cout << "  nu  = " << weight_str(c.nu) << "\n";
      std::cout << "  mu1 = " << weight_str(c.mu1) << "\n";
      std::cout << "  mu2 = " << weight_str(c.mu2) << "\n";
      std::cout << "  chi(mu1) = chi(mu2) = " << rat_to_string(c.char_value) << " (verified)\n";
    }
  } else {
    const auto& s = std::get<DistinctnessCertificate>(outcome);
    if (o.json_out) {
      json out;
      out["kind"] = "distinct";
      out["type"] = to_string(s.t);
      out["lambda"] = weight_json(s.lambda);
      out["bound"] = s.bound;
      out["tuples_checked"] = s.tuples_checked;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "distinct for " << to_string(t) << " " << weight_str(lambda)
                << ": eigenvalue functions pairwise distinct over [0," << s.bound << "]^"
                << t.rank << " (" << s.tuples_checked << " tuples checked)\n";
    }
  }
  return 0;
}

double basis_change_dev(const MatrixRep& rl, const MatrixRep& rn, const CMat& m, unsigned seed) {
  const long g = static_cast<long>(rl.images.size());
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Eigen::MatrixXd s(g, g);
  Eigen::FullPivLU<Eigen::MatrixXd> lu;
  do {
    for (long i = 0; i < g; ++i)
      for (long j = 0; j < g; ++j) s(i, j) = uni(rng);
    lu.compute(s);
  } while (!lu.isInvertible());
  const Eigen::MatrixXd si = lu.inverse();
  // Transformed basis z = S x, dual coefficients S^{-T} D S^{-1}.
  const Eigen::MatrixXd dual2 = si.transpose() * rl.dual_coeffs * si;
  std::vector<CMat> imgs_l(g, CMat::Zero(rl.dim, rl.dim));
  std::vector<CMat> imgs_n(g, CMat::Zero(rn.dim, rn.dim));
  for (long c = 0; c < g; ++c)
    for (long a = 0; a < g; ++a) {
      if (s(c, a) != 0.0) {
        imgs_l[c] += s(c, a) * rl.images[a];
        imgs_n[c] += s(c, a) * rn.images[a];
      }
    }
  CMat m2 = CMat::Zero(m.rows(), m.cols());
  for (long c = 0; c < g; ++c) {
    CMat dual_img = CMat::Zero(rn.dim, rn.dim);
    for (long b = 0; b < g; ++b)
      if (std::abs(dual2(c, b)) > 1e-14) dual_img += dual2(c, b) * imgs_n[b];
    CMat kr = CMat::Zero(m.rows(), m.cols());
    for (long i = 0; i < rl.dim; ++i)
      for (long j = 0; j < rl.dim; ++j)
        if (std::abs(imgs_l[c](i, j)) > 0.0)
          kr.block(i * rn.dim, j * rn.dim, rn.dim, rn.dim) = imgs_l[c](i, j) * dual_img;
    m2 += kr;
  }
  return (m2 - m).cwiseAbs().maxCoeff();
}

int cmd_mspectrum(Options& o, bool seeded) {
  const LieType t = parse_type_args(o);
  const RootSystemData& rs = root_system(t);
  const Weight lambda = parse_weight_arg(o.take("lambda"), t.rank);
  const Weight nu = parse_weight_arg(o.take("nu"), t.rank);
  o.done();
  const MatrixRep rl = build_irrep(rs, lambda, o.cap);
  const MatrixRep rn = build_irrep(rs, nu, o.cap);
  const MTypeMatrix m = mtype_matrix(rs, rl, rn);
  const SpectrumReport sr = spectrum_check(m);
  const int deg = min_poly_degree(m);
  double basis_dev = -1.0;
  if (seeded) basis_dev = basis_change_dev(rl, rn, m.matrix, o.seed);
  if (o.json_out) {
    json out;
    out["type"] = to_string(t);
    out["lambda"] = weight_json(lambda);
    out["nu"] = weight_json(nu);
    out["dim"] = m.matrix.rows();
    json sums = json::array();
    for (const MTypeSummand& s : m.summands)
      sums.push_back({{"shift", weight_json(s.shift)},
                      {"component", weight_json(s.component)},
                      {"value", rat_json(s.value)},
                      {"mult", s.mult},
                      {"dim", s.dim}});
    out["summands"] = sums;
    json cl = json::array();
    for (const auto& [v, d] : m.clusters) cl.push_back({{"value", rat_json(v)}, {"dim", d}});
    out["clusters"] = cl;
    out["exact_merges"] = m.exact_merges;
    out["matched"] = sr.matched;
    out["distinct"] = sr.distinct;
    out["ambiguous"] = sr.ambiguous;
    out["collision_clusters"] = sr.collision_clusters;
    out["max_dev"] = sr.max_dev;
    out["max_imag"] = sr.max_imag;
    out["min_poly_degree"] = deg;
    if (seeded) out["basis_change_dev"] = basis_dev;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << to_string(t) << " invariant operator on " << weight_str(lambda) << " (x) "
            << weight_str(nu) << " (dim " << m.matrix.rows() << "):\n";
  for (const MTypeSummand& s : m.summands) {
    std::cout << "  value " << rat_to_string(s.value) << "  component " << weight_str(s.component)
              << "  shift " << weight_str(s.shift) << "  dim " << s.dim;
    if (s.mult != 1) std::cout << " x" << s.mult;
    std::cout << "\n";
  }
  std::cout << "  spectrum matched = " << (sr.matched ? "yes" : "no")
            << ", eigenvalues distinct = " << (sr.distinct ? "yes" : "no")
            << ", collision clusters = " << sr.collision_clusters << "\n";
  std::cout << "  max deviation = " << sr.max_dev << ", max imaginary part = " << sr.max_imag
            << ", minimal polynomial degree = " << deg << "\n";
  if (seeded)
    std::cout << "  basis-change deviation (seed " << o.seed << ") = " << basis_dev << "\n";
  return 0;
}

int cmd_pte(Options& o) {
  const std::string mode = o.take("mode");
  if (mode == "parametric") {
    const long s = std::stol(o.take("s"));
    o.done();
    const PteSolution sol = pte_parametric_deg2(s);
    const PteClass cls = pte_check(sol);
    if (o.json_out) {
      json out;
      out["x"] = sol.x;
      out["y"] = sol.y;
      out["degree"] = sol.degree;
      out["class"] = cls == PteClass::Nontrivial ? "nontrivial"
                     : cls == PteClass::Trivial  ? "trivial"
                                                 : "invalid";
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    std::cout << "x = [";
    for (std::size_t i = 0; i < sol.x.size(); ++i) std::cout << (i ? "," : "") << sol.x[i];
    std::cout << "], y = [";
    for (std::size_t i = 0; i < sol.y.size(); ++i) std::cout << (i ? "," : "") << sol.y[i];
    std::cout << "], degree " << sol.degree << ", "
              << (cls == PteClass::Nontrivial ? "nontrivial"
                  : cls == PteClass::Trivial  ? "trivial"
                                              : "invalid")
              << "\n";
    return 0;
  }
  if (mode == "brute") {
    const int n = std::stoi(o.take("n"));
    const int m = std::stoi(o.take("m"));
    const long bound = std::stol(o.take("bound"));
    o.done();
    const auto sols = pte_bruteforce(n, m, bound);
    if (o.json_out) {
      json out = json::array();
      for (const PteSolution& s : sols) out.push_back({{"x", s.x}, {"y", s.y}});
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    for (const PteSolution& s : sols) {
      std::cout << "[";
      for (std::size_t i = 0; i < s.x.size(); ++i) std::cout << (i ? "," : "") << s.x[i];
      std::cout << "] / [";
      for (std::size_t i = 0; i < s.y.size(); ++i) std::cout << (i ? "," : "") << s.y[i];
      std::cout << "]\n";
    }
    std::cout << sols.size() << " classes (size " << n << ", degree " << m << ", bound " << bound
              << ")\n";
    return 0;
  }
  if (mode == "cert") {
    const LieType t = parse_type_args(o);
    const RootSystemData& rs = root_system(t);
    const Weight lambda = parse_weight_arg(o.take("lambda"), t.rank);
    o.done();
    const CollisionOutcome outcome = find_collision(rs, lambda);
    if (!std::holds_alternative<CollisionCertificate>(outcome))
      throw Unsupported("no collision certificate for this weight; nothing to convert");
    const auto& c = std::get<CollisionCertificate>(outcome);
    const PteSolution sol = pte_from_certificate(rs, c);
    const PteClass cls = pte_check(sol);
    if (o.json_out) {
      json out;
      out["type"] = to_string(t);
      out["nu"] = weight_json(c.nu);
      out["x"] = sol.x;
      out["y"] = sol.y;
      out["class"] = cls == PteClass::Nontrivial ? "nontrivial"
                     : cls == PteClass::Trivial  ? "trivial"
                                                 : "invalid";
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    std::cout << "certificate nu = " << weight_str(c.nu) << " maps to x = [";
    for (std::size_t i = 0; i < sol.x.size(); ++i) std::cout << (i ? "," : "") << sol.x[i];
    std::cout << "], y = [";
    for (std::size_t i = 0; i < sol.y.size(); ++i) std::cout << (i ? "," : "") << sol.y[i];
    std::cout << "] ("
              << (cls == PteClass::Nontrivial ? "nontrivial"
                  : cls == PteClass::Trivial  ? "trivial"
                                              : "invalid")
              << ")\n";
    return 0;
  }
  throw Unsupported("unknown pte mode: " + mode + " (expected parametric, brute or cert)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations for multiplicity-free modules of simple Lie algebras"};
  app.require_subcommand(1);

  Options opt;
  opt.cap = default_cap();
  app.add_flag("--json", opt.json_out, "machine-readable output");
  app.add_option("--cap", opt.cap, "dimension budget");
  app.add_option("--seed", opt.seed, "seed for randomized checks");

  int rank_max = 8;
  bool popov = false;
  std::string rule = "klimyk";
  long bound = 6;

  auto add_args = [&opt](CLI::App* sub) {
    sub->add_option("args", opt.args, "positional arguments");
    sub->fallthrough();
  };
  add_args(app.add_subcommand("info", "Cartan matrix and root data"));
  add_args(app.add_subcommand("module", "dimensions and chain structure of one module"));
  CLI::App* verify = app.add_subcommand("verify-theorem", "criteria a, b, e, f over the catalog");
  verify->add_option("--rank-max", rank_max, "largest rank to include");
  add_args(verify);
  CLI::App* cas = app.add_subcommand("casimir", "quadratic Casimir eigenvalue");
  cas->add_flag("--popov", popov, "cross-check with the power-sum formula");
  add_args(cas);
  CLI::App* ten = app.add_subcommand("tensor", "tensor product decomposition");
  ten->add_option("--rule", rule, "minuscule, pieri, c3omega3 or klimyk")
      ->check(CLI::IsMember({"minuscule", "pieri", "c3omega3", "klimyk"}));
  add_args(ten);
  CLI::App* col = app.add_subcommand("collide", "collision certificate or distinctness sweep");
  col->add_option("--bound", bound, "search / sweep box bound");
  add_args(col);
  add_args(app.add_subcommand("mspectrum", "numeric spectrum of the invariant operator"));
  add_args(app.add_subcommand("pte", "power-sum utilities: parametric | brute | cert"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  bool seeded = app.count("--seed") > 0;
  try {
    if (app.got_subcommand("info")) return cmd_info(opt);
    if (app.got_subcommand("module")) return cmd_module(opt);
    if (app.got_subcommand("verify-theorem")) return cmd_verify(opt, rank_max);
    if (app.got_subcommand("casimir")) return cmd_casimir(opt, popov);
    if (app.got_subcommand("tensor")) return cmd_tensor(opt, rule);
    if (app.got_subcommand("collide")) return cmd_collide(opt, bound);
    if (app.got_subcommand("mspectrum")) return cmd_mspectrum(opt, seeded);
    if (app.got_subcommand("pte")) return cmd_pte(opt);
    std::cerr << "no command\n";
    return 2;
  } catch (const CapExceeded& ex) {
    std::cerr << "cap exceeded: " << ex.what() << "\n";
    return 3;
  } catch (const Unsupported& ex) {
    std::cerr << "unsupported: " << ex.what() << "\n";
    return 2;
  } catch (const InternalError& ex) {
    std::cerr << "internal check failed: " << ex.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "bad input: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
}
