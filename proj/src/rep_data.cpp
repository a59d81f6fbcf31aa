#include "smflab/rep_data.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>

#include "smflab/errors.hpp"

namespace smflab {
namespace {

bool require_dominant_integral(const Weight& lambda) {
  return lambda.is_dominant() && lambda.is_integral();
}

bool is_minuscule_weight(const LieType& t, const Weight& lambda) {
  const int l = t.rank;
  int nonzero = -1;
  for (int i = 0; i < l; ++i) {
    if (lambda.f[i] == 0) continue;
    if (lambda.f[i] != 1 || nonzero >= 0) return false;
    nonzero = i;
  }
  if (nonzero < 0) return false;
  const int k = nonzero + 1;  // 1-based fundamental index
  switch (t.family) {
    case Family::A: return true;
    case Family::B: return k == l;
    case Family::C: return false;
    case Family::D: return k == 1 || k == l - 1 || k == l;
    case Family::E: return l == 6 ? (k == 1 || k == 6) : (k == 7);
    case Family::G: return false;
  }
  return false;
}

/// All dominant integral mu with lambda - mu in the nonnegative root
/// lattice, found by descending the dominance order from lambda.
std::vector<Weight> dominant_weights_below(const RootSystemData& rs, const Weight& lambda) {
  const int l = rs.type.rank;
  std::vector<Weight> out;
  // Enumerate fundamental coordinates b with 0 <= b and lambda - mu(b) a
  // nonnegative integer root combination; prune on partial root-coordinate
  // sums (the inverse Cartan matrix has positive entries, so committed
  // coordinates only grow).
  RatVec lam_rc = to_root_coords(rs, lambda);
  std::vector<long> b(l, 0);
  // Upper bound per coordinate from the diagonal of A^-T.
  std::vector<long> bmax(l, 0);
  for (int i = 0; i < l; ++i) {
    Rat bound = lam_rc[i] / rs.cartan_inv[i][i];
    bmax[i] = std::max<long>(0, static_cast<long>(bound.get_d()) + 1);
  }
  std::vector<RatVec> partial(l + 1, RatVec(l, Rat(0)));  // partial[k] = sum over first k coords
  auto feasible = [&](int k) {
    for (int j = 0; j < l; ++j)
      if (partial[k][j] > lam_rc[j]) return false;
    return true;
  };
  // partial[k+1] = partial[k] + b_k * column k of A^-T (row k of A^-1).
  std::function<void(int)> rec = [&](int k) {
    if (k == l) {
      Weight mu(l);
      for (int i = 0; i < l; ++i) mu.f[i] = b[i];
      if (dominance_leq(rs, mu, lambda)) out.push_back(mu);
      return;
    }
    for (b[k] = 0; b[k] <= bmax[k]; ++b[k]) {
      for (int j = 0; j < l; ++j) partial[k + 1][j] = partial[k][j] + Rat(b[k]) * rs.cartan_inv[k][j];
      if (!feasible(k + 1)) break;  // larger b[k] only worsens it
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

long default_cap() {
  static long cap = [] {
    const char* env = std::getenv("SMFLAB_CAP");
    if (env != nullptr) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && v > 0) return v;
    }
    return 10000L;
  }();
  return cap;
}

Int weyl_dimension(const RootSystemData& rs, const Weight& lambda) {
  if (!require_dominant_integral(lambda))
    throw Unsupported("weyl_dimension: weight must be dominant integral");
  Rat prod(1);
  const Weight lam_delta = lambda + rs.delta;
  for (const auto& alpha : rs.positive_roots_fund) {
    prod *= inner_product(rs, lam_delta, alpha);
    prod /= inner_product(rs, rs.delta, alpha);
  }
  if (!rat_is_integer(prod)) throw InternalError("weyl_dimension: non-integer result");
  return prod.get_num();
}

Rat height(const RootSystemData& rs, const Weight& lambda) { return height_of(rs, lambda); }

long WeightSystem::total_dim() const {
  long n = 0;
  for (const auto& [w, m] : weights) n += m;
  return n;
}

long WeightSystem::multiplicity(const Weight& w) const {
  auto it = std::lower_bound(weights.begin(), weights.end(), w,
                             [](const auto& entry, const Weight& key) { return entry.first < key; });
  if (it != weights.end() && it->first == w) return it->second;
  return 0;
}

WeightSystem weight_system(const RootSystemData& rs, const Weight& lambda, long cap) {
  if (!require_dominant_integral(lambda))
    throw Unsupported("weight_system: weight must be dominant integral");
  const Int dim = weyl_dimension(rs, lambda);
  if (dim > cap)
    throw CapExceeded("weight_system: dim V_lambda = " + dim.get_str() + " exceeds cap " +
                      std::to_string(cap));

  WeightSystem ws;
  ws.highest = lambda;

  if (is_minuscule_weight(rs.type, lambda)) {
    for (const auto& w : weyl_orbit(rs, lambda)) ws.weights.emplace_back(w, 1);
    if (Int(ws.total_dim()) != dim) throw InternalError("weight_system: minuscule orbit size mismatch");
    return ws;
  }

  // Freudenthal recursion on dominant weights, processed by decreasing
  // height so every reference mu + k*alpha is already known.
  std::vector<Weight> doms = dominant_weights_below(rs, lambda);
  std::sort(doms.begin(), doms.end(), [&](const Weight& a, const Weight& b) {
    const Rat ha = height_of(rs, a), hb = height_of(rs, b);
    if (ha != hb) return ha > hb;
    return a < b;
  });
  std::map<Weight, long> mult;  // dominant weights only
  const Rat norm_top = inner_product(rs, lambda + rs.delta, lambda + rs.delta);
  for (const auto& mu : doms) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    Rat acc(0);
    for (const auto& alpha : rs.positive_roots_fund) {
      Weight probe = mu;
      while (true) {
        probe += alpha;
        if (!dominance_leq(rs, probe, lambda)) break;
        const Dominized dz = dominize(rs, probe);
        auto it = mult.find(dz.dominant);
        if (it == mult.end() || it->second == 0) continue;
        acc += Rat(2 * it->second) * inner_product(rs, probe, alpha);
      }
    }
    const Rat denom = norm_top - inner_product(rs, mu + rs.delta, mu + rs.delta);
    if (denom == 0) throw InternalError("weight_system: zero Freudenthal denominator");
    const Rat m = acc / denom;
    if (!rat_is_integer(m) || m < 0) throw InternalError("weight_system: bad multiplicity");
    mult[mu] = rat_to_long(m);
  }

  std::map<Weight, long> full;
  for (const auto& [mu, m] : mult) {
    if (m == 0) continue;
    for (const auto& w : weyl_orbit(rs, mu)) full[w] = m;
  }
  ws.weights.assign(full.begin(), full.end());
  if (Int(ws.total_dim()) != dim) throw InternalError("weight_system: dimension mismatch");
  return ws;
}

bool is_multiplicity_free(const WeightSystem& ws) {
  for (const auto& [w, m] : ws.weights)
    if (m != 1) return false;
  return true;
}

bool is_strongly_multiplicity_free(const RootSystemData& rs, const WeightSystem& ws) {
  if (!is_multiplicity_free(ws)) return false;
  // Chain condition: all weights pairwise comparable in the dominance
  // order. Differences of weights within one module are integer root
  // combinations, so comparisons reduce to sign checks on root coordinates
  // with a common denominator cleared; that keeps the quadratic scan cheap
  // for the larger modules.
  const int l = rs.type.rank;
  const size_t n = ws.weights.size();
  std::vector<RatVec> coords;
  coords.reserve(n);
  Int denom_lcm(1);
  for (const auto& [w, m] : ws.weights) {
    coords.push_back(to_root_coords(rs, w));
    for (const auto& c : coords.back()) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  std::vector<std::vector<long>> scaled(n, std::vector<long>(l));
  std::vector<long> ht(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (int j = 0; j < l; ++j) {
      const Rat s = Rat(denom_lcm) * coords[i][j];
      scaled[i][j] = rat_to_long(s);
      ht[i] += scaled[i][j];
    }
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return ht[a] < ht[b]; });
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      const auto& lo = scaled[order[i]];
      const auto& hi = scaled[order[j]];
      for (int c = 0; c < l; ++c)
        if (hi[c] < lo[c]) return false;
    }
  return true;
}

bool principal_sl2_irreducible(const RootSystemData& rs, const WeightSystem& ws) {
  const Rat target = Rat(2) * height_of(rs, ws.highest) + 1;
  return Rat(ws.total_dim()) == target;
}

std::map<long, long> principal_sl2_decomposition(const RootSystemData& rs, const WeightSystem& ws) {
  // Histogram of h0 eigenvalues: weight mu contributes mult at
  // m = sum_i coroot_coeffs_i * mu_i = 2 height(mu as offset)... directly
  // mu(h0); integers of fixed parity across the module.
  std::map<long, long> histogram;
  for (const auto& [w, m] : ws.weights) {
    Rat val(0);
    for (int i = 0; i < rs.type.rank; ++i) val += rs.coroot_coeffs[i] * w.f[i];
    if (!rat_is_integer(val)) throw InternalError("principal_sl2_decomposition: non-integer eigenvalue");
    histogram[rat_to_long(val)] += m;
  }
  std::map<long, long> out;
  for (const auto& [m, count] : histogram) {
    if (m < 0) continue;
    auto above = histogram.find(m + 2);
    const long tops = count - (above == histogram.end() ? 0 : above->second);
    if (tops < 0) throw InternalError("principal_sl2_decomposition: negative summand count");
    if (tops > 0) out[m] = tops;
  }
  // Cross-check: total dimension of the sl2 summands matches.
  long total = 0;
  for (const auto& [m, c] : out) total += c * (m + 1);
  if (total != ws.total_dim()) throw InternalError("principal_sl2_decomposition: dimension mismatch");
  return out;
}

std::vector<long> dynkin_polynomial(const RootSystemData& rs, const WeightSystem& ws) {
  const Weight dual = dual_weight(rs, ws.highest);
  const Rat deg = Rat(2) * height_of(rs, ws.highest);
  if (!rat_is_integer(deg)) throw InternalError("dynkin_polynomial: non-integer degree");
  std::vector<long> coeff(static_cast<size_t>(rat_to_long(deg)) + 1, 0);
  for (const auto& [w, m] : ws.weights) {
    const Rat e = height_of(rs, dual + w);
    if (!rat_is_integer(e)) throw InternalError("dynkin_polynomial: non-integer exponent");
    const long idx = rat_to_long(e);
    if (idx < 0 || static_cast<size_t>(idx) >= coeff.size())
      throw InternalError("dynkin_polynomial: exponent out of range");
    coeff[static_cast<size_t>(idx)] += m;
  }
  return coeff;
}

Weight dual_weight(const RootSystemData& rs, const Weight& lambda) {
  // -w0(lambda): w0(lambda) is the unique antidominant element of the
  // orbit, reached by repeatedly reflecting positive coordinates.
  Weight w = lambda;
  const int l = rs.type.rank;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < l; ++i)
      if (w.f[i] > 0) {
        w = reflect(rs, w, i);
        moved = true;
      }
  }
  return Rat(-1) * w;
}

std::vector<CatalogEntry> multiplicity_free_catalog(int rank_max, int k_max) {
  std::vector<CatalogEntry> out;
  auto fund = [](const LieType& t, int k) {  // omega_k, 1-based
    return basis_weight(t.rank, k - 1);
  };
  for (int l = 1; l <= rank_max; ++l) {
    const LieType t{Family::A, l};
    if (l == 1) {
      for (int k = 1; k <= k_max; ++k) out.push_back({t, Weight(RatVec{Rat(k)})});
      continue;
    }
    for (int k = 1; k <= l; ++k) out.push_back({t, fund(t, k)});
    for (int k = 2; k <= k_max; ++k) {
      out.push_back({t, Weight([&] {
                       RatVec v(l, Rat(0));
                       v[0] = k;
                       return v;
                     }())});
      out.push_back({t, Weight([&] {
                       RatVec v(l, Rat(0));
                       v[l - 1] = k;
                       return v;
                     }())});
    }
  }
  for (int l = 2; l <= rank_max; ++l) {
    const LieType t{Family::B, l};
    out.push_back({t, fund(t, 1)});
    out.push_back({t, fund(t, l)});
  }
  for (int l = 3; l <= rank_max; ++l) {
    const LieType t{Family::C, l};
    out.push_back({t, fund(t, 1)});
    if (l == 3) out.push_back({t, fund(t, 3)});
  }
  for (int l = 4; l <= rank_max; ++l) {
    const LieType t{Family::D, l};
    out.push_back({t, fund(t, 1)});
    out.push_back({t, fund(t, l - 1)});
    out.push_back({t, fund(t, l)});
  }
  if (rank_max >= 2) out.push_back({LieType{Family::G, 2}, basis_weight(2, 0)});
  if (rank_max >= 6) {
    out.push_back({LieType{Family::E, 6}, basis_weight(6, 0)});
    out.push_back({LieType{Family::E, 6}, basis_weight(6, 5)});
  }
  if (rank_max >= 7) out.push_back({LieType{Family::E, 7}, basis_weight(7, 6)});
  return out;
}

bool smf_listed(const LieType& t, const Weight& lambda) {
  const int l = t.rank;
  auto is_fund = [&](int k) {  // lambda == omega_k?
    for (int i = 0; i < l; ++i)
      if (lambda.f[i] != (i == k - 1 ? 1 : 0)) return false;
    return true;
  };
  switch (t.family) {
    case Family::A:
      if (l == 1) {
        // Every nontrivial irreducible sl2 module.
        return lambda.f[0].get_num() > 0 && rat_is_integer(lambda.f[0]);
      }
      return is_fund(1) || is_fund(l);
    case Family::B: return is_fund(1);
    case Family::C: return is_fund(1);
    case Family::G: return is_fund(1);
    case Family::D:
    case Family::E: return false;
  }
  return false;
}

}  // namespace smflab
