#include "smflab/tensor.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "smflab/errors.hpp"

namespace smflab {
namespace {

Decomposition from_map(const Weight& left, const Weight& right, const std::map<Weight, long>& acc) {
  Decomposition d;
  d.left = left;
  d.right = right;
  for (const auto& [w, m] : acc) {
    if (m < 0) throw InternalError("tensor: negative multiplicity for " + w.to_string());
    if (m > 0) d.summands.emplace_back(w, m);
  }
  return d;
}

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long out = 1;
  for (long i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

Rat pochhammer(const Rat& z, int k) {
  Rat out(1);
  for (int i = 0; i < k; ++i) out *= z + i;
  return out;
}

/// T_l for odd l = 2k+1: a signed binomial double sum with integer value.
Int t_odd(int l) {
  const int k = (l - 1) / 2;
  Int total(0);
  for (int s = 1; s <= l; ++s) {
    Int inner(0);
    for (int t = 1; t <= s; ++t) {
      Int term(binom(s, t));
      Int p(t);
      mpz_pow_ui(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(l));
      term *= p;
      if ((s - t) % 2 != 0) term = -term;
      inner += term;
    }
    Int w(1);
    mpz_mul_2exp(w.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(l - s));
    Int term = w * inner;
    if ((k + s + 1) % 2 != 0) term = -term;
    total += term;
  }
  return total;
}

/// K^(3)_{r,l} for odd l with 1 <= l <= r.
Rat k3(int r, int l) {
  Rat out = Rat(Int(binom(3 - r + l, l)) * t_odd(l));
  Int two(1);
  mpz_mul_2exp(two.get_mpz_t(), two.get_mpz_t(), static_cast<unsigned long>(l));
  out *= Rat(two);
  if (((l - 1) / 2) % 2 != 0) out = -out;
  return out;
}

int factorial(int n) {
  int out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

/// Coefficient C^(3)_{3,s} of the closed C_3 decomposition rule.
Rat c3_coefficient(int s) {
  const int q = 3 - s;
  Rat lead = Rat(1);
  for (int i = 0; i < q; ++i) lead *= 4;
  lead *= pochhammer(Rat(1), q) * pochhammer(rat(3, 2), q);
  lead /= Rat(factorial(q)) * pochhammer(Rat(3), q);
  Rat sum(0);
  for (int k = 1; k <= 2 - s; k += 2) {
    Rat term = Rat(1);
    for (int i = 0; i < k; ++i) term *= 4;
    term *= pochhammer(Rat(1), k) * pochhammer(rat(3, 2), k);
    term /= Rat(factorial(k)) * pochhammer(Rat(3), k);
    term *= k3(3 - k, 3 - s - k);
    sum += term;
  }
  return lead - sum;
}

/// Fundamental coordinates of sum_{j in J} eps_j mu_j for C_3.
Weight c3_eps_weight(const std::vector<int>& zeta) {
  Weight w(3);
  w.f[0] = Rat(zeta[0] - zeta[1]);
  w.f[1] = Rat(zeta[1] - zeta[2]);
  w.f[2] = Rat(zeta[2]);
  return w;
}

/// Number of (I, sign pattern) choices inside comp with |I| = q containing
/// an adjacent pair i, i+1 carrying signs (-, +) across a_i = 0. This is
/// the correction subtracted from the free count 2^q binom(|comp|, q).
long c3_bad_count(const std::vector<int>& comp, int q, const Weight& nu) {
  if (q <= 0) return 0;
  const int n = static_cast<int>(comp.size());
  long bad = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != q) continue;
    std::vector<int> idx;
    for (int b = 0; b < n; ++b)
      if (mask & (1 << b)) idx.push_back(comp[b]);
    const int m = static_cast<int>(idx.size());
    for (int signs = 0; signs < (1 << m); ++signs) {
      bool hit = false;
      for (int p = 0; p + 1 < m && !hit; ++p) {
        if (idx[p + 1] != idx[p] + 1) continue;  // need i and i+1 both chosen
        const bool minus_then_plus = (signs & (1 << p)) != 0 && (signs & (1 << (p + 1))) == 0;
        if (minus_then_plus && nu.f[idx[p] - 1] == 0) hit = true;
      }
      if (hit) ++bad;
    }
  }
  return bad;
}

void c3_require(const RootSystemData& rs, const Weight& nu) {
  if (!(rs.type == LieType{Family::C, 3}))
    throw Unsupported("decompose_c3_omega3: type must be C3");
  if (!nu.is_dominant() || !nu.is_integral())
    throw Unsupported("decompose_c3_omega3: nu must be dominant integral");
}

}  // namespace

long Decomposition::multiplicity(const Weight& w) const {
  auto it = std::lower_bound(summands.begin(), summands.end(), w,
                             [](const auto& entry, const Weight& key) { return entry.first < key; });
  if (it != summands.end() && it->first == w) return it->second;
  return 0;
}

Int decomposition_dim(const RootSystemData& rs, const Decomposition& d) {
  Int total(0);
  for (const auto& [w, m] : d.summands) total += Int(m) * weyl_dimension(rs, w);
  return total;
}

bool is_minuscule(const LieType& t, const Weight& lambda) {
  const int l = t.rank;
  int nonzero = -1;
  for (int i = 0; i < l; ++i) {
    if (lambda.f[i] == 0) continue;
    if (lambda.f[i] != 1 || nonzero >= 0) return false;
    nonzero = i;
  }
  if (nonzero < 0) return false;
  const int k = nonzero + 1;
  switch (t.family) {
    case Family::A: return true;
    case Family::B: return k == l;
    case Family::C: return k == 1;
    case Family::D: return k == 1 || k == l - 1 || k == l;
    case Family::E: return l == 6 ? (k == 1 || k == 6) : (k == 7);
    case Family::G: return false;
  }
  return false;
}

Decomposition decompose_minuscule(const RootSystemData& rs, const Weight& lambda, const Weight& nu) {
  if (!is_minuscule(rs.type, lambda))
    throw Unsupported("decompose_minuscule: " + lambda.to_string() + " is not minuscule for " +
                      to_string(rs.type));
  if (!nu.is_dominant() || !nu.is_integral())
    throw Unsupported("decompose_minuscule: nu must be dominant integral");
  std::map<Weight, long> acc;
  for (const auto& mu : weyl_orbit(rs, lambda)) {
    const Weight target = nu + mu;
    if (target.is_dominant()) acc[target] += 1;
  }
  return from_map(lambda, nu, acc);
}

Decomposition decompose_pieri_A(const RootSystemData& rs, long k, const Weight& nu, bool use_last) {
  if (rs.type.family != Family::A)
    throw Unsupported("decompose_pieri_A: type must be A_l");
  if (k < 0 || !nu.is_dominant() || !nu.is_integral())
    throw Unsupported("decompose_pieri_A: need k >= 0 and dominant integral nu");
  const int l = rs.type.rank;
  Weight base = nu;
  if (use_last) std::reverse(base.f.begin(), base.f.end());
  std::vector<long> a(l);
  for (int i = 0; i < l; ++i) a[i] = rat_to_long(base.f[i]);

  std::map<Weight, long> acc;
  std::vector<long> c(l + 1, 0);
  std::function<void(int, long)> rec = [&](int pos, long used) {
    if (pos == l + 1) {
      if (used != k) return;
      Weight b(l);
      for (int i = 0; i < l; ++i) b.f[i] = Rat(a[i] + c[i] - c[i + 1]);
      if (!b.is_dominant()) throw InternalError("decompose_pieri_A: non-dominant summand");
      acc[b] += 1;
      if (acc[b] > 1) throw InternalError("decompose_pieri_A: duplicate tuple target");
      return;
    }
    const long cap_here = pos == 0 ? k - used : std::min(a[pos - 1], k - used);
    for (long v = 0; v <= cap_here; ++v) {
      c[pos] = v;
      rec(pos + 1, used + v);
    }
    c[pos] = 0;
  };
  rec(0, 0);

  Weight lam(l);
  lam.f[use_last ? l - 1 : 0] = Rat(k);
  if (!use_last) return from_map(lam, nu, acc);
  // Mirror the summands back through the diagram flip.
  std::map<Weight, long> flipped;
  for (const auto& [w, m] : acc) {
    Weight r = w;
    std::reverse(r.f.begin(), r.f.end());
    flipped[r] = m;
  }
  return from_map(lam, nu, flipped);
}

Decomposition decompose_c3_omega3(const RootSystemData& rs, const Weight& nu) {
  c3_require(rs, nu);
  static const Rat c31 = c3_coefficient(1);
  static const Rat c33 = c3_coefficient(3);

  std::map<Weight, long> acc;
  // Index subsets J with |J| in {1,3} and sign patterns on J.
  for (int jmask = 1; jmask < 8; ++jmask) {
    const int jsize = __builtin_popcount(static_cast<unsigned>(jmask));
    if (jsize != 1 && jsize != 3) continue;
    std::vector<int> jidx, comp;
    for (int i = 1; i <= 3; ++i)
      ((jmask >> (i - 1)) & 1 ? jidx : comp).push_back(i);
    for (int signs = 0; signs < (1 << jsize); ++signs) {
      std::vector<int> zeta(3, 0);
      for (int p = 0; p < jsize; ++p) zeta[jidx[p] - 1] = (signs & (1 << p)) ? -1 : 1;
      const Weight target = nu + c3_eps_weight(zeta);
      if (!target.is_dominant()) continue;
      Rat n(0);
      for (int s = jsize; s <= 3; ++s) {
        if ((3 - s) % 2 != 0) continue;
        const int q = s - jsize;
        const Rat big = Rat(1) * Rat((1L << q) * binom(static_cast<long>(comp.size()), q) -
                                     c3_bad_count(comp, q, nu));
        n += (s == 1 ? c31 : c33) * big;
      }
      if (!rat_is_integer(n) || n < 0)
        throw InternalError("decompose_c3_omega3: bad multiplicity " + rat_to_string(n));
      const long m = rat_to_long(n);
      if (m > 0) acc[target] += m;
    }
  }
  Weight lam(3);
  lam.f[2] = 1;
  return from_map(lam, nu, acc);
}

Decomposition decompose_c3_omega3_simple(const RootSystemData& rs, const Weight& nu) {
  c3_require(rs, nu);
  std::map<Weight, long> acc;
  // Full sign patterns: always multiplicity 1 when dominant.
  for (int signs = 0; signs < 8; ++signs) {
    std::vector<int> zeta{(signs & 1) ? -1 : 1, (signs & 2) ? -1 : 1, (signs & 4) ? -1 : 1};
    const Weight target = nu + c3_eps_weight(zeta);
    if (target.is_dominant()) acc[target] += 1;
  }
  // Single-index patterns +-mu_j: multiplicity 1 unless the complementary
  // adjacent pair sits on a vanishing coordinate of nu.
  for (int j = 1; j <= 3; ++j) {
    long mult = 1;
    if (j == 1 && nu.f[1] == 0) mult = 0;  // complement {2,3}, a_2 = 0
    if (j == 3 && nu.f[0] == 0) mult = 0;  // complement {1,2}, a_1 = 0
    if (mult == 0) continue;
    for (int sign : {1, -1}) {
      std::vector<int> zeta(3, 0);
      zeta[j - 1] = sign;
      const Weight target = nu + c3_eps_weight(zeta);
      if (target.is_dominant()) acc[target] += mult;
    }
  }
  Weight lam(3);
  lam.f[2] = 1;
  return from_map(lam, nu, acc);
}

Decomposition decompose_klimyk(const RootSystemData& rs, const Weight& lambda, const Weight& nu,
                               long cap) {
  if (!nu.is_dominant() || !nu.is_integral())
    throw Unsupported("decompose_klimyk: nu must be dominant integral");
  const WeightSystem ws = weight_system(rs, lambda, cap);
  std::map<Weight, long> acc;
  for (const auto& [mu, m] : ws.weights) {
    const Weight x = nu + mu + rs.delta;
    const Dominized dz = dominize(rs, x);
    if (dz.on_wall) continue;
    acc[dz.dominant - rs.delta] += dz.sign * m;
  }
  return from_map(lambda, nu, acc);
}

}  // namespace smflab
