#include "smflab/casimir.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "smflab/errors.hpp"

namespace smflab {
namespace {

/// Classical coordinate functionals of lambda (the zeta vector) in the
/// normalization fixed by the root-system module.
RatVec classical_zeta(const RootSystemData& rs, const Weight& lambda) {
  const int l = rs.type.rank;
  const RatVec& a = lambda.f;
  RatVec zeta;
  switch (rs.type.family) {
    case Family::A: {
      // f_i = a_i + ... + a_l, f_{l+1} = 0, then center to sum zero.
      RatVec f(l + 1, Rat(0));
      for (int i = l - 1; i >= 0; --i) f[i] = f[i + 1] + a[i];
      Rat mean(0);
      for (const auto& c : f) mean += c;
      mean /= (l + 1);
      zeta.resize(l + 1);
      for (int i = 0; i <= l; ++i) zeta[i] = f[i] - mean;
      break;
    }
    case Family::B: {
      // zeta_i = a_i + ... + a_{l-1} + a_l / 2.
      zeta.assign(l, Rat(0));
      zeta[l - 1] = a[l - 1] / 2;
      for (int i = l - 2; i >= 0; --i) zeta[i] = zeta[i + 1] + a[i];
      break;
    }
    case Family::C: {
      // zeta_i = a_i + ... + a_l.
      zeta.assign(l, Rat(0));
      zeta[l - 1] = a[l - 1];
      for (int i = l - 2; i >= 0; --i) zeta[i] = zeta[i + 1] + a[i];
      break;
    }
    case Family::D: {
      // zeta_i = a_i + ... + a_{l-2} + (a_{l-1} + a_l)/2 for i <= l-1, and
      // zeta_l = (a_l - a_{l-1})/2; the power sum is even in zeta_l, so the
      // sign convention there is immaterial.
      zeta.assign(l, Rat(0));
      zeta[l - 1] = (a[l - 1] - a[l - 2]) / 2;
      zeta[l - 2] = (a[l - 1] + a[l - 2]) / 2;
      for (int i = l - 3; i >= 0; --i) zeta[i] = zeta[i + 1] + a[i];
      break;
    }
    default:
      throw Unsupported("classical_zeta: classical families only");
  }
  return zeta;
}

}  // namespace

Rat casimir_char(const RootSystemData& rs, const Weight& lambda) {
  return inner_product(rs, lambda, lambda + Rat(2) * rs.delta);
}

YoungCoords young_coords(const RootSystemData& rs, const Weight& lambda) {
  const Family fam = rs.type.family;
  if (fam == Family::E || fam == Family::G)
    throw Unsupported("young_coords: classical families only");
  const int l = rs.type.rank;
  YoungCoords yc;
  yc.type = rs.type;
  yc.zeta = classical_zeta(rs, lambda);
  switch (fam) {
    case Family::A:
      yc.alpha = Rat(l) / 2;
      for (int i = 1; i <= l + 1; ++i) yc.index_set.push_back(i);
      break;
    case Family::B:
      yc.alpha = Rat(2 * l - 1) / 2;
      yc.index_set.push_back(0);
      for (int i = 1; i <= l; ++i) {
        yc.index_set.push_back(i);
        yc.index_set.push_back(-i);
      }
      break;
    case Family::C:
      yc.alpha = Rat(l);
      for (int i = 1; i <= l; ++i) {
        yc.index_set.push_back(i);
        yc.index_set.push_back(-i);
      }
      break;
    case Family::D:
      yc.alpha = Rat(l - 1);
      for (int i = 1; i <= l; ++i) {
        yc.index_set.push_back(i);
        yc.index_set.push_back(-i);
      }
      break;
    default: break;
  }
  return yc;
}

Rat popov_char(const RootSystemData& rs, const Weight& lambda) {
  const YoungCoords yc = young_coords(rs, lambda);
  auto zeta_at = [&](long i) -> Rat {
    if (i == 0) return Rat(0);
    const Rat z = yc.zeta[static_cast<size_t>(std::abs(i)) - 1];
    return i > 0 ? z : -z;
  };
  Rat s(0);
  for (long i : yc.index_set) {
    const Rat sgn = i > 0 ? Rat(1) : (i < 0 ? Rat(-1) : Rat(0));
    const Rat r = (yc.alpha + 1) * sgn - Rat(i);
    const Rat base = r + yc.alpha;
    const Rat shifted = zeta_at(i) + base;
    s += shifted * shifted - base * base;
  }
  return s;
}

Rat EigFn::eval(const Weight& nu) const {
  Rat out = constant;
  for (size_t i = 0; i < coeffs.size(); ++i) out += coeffs[i] * nu.f[i];
  return out;
}

EigFn eig_fn(const RootSystemData& rs, const Weight& lambda, const Weight& mu) {
  EigFn fn;
  fn.shift = mu;
  fn.constant = (casimir_char(rs, mu) - casimir_char(rs, lambda)) / 2;
  const int l = rs.type.rank;
  fn.coeffs.resize(l);
  for (int i = 0; i < l; ++i) {
    Rat c(0);
    for (int j = 0; j < l; ++j) c += rs.ip_gram[i][j] * mu.f[j];
    fn.coeffs[i] = c;
  }
  return fn;
}

Weight translated_weyl_action(const RootSystemData& rs, const std::vector<int>& word, const Weight& nu) {
  Weight w = nu + rs.delta;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int i = *it;
    if (i < 1 || i > rs.type.rank)
      throw Unsupported("translated_weyl_action: reflection index out of range");
    w = reflect(rs, w, i - 1);
  }
  return w - rs.delta;
}

DistinctnessResult char_distinctness_smf(const RootSystemData& rs, const WeightSystem& lambda_ws,
                                         const Weight& nu) {
  DistinctnessResult out;
  std::vector<std::pair<Rat, const Weight*>> values;
  for (const auto& [mu, m] : lambda_ws.weights) {
    if (!(nu + mu).is_dominant()) continue;
    values.emplace_back(eig_fn(rs, lambda_ws.highest, mu).eval(nu), &mu);
  }
  out.pairs_checked = static_cast<long>(values.size() * (values.size() - 1) / 2);
  std::sort(values.begin(), values.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 0; i + 1 < values.size(); ++i)
    if (values[i].first == values[i + 1].first) {
      out.distinct = false;
      out.offending = std::make_pair(*values[i].second, *values[i + 1].second);
      return out;
    }
  return out;
}

}  // namespace smflab
