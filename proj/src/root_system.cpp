#include "smflab/root_system.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "smflab/errors.hpp"

namespace smflab {
namespace {

/// Integer Cartan matrix entries; a[i][j] = <alpha_i, alpha_j^vee>.
std::vector<std::vector<long>> cartan_entries(const LieType& t) {
  const int l = t.rank;
  std::vector<std::vector<long>> a(l, std::vector<long>(l, 0));
  for (int i = 0; i < l; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      a[l - 2][l - 1] = -2;  // alpha_{l-1} long, alpha_l short
      break;
    case Family::C:
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      a[l - 1][l - 2] = -2;  // alpha_l long
      break;
    case Family::D:
      for (int i = 0; i + 1 < l - 1; ++i) link(i, i + 1);
      link(l - 3, l - 1);
      break;
    case Family::E:
      // Bourbaki numbering: chain 1-3-4-5-...-l with node 2 attached to 4.
      link(0, 2);
      link(2, 3);
      for (int i = 3; i + 1 < l; ++i) link(i, i + 1);
      link(1, 3);
      break;
    case Family::G:
      a[0][1] = -1;  // alpha_1 short
      a[1][0] = -3;
      break;
  }
  return a;
}

RatVec d_vector(const LieType& t) {
  const int l = t.rank;
  RatVec d(l, Rat(1));
  switch (t.family) {
    case Family::A:
      break;  // all 1
    case Family::B:
      for (int i = 0; i + 1 < l; ++i) d[i] = 2;
      d[l - 1] = 1;
      break;
    case Family::C:
      for (int i = 0; i + 1 < l; ++i) d[i] = 2;
      d[l - 1] = 4;
      break;
    case Family::D:
      for (int i = 0; i < l; ++i) d[i] = 2;
      break;
    case Family::E:
      break;  // all 1
    case Family::G:
      d[0] = rat(1, 6);
      d[1] = rat(1, 2);
      break;
  }
  return d;
}

/// Ratio Killing form / chosen form: dual Coxeter number times the squared
/// length of the highest root in the chosen normalization.
Rat killing_ratio(const LieType& t) {
  const int l = t.rank;
  switch (t.family) {
    case Family::A: return Rat(2 * (l + 1));
    case Family::B: return Rat(4 * (2 * l - 1));
    case Family::C: return Rat(8 * (l + 1));
    case Family::D: return Rat(4 * (2 * l - 2));
    case Family::E: return Rat(l == 6 ? 24 : 36);
    case Family::G: return Rat(4);
  }
  throw std::logic_error("killing_ratio: bad family");
}

Weight reflect_impl(const RootSystemData& rs, const Weight& w, int i) {
  Weight out = w;
  const Rat fi = w.f[i];
  if (fi == 0) return out;
  for (int j = 0; j < rs.type.rank; ++j) out.f[j] -= fi * rs.cartan[i][j];
  return out;
}

/// r = A^-T f: coordinates of w in the simple-root basis.
RatVec to_root_coords_impl(const RootSystemData& rs, const Weight& w) {
  const int l = rs.type.rank;
  RatVec r(l, Rat(0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) r[i] += rs.cartan_inv[j][i] * w.f[j];
  return r;
}

size_t expected_root_count(const LieType& t) {
  const int l = t.rank;
  switch (t.family) {
    case Family::A: return static_cast<size_t>(l) * (l + 1) / 2;
    case Family::B:
    case Family::C: return static_cast<size_t>(l) * l;
    case Family::D: return static_cast<size_t>(l) * (l - 1);
    case Family::E: return l == 6 ? 36 : 63;
    case Family::G: return 6;
  }
  throw std::logic_error("expected_root_count: bad family");
}

}  // namespace

RootSystemData build_root_system(const LieType& t) {
  if (!lie_type_valid(t)) throw Unsupported("build_root_system: invalid type " + to_string(t));
  const int l = t.rank;
  RootSystemData rs;
  rs.type = t;

  const auto a = cartan_entries(t);
  rs.cartan.assign(l, RatVec(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) rs.cartan[i][j] = Rat(a[i][j]);
  rs.cartan_inv = mat_inverse(rs.cartan);
  rs.d = d_vector(t);
  rs.killing_scale = killing_ratio(t);

  // Gram matrix of fundamental weights: (omega_i, omega_j) = d_i * (A^-1)_{ji}.
  rs.ip_gram.assign(l, RatVec(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) rs.ip_gram[i][j] = rs.d[i] * rs.cartan_inv[j][i];
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (rs.ip_gram[i][j] != rs.ip_gram[j][i])
        throw InternalError("build_root_system: Gram matrix not symmetric");

  rs.delta = Weight(RatVec(l, Rat(1)));

  // Positive roots: close the simple roots under simple reflections. Simple
  // root alpha_i has fundamental coordinates equal to Cartan row i.
  std::set<Weight> closure;
  std::vector<Weight> frontier;
  for (int i = 0; i < l; ++i) {
    Weight alpha(RatVec(rs.cartan[i]));
    if (closure.insert(alpha).second) frontier.push_back(alpha);
  }
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& w : frontier)
      for (int i = 0; i < l; ++i) {
        Weight r = reflect_impl(rs, w, i);
        if (closure.insert(r).second) next.push_back(r);
      }
    frontier = std::move(next);
  }

  struct PosRoot {
    long height;
    RatVec coords;
    Weight fund;
  };
  std::vector<PosRoot> pos;
  for (const auto& w : closure) {
    RatVec rc = to_root_coords_impl(rs, w);
    bool nonneg = true;
    long h = 0;
    for (const auto& c : rc) {
      if (c < 0) nonneg = false;
      if (!rat_is_integer(c)) throw InternalError("build_root_system: non-integer root coords");
      h += rat_to_long(c);
    }
    if (nonneg) pos.push_back({h, std::move(rc), w});
  }
  if (2 * pos.size() != closure.size() || pos.size() != expected_root_count(t))
    throw InternalError("build_root_system: wrong number of positive roots for " + to_string(t));
  std::sort(pos.begin(), pos.end(), [](const PosRoot& x, const PosRoot& y) {
    if (x.height != y.height) return x.height < y.height;
    return x.coords < y.coords;
  });
  for (auto& p : pos) {
    rs.positive_roots.push_back(std::move(p.coords));
    rs.positive_roots_fund.push_back(std::move(p.fund));
  }

  // Sum of positive roots must equal 2 * delta.
  Weight sum(l);
  for (const auto& w : rs.positive_roots_fund) sum += w;
  if (!(sum == Rat(2) * rs.delta)) throw InternalError("build_root_system: sum of positive roots != 2 delta");

  // coroot_coeffs c = 2 A^-1 (1,...,1): alpha_j(h0) = 2 for every j.
  RatVec ones(l, Rat(1));
  rs.coroot_coeffs = mat_vec(rs.cartan_inv, ones);
  for (auto& c : rs.coroot_coeffs) {
    c *= 2;
    if (!rat_is_integer(c) || c <= 0)
      throw InternalError("build_root_system: coroot coefficients must be positive integers");
  }

  return rs;
}

const RootSystemData& root_system(const LieType& t) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, RootSystemData> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(t.family), t.rank);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_root_system(t)).first;
  return it->second;
}

Rat inner_product(const RootSystemData& rs, const Weight& a, const Weight& b) {
  Rat out(0);
  const int l = rs.type.rank;
  for (int i = 0; i < l; ++i) {
    if (a.f[i] == 0) continue;
    Rat row(0);
    for (int j = 0; j < l; ++j) row += rs.ip_gram[i][j] * b.f[j];
    out += a.f[i] * row;
  }
  return out;
}

RatVec to_root_coords(const RootSystemData& rs, const Weight& w) { return to_root_coords_impl(rs, w); }

Weight from_root_coords(const RootSystemData& rs, const RatVec& r) {
  const int l = rs.type.rank;
  Weight w(l);
  for (int i = 0; i < l; ++i) {
    if (r[i] == 0) continue;
    for (int j = 0; j < l; ++j) w.f[j] += r[i] * rs.cartan[i][j];
  }
  return w;
}

Rat height_of(const RootSystemData& rs, const Weight& w) {
  RatVec rc = to_root_coords(rs, w);
  Rat h(0);
  for (const auto& c : rc) h += c;
  return h;
}

bool dominance_leq(const RootSystemData& rs, const Weight& lo, const Weight& hi) {
  RatVec rc = to_root_coords(rs, hi - lo);
  for (const auto& c : rc)
    if (c < 0 || !rat_is_integer(c)) return false;
  return true;
}

Weight reflect(const RootSystemData& rs, const Weight& w, int i) { return reflect_impl(rs, w, i); }

std::vector<Weight> weyl_orbit(const RootSystemData& rs, const Weight& w) {
  std::set<Weight> orbit{w};
  std::vector<Weight> frontier{w};
  const int l = rs.type.rank;
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& v : frontier)
      for (int i = 0; i < l; ++i) {
        Weight r = reflect_impl(rs, v, i);
        if (orbit.insert(r).second) next.push_back(r);
      }
    frontier = std::move(next);
  }
  return {orbit.begin(), orbit.end()};
}

Dominized dominize(const RootSystemData& rs, const Weight& w) {
  Dominized out{w, 1, false};
  const int l = rs.type.rank;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < l; ++i) {
      if (out.dominant.f[i] < 0) {
        out.dominant = reflect_impl(rs, out.dominant, i);
        out.sign = -out.sign;
        moved = true;
      }
    }
  }
  for (int i = 0; i < l; ++i)
    if (out.dominant.f[i] == 0) {
      out.on_wall = true;
      break;
    }
  return out;
}

}  // namespace smflab
