#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "smflab/casimir.hpp"
#include "smflab/errors.hpp"

namespace {

using namespace smflab;

/// Eigenvalue multiset of the Casimir on the summands of V_lambda (x) V_nu
/// predicted from the shifts: one value chi(dominize(nu + mu + delta) -
/// delta) per weight mu of V_lambda that survives dominization.
std::multiset<Rat> shifted_value_multiset(const RootSystemData& rs, const WeightSystem& lws,
                                          const Weight& nu) {
  std::multiset<Rat> out;
  for (const auto& [mu, mult] : lws.weights) {
    const Weight moved = nu + mu;
    for (long c = 0; c < mult; ++c) out.insert(casimir_char(rs, moved));
  }
  return out;
}

}  // namespace

TEST_CASE("casimir scalar anchors") {
  const RootSystemData& a1 = root_system({Family::A, 1});
  for (long k = 0; k <= 6; ++k) CHECK(casimir_char(a1, Weight{k}) == rat(k * (k + 2), 2));

  const RootSystemData& b2 = root_system({Family::B, 2});
  CHECK(casimir_char(b2, Weight{1, 0}) == 8);
  CHECK(casimir_char(b2, Weight{0, 1}) == 5);

  const RootSystemData& c3 = root_system({Family::C, 3});
  CHECK(casimir_char(c3, Weight{1, 0, 0}) == 14);
  CHECK(casimir_char(c3, Weight{0, 0, 1}) == 30);

  const RootSystemData& g2 = root_system({Family::G, 2});
  CHECK(casimir_char(g2, Weight{1, 0}) == 2);
  CHECK(casimir_char(g2, Weight{0, 1}) == 4);

  // The adjoint eigenvalue equals (chosen form) / (Killing form).
  for (const LieType t : {LieType{Family::A, 2}, LieType{Family::B, 3}, LieType{Family::C, 3},
                          LieType{Family::D, 4}, LieType{Family::G, 2}, LieType{Family::E, 6}}) {
    const RootSystemData& rs = root_system(t);
    const Weight theta = from_root_coords(rs, rs.positive_roots.back());
    CHECK(casimir_char(rs, theta) == rs.killing_scale);
  }
}

TEST_CASE("power-sum coordinates per family") {
  const RootSystemData& a2 = root_system({Family::A, 2});
  const YoungCoords ya = young_coords(a2, Weight{1, 0});
  CHECK(ya.alpha == 1);
  CHECK(ya.zeta == RatVec{rat(2, 3), rat(-1, 3), rat(-1, 3)});

  const RootSystemData& c3 = root_system({Family::C, 3});
  const YoungCoords yc = young_coords(c3, Weight{0, 0, 1});
  CHECK(yc.alpha == 3);
  CHECK(yc.zeta == RatVec{rat(1), rat(1), rat(1)});

  const RootSystemData& b2 = root_system({Family::B, 2});
  const YoungCoords yb = young_coords(b2, Weight{0, 1});
  CHECK(yb.alpha == rat(3, 2));
  CHECK(yb.zeta == RatVec{rat(1, 2), rat(1, 2)});

  const RootSystemData& d4 = root_system({Family::D, 4});
  const YoungCoords yd = young_coords(d4, Weight{0, 0, 0, 1});
  CHECK(yd.alpha == 3);
  CHECK(yd.zeta == RatVec{rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)});

  CHECK_THROWS_AS(young_coords(root_system({Family::G, 2}), Weight{1, 0}), Unsupported);
}

TEST_CASE("power-sum evaluation matches the bilinear form") {
  // Exhaustive small-coordinate sweep over all classical families.
  for (const LieType t : {LieType{Family::A, 1}, LieType{Family::A, 3}, LieType{Family::B, 2},
                          LieType{Family::B, 4}, LieType{Family::C, 3}, LieType{Family::D, 4}}) {
    const RootSystemData& rs = root_system(t);
    std::vector<long> c(t.rank, 0);
    while (true) {
      Weight w(t.rank);
      for (int i = 0; i < t.rank; ++i) w.f[i] = c[i];
      CHECK(popov_char(rs, w) == casimir_char(rs, w));
      int p = 0;
      while (p < t.rank && c[p] == 2) c[p++] = 0;
      if (p == t.rank) break;
      ++c[p];
    }
  }
}

TEST_CASE("eigenvalue functions are affine with the shift as gradient") {
  const RootSystemData& b3 = root_system({Family::B, 3});
  const Weight lambda = basis_weight(3, 0);
  const WeightSystem lws = weight_system(b3, lambda);
  for (const auto& [mu, mult] : lws.weights) {
    const EigFn f = eig_fn(b3, lambda, mu);
    CHECK(f.shift == mu);
    for (const Weight& nu : {Weight{0, 0, 0}, Weight{1, 2, 0}, Weight{3, 1, 2}}) {
      const Rat direct =
          (casimir_char(b3, nu + mu) - casimir_char(b3, nu) - casimir_char(b3, lambda)) / 2;
      CHECK(f.eval(nu) == direct);
    }
  }
  // Gradient coefficients are the pairings with the fundamental weights.
  const EigFn top = eig_fn(b3, lambda, lambda);
  for (int i = 0; i < 3; ++i)
    CHECK(top.coeffs[i] == inner_product(b3, basis_weight(3, i), lambda));
}

TEST_CASE("translated action reshuffles shifted orbits") {
  const RootSystemData& a2 = root_system({Family::A, 2});
  CHECK(translated_weyl_action(a2, {}, Weight{1, 2}) == Weight{1, 2});
  // s1 . nu = s1(nu + delta) - delta.
  const Weight moved = translated_weyl_action(a2, {1}, Weight{1, 2});
  CHECK(moved == reflect(a2, Weight{2, 3}, 0) - Weight{1, 1});
  // The action is a group action: word concatenation composes.
  const Weight two = translated_weyl_action(a2, {2, 1}, Weight{0, 1});
  CHECK(two == translated_weyl_action(a2, {2}, translated_weyl_action(a2, {1}, Weight{0, 1})));
  // chi is invariant under the translated action.
  for (const std::vector<int>& word : {std::vector<int>{1}, {2}, {1, 2}, {2, 1, 2}}) {
    CHECK(casimir_char(a2, translated_weyl_action(a2, word, Weight{2, 5})) ==
          casimir_char(a2, Weight{2, 5}));
  }
}

TEST_CASE("shifted eigenvalue multisets are invariant under the translated action") {
  // Seeded and deterministic: random words and base points per type.
  std::mt19937 rng(20240817);
  for (const LieType t : {LieType{Family::A, 2}, LieType{Family::B, 2}, LieType{Family::C, 3},
                          LieType{Family::G, 2}}) {
    const RootSystemData& rs = root_system(t);
    const Weight lambda = basis_weight(t.rank, 0);
    const WeightSystem lws = weight_system(rs, lambda);
    std::uniform_int_distribution<int> coord(0, 4);
    std::uniform_int_distribution<int> letter(1, t.rank);
    std::uniform_int_distribution<int> len(1, 6);
    for (int trial = 0; trial < 20; ++trial) {
      Weight nu(t.rank);
      for (int i = 0; i < t.rank; ++i) nu.f[i] = coord(rng);
      std::vector<int> word(len(rng));
      for (int& w : word) w = letter(rng);
      const Weight moved = translated_weyl_action(rs, word, nu);
      CHECK(shifted_value_multiset(rs, lws, nu) == shifted_value_multiset(rs, lws, moved));
    }
  }
}

TEST_CASE("exact distinctness of eigenvalue functions at dominant points") {
  const RootSystemData& b3 = root_system({Family::B, 3});
  const WeightSystem nat = weight_system(b3, basis_weight(3, 0));
  const DistinctnessResult ok = char_distinctness_smf(b3, nat, Weight{1, 1, 1});
  CHECK(ok.distinct);
  CHECK(ok.pairs_checked > 0);

  // The spin module of B3 admits an equal pair at a suitable nu.
  const WeightSystem spin = weight_system(b3, Weight{0, 0, 1});
  const DistinctnessResult bad = char_distinctness_smf(b3, spin, Weight{1, 0, 3});
  CHECK(!bad.distinct);
  REQUIRE(bad.offending.has_value());
  const auto& [m1, m2] = *bad.offending;
  CHECK(casimir_char(b3, Weight{1, 0, 3} + m1) == casimir_char(b3, Weight{1, 0, 3} + m2));
}
