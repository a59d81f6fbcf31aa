#include <algorithm>
#include <map>
#include <vector>

#include "doctest.h"
#include "smflab/errors.hpp"
#include "smflab/rep_data.hpp"

namespace {

using namespace smflab;

Int binom(long n, long k) {
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Int pow2(long k) {
  Int out = 1;
  out <<= k;
  return out;
}

}  // namespace

TEST_CASE("dimension and height closed forms") {
  SUBCASE("A fundamentals") {
    for (int l = 1; l <= 8; ++l) {
      const RootSystemData& rs = root_system({Family::A, l});
      for (int k = 1; k <= l; ++k) {
        const Weight w = basis_weight(l, k - 1);
        CHECK(weyl_dimension(rs, w) == binom(l + 1, k));
        CHECK(height(rs, w) == rat(k * (l - k + 1), 2));
      }
    }
  }
  SUBCASE("B natural and spin") {
    for (int l = 2; l <= 8; ++l) {
      const RootSystemData& rs = root_system({Family::B, l});
      CHECK(weyl_dimension(rs, basis_weight(l, 0)) == 2 * l + 1);
      CHECK(height(rs, basis_weight(l, 0)) == l);
      CHECK(weyl_dimension(rs, basis_weight(l, l - 1)) == pow2(l));
      CHECK(height(rs, basis_weight(l, l - 1)) == rat(l * (l + 1), 4));
    }
  }
  SUBCASE("C natural") {
    for (int l = 3; l <= 8; ++l) {
      const RootSystemData& rs = root_system({Family::C, l});
      CHECK(weyl_dimension(rs, basis_weight(l, 0)) == 2 * l);
      CHECK(height(rs, basis_weight(l, 0)) == rat(2 * l - 1, 2));
    }
    const RootSystemData& c3 = root_system({Family::C, 3});
    CHECK(weyl_dimension(c3, Weight{0, 0, 1}) == 14);
    CHECK(height(c3, Weight{0, 0, 1}) == rat(9, 2));
  }
  SUBCASE("D natural and half spins") {
    for (int l = 4; l <= 8; ++l) {
      const RootSystemData& rs = root_system({Family::D, l});
      CHECK(weyl_dimension(rs, basis_weight(l, 0)) == 2 * l);
      CHECK(height(rs, basis_weight(l, 0)) == l - 1);
      for (int k : {l - 2, l - 1}) {
        CHECK(weyl_dimension(rs, basis_weight(l, k)) == pow2(l - 1));
        CHECK(height(rs, basis_weight(l, k)) == rat(l * (l - 1), 4));
      }
    }
  }
  SUBCASE("exceptional modules") {
    CHECK(weyl_dimension(root_system({Family::G, 2}), Weight{1, 0}) == 7);
    CHECK(height(root_system({Family::G, 2}), Weight{1, 0}) == 3);
    CHECK(weyl_dimension(root_system({Family::E, 6}), basis_weight(6, 0)) == 27);
    CHECK(height(root_system({Family::E, 6}), basis_weight(6, 0)) == 8);
    CHECK(weyl_dimension(root_system({Family::E, 7}), basis_weight(7, 6)) == 56);
    CHECK(height(root_system({Family::E, 7}), basis_weight(7, 6)) == rat(27, 2));
  }
  SUBCASE("adjoint dimensions") {
    CHECK(weyl_dimension(root_system({Family::A, 3}), Weight{1, 0, 1}) == 15);
    CHECK(weyl_dimension(root_system({Family::G, 2}), Weight{0, 1}) == 14);
    CHECK(weyl_dimension(root_system({Family::E, 6}), basis_weight(6, 1)) == 78);
  }
}

TEST_CASE("weight systems carry exact multiplicities") {
  const RootSystemData& a2 = root_system({Family::A, 2});
  const WeightSystem adj = weight_system(a2, Weight{1, 1});
  CHECK(adj.total_dim() == 8);
  CHECK(adj.weights.size() == 7);
  CHECK(adj.multiplicity(Weight{0, 0}) == 2);
  CHECK(adj.multiplicity(Weight{1, 1}) == 1);
  CHECK(adj.multiplicity(Weight{-1, -1}) == 1);
  CHECK(adj.multiplicity(Weight{3, 0}) == 0);

  const WeightSystem g2adj = weight_system(root_system({Family::G, 2}), Weight{0, 1});
  CHECK(g2adj.total_dim() == 14);
  CHECK(g2adj.multiplicity(Weight{0, 0}) == 2);

  // B3 spin is multiplicity free with every weight in one Weyl orbit.
  const WeightSystem spin = weight_system(root_system({Family::B, 3}), Weight{0, 0, 1});
  CHECK(spin.total_dim() == 8);
  CHECK(is_multiplicity_free(spin));

  // C3 omega_2: dim 14, zero weight has multiplicity 2.
  const WeightSystem c3w2 = weight_system(root_system({Family::C, 3}), Weight{0, 1, 0});
  CHECK(c3w2.total_dim() == 14);
  CHECK(c3w2.multiplicity(Weight{0, 0, 0}) == 2);
  CHECK(!is_multiplicity_free(c3w2));
}

TEST_CASE("weight system respects the cap") {
  const RootSystemData& a3 = root_system({Family::A, 3});
  CHECK_THROWS_AS(weight_system(a3, Weight{1, 1, 1}, 10), CapExceeded);
  CHECK(weight_system(a3, Weight{1, 1, 1}, 100).total_dim() == 64);
}

TEST_CASE("strong multiplicity freeness is a chain condition") {
  const RootSystemData& b3 = root_system({Family::B, 3});
  CHECK(is_strongly_multiplicity_free(b3, weight_system(b3, Weight{1, 0, 0})));
  CHECK(!is_strongly_multiplicity_free(b3, weight_system(b3, Weight{0, 0, 1})));
  const RootSystemData& a3 = root_system({Family::A, 3});
  CHECK(is_strongly_multiplicity_free(a3, weight_system(a3, Weight{1, 0, 0})));
  // Multiplicity free but the weights are not totally ordered.
  CHECK(!is_strongly_multiplicity_free(a3, weight_system(a3, Weight{0, 1, 0})));
  const RootSystemData& g2 = root_system({Family::G, 2});
  CHECK(is_strongly_multiplicity_free(g2, weight_system(g2, Weight{1, 0})));
  CHECK(!is_strongly_multiplicity_free(g2, weight_system(g2, Weight{0, 1})));
  const RootSystemData& b2 = root_system({Family::B, 2});
  CHECK(is_strongly_multiplicity_free(b2, weight_system(b2, Weight{0, 1})));
  const RootSystemData& a1 = root_system({Family::A, 1});
  CHECK(is_strongly_multiplicity_free(a1, weight_system(a1, Weight{7})));
}

TEST_CASE("principal sl2 structure") {
  const RootSystemData& b2 = root_system({Family::B, 2});
  CHECK(principal_sl2_irreducible(b2, weight_system(b2, Weight{1, 0})));
  CHECK(principal_sl2_irreducible(b2, weight_system(b2, Weight{0, 1})));

  const RootSystemData& a3 = root_system({Family::A, 3});
  const WeightSystem w2 = weight_system(a3, Weight{0, 1, 0});
  CHECK(!principal_sl2_irreducible(a3, w2));
  const std::map<long, long> dec = principal_sl2_decomposition(a3, w2);
  CHECK(dec == std::map<long, long>{{0, 1}, {4, 1}});

  const RootSystemData& e7 = root_system({Family::E, 7});
  const WeightSystem e7w = weight_system(e7, basis_weight(7, 6));
  CHECK(principal_sl2_decomposition(e7, e7w) ==
        std::map<long, long>{{9, 1}, {17, 1}, {27, 1}});

  // Summand dimensions always add to dim V.
  const RootSystemData& g2 = root_system({Family::G, 2});
  const WeightSystem g2adj = weight_system(g2, Weight{0, 1});
  long total = 0;
  for (const auto& [m, count] : principal_sl2_decomposition(g2, g2adj))
    total += count * (m + 1);
  CHECK(total == 14);
}

TEST_CASE("chain generating polynomial") {
  const RootSystemData& g2 = root_system({Family::G, 2});
  const std::vector<long> g2poly = dynkin_polynomial(g2, weight_system(g2, Weight{1, 0}));
  CHECK(g2poly == std::vector<long>(7, 1));

  const RootSystemData& a3 = root_system({Family::A, 3});
  CHECK(dynkin_polynomial(a3, weight_system(a3, Weight{0, 1, 0})) ==
        std::vector<long>{1, 1, 2, 1, 1});

  // Degree 2 ht(lambda) and value dim V at q = 1, for a mixed batch.
  for (const CatalogEntry& e : multiplicity_free_catalog(4, 3)) {
    const RootSystemData& rs = root_system(e.type);
    const WeightSystem ws = weight_system(rs, e.lambda);
    const std::vector<long> poly = dynkin_polynomial(rs, ws);
    CHECK(Rat(poly.size() - 1) == 2 * height(rs, e.lambda));
    long value = 0;
    for (long c : poly) value += c;
    CHECK(value == ws.total_dim());
    const bool all_ones = std::all_of(poly.begin(), poly.end(), [](long c) { return c == 1; });
    CHECK(all_ones == is_strongly_multiplicity_free(rs, ws));
  }
}

TEST_CASE("dual weights") {
  const RootSystemData& a3 = root_system({Family::A, 3});
  CHECK(dual_weight(a3, Weight{2, 0, 0}) == Weight{0, 0, 2});
  CHECK(dual_weight(a3, Weight{1, 1, 0}) == Weight{0, 1, 1});
  const RootSystemData& b3 = root_system({Family::B, 3});
  CHECK(dual_weight(b3, Weight{1, 2, 3}) == Weight{1, 2, 3});
  const RootSystemData& d5 = root_system({Family::D, 5});
  CHECK(dual_weight(d5, basis_weight(5, 4)) == basis_weight(5, 3));
  const RootSystemData& e6 = root_system({Family::E, 6});
  CHECK(dual_weight(e6, basis_weight(6, 0)) == basis_weight(6, 5));
}

TEST_CASE("catalog contents and the classification list") {
  const auto cat = multiplicity_free_catalog(4, 5);
  CHECK(cat.size() == 51);
  long listed = 0;
  for (const CatalogEntry& e : cat) {
    const RootSystemData& rs = root_system(e.type);
    CHECK(is_multiplicity_free(weight_system(rs, e.lambda)));
    if (smf_listed(e.type, e.lambda)) ++listed;
  }
  CHECK(listed > 10);

  CHECK(smf_listed({Family::A, 1}, Weight{5}));
  CHECK(smf_listed({Family::A, 3}, Weight{0, 0, 1}));
  CHECK(smf_listed({Family::B, 4}, basis_weight(4, 0)));
  CHECK(smf_listed({Family::C, 3}, basis_weight(3, 0)));
  CHECK(smf_listed({Family::G, 2}, Weight{1, 0}));
  CHECK(!smf_listed({Family::B, 2}, Weight{0, 1}));
  CHECK(!smf_listed({Family::B, 3}, Weight{0, 0, 1}));
  CHECK(!smf_listed({Family::C, 3}, Weight{0, 0, 1}));
  CHECK(!smf_listed({Family::A, 3}, Weight{0, 1, 0}));
  CHECK(!smf_listed({Family::A, 3}, Weight{0, 0, 4}));
  CHECK(!smf_listed({Family::A, 2}, Weight{2, 1}));
  CHECK(!smf_listed({Family::D, 4}, basis_weight(4, 0)));
  CHECK(!smf_listed({Family::E, 6}, basis_weight(6, 0)));
}
