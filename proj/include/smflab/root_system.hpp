#pragma once

#include <vector>

#include "smflab/lie_type.hpp"
#include "smflab/weight.hpp"

namespace smflab {

/// Exact structural data for one simple type. Conventions:
///  - cartan[i][j] = <alpha_i, alpha_j^vee>; row i holds the
///    fundamental-weight coordinates of the simple root alpha_i.
///  - The invariant inner product is normalized per family so that the
///    power-sum character formulas in the casimir module hold with constant
///    exactly 1: A_l uses the defining trace form ((eps_i, eps_j) =
///    delta_ij), B/C/D use (mu_i, mu_j) = 2 delta_ij on the natural
///    coordinate functionals, G_2 uses the 7-dimensional trace form, and
///    E_6/E_7 use (alpha, alpha) = 2.
///  - killing_scale is the exact ratio Killing form / chosen form.
struct RootSystemData {
  LieType type;
  RatMat cartan;
  RatMat cartan_inv;
  /// All positive roots, each as integer coordinates in the simple-root
  /// basis; ordered by height, then lexicographically.
  std::vector<RatVec> positive_roots;
  /// The same roots in fundamental-weight coordinates.
  std::vector<Weight> positive_roots_fund;
  /// Half the sum of positive roots: fundamental coordinates (1,...,1).
  Weight delta;
  /// c_i with h0 = sum_i c_i h_i for the principal semisimple element h0
  /// normalized by alpha_j(h0) = 2; always positive integers.
  RatVec coroot_coeffs;
  /// Gram matrix (omega_i, omega_j) of the fundamental weights.
  RatMat ip_gram;
  /// d_i = (alpha_i, alpha_i) / 2.
  RatVec d;
  Rat killing_scale;
};

RootSystemData build_root_system(const LieType& t);

/// Cached lookup (thread-safe after first use per type).
const RootSystemData& root_system(const LieType& t);

Rat inner_product(const RootSystemData& rs, const Weight& a, const Weight& b);

/// Coordinates of w in the simple-root basis.
RatVec to_root_coords(const RootSystemData& rs, const Weight& w);
Weight from_root_coords(const RootSystemData& rs, const RatVec& r);

/// Sum of simple-root coordinates; integer on the root lattice, rational in
/// general.
Rat height_of(const RootSystemData& rs, const Weight& w);

/// Whether hi - lo is a nonnegative integer combination of simple roots.
bool dominance_leq(const RootSystemData& rs, const Weight& lo, const Weight& hi);

/// Simple reflection s_i applied to w (0-based i).
Weight reflect(const RootSystemData& rs, const Weight& w, int i);

/// Full Weyl orbit of w, sorted lexicographically.
std::vector<Weight> weyl_orbit(const RootSystemData& rs, const Weight& w);

/// Dominant representative of the orbit of w together with the sign
/// (-1)^(number of reflections used) and a flag set when w lies on a
/// chamber wall (some reflection fixes it, which forces sign ambiguity).
struct Dominized {
  Weight dominant;
  int sign = 1;
  bool on_wall = false;
};
Dominized dominize(const RootSystemData& rs, const Weight& w);

}  // namespace smflab
