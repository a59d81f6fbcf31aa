#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "smflab/rep_data.hpp"
#include "smflab/root_system.hpp"

namespace smflab {

using Cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;

/// A module given by explicit matrices: one image per element of a fixed
/// ordered basis of the Lie algebra, together with the coefficients of the
/// dual basis with respect to the normalized trace form.
struct MatrixRep {
  LieType t{};
  Weight highest;
  long dim = 0;
  std::vector<std::string> basis_labels;
  std::vector<CMat> images;
  /// Row a holds the expansion of the dual element: x_a* = sum_b coeff(a,b) x_b.
  Eigen::MatrixXd dual_coeffs;
  /// Predicted eigenvalues of invariant operators in this realization equal
  /// eigen_scale times the values computed in the abstract normalization.
  Rat eigen_scale{1};

  CMat dual_image(std::size_t a) const;
  /// Sum over the basis of images[a] * dual_image(a); scalar on an
  /// irreducible module.
  CMat casimir_matrix() const;
};

/// One irreducible summand of a product module together with the invariant
/// operator eigenvalue predicted for it.
struct MTypeSummand {
  Weight shift;      ///< weight of the first factor producing the summand
  Weight component;  ///< highest weight nu + shift of the summand
  Rat value;         ///< predicted eigenvalue (already in the rep's scale)
  long mult = 0;     ///< multiplicity of the summand in the product
  long dim = 0;      ///< dimension of one copy of the summand
};

/// The invariant operator sum_a pi_lambda(x_a) (x) pi_nu(x_a*) on the tensor
/// product, with its exact eigenvalue predictions.
struct MTypeMatrix {
  LieType t{};
  Weight lambda;
  Weight nu;
  CMat matrix;
  /// Unmerged predictions sorted by (value, component).
  std::vector<MTypeSummand> summands;
  /// Exactly-equal values merged; second entry is the total dimension.
  std::vector<std::pair<Rat, long>> clusters;
  /// summands.size() - clusters.size(): number of exact coincidences.
  long exact_merges = 0;
};

/// Result of comparing the numeric spectrum against the exact predictions.
struct SpectrumReport {
  bool matched = false;           ///< clusters match counts at tolerance 1e-7
  bool distinct = false;          ///< exact pairwise distinctness of summand values
  bool ambiguous = false;         ///< two distinct predictions closer than 1e-6
  long collision_clusters = 0;    ///< clusters absorbing two or more summands
  double max_imag = 0.0;          ///< largest imaginary part seen in the spectrum
  double max_dev = 0.0;           ///< largest |eigenvalue - assigned prediction|
};

/// Literal transcription of the published natural-module basis and its dual
/// assignments (types A, B, C, G2; D is provided in the same antisymmetric
/// shape as B). The stored dual coefficients always come from inverting the
/// trace-form Gram matrix, which for the G2 Cartan part differs from the
/// published closed form; tests freeze that discrepancy. Throws Unsupported
/// for E types.
MatrixRep natural_rep(LieType t);

/// Builds the irreducible module of highest weight nu by walking a chain of
/// tensor products with fundamental modules, extracting the top component at
/// each step (nullspace of the stacked raising operators, then closure under
/// the lowering operators in lexicographic generator order). Spin modules use
/// a fermionic realization. Deterministic; throws CapExceeded when dim V_nu
/// exceeds cap and Unsupported for E types.
MatrixRep build_irrep(const RootSystemData& rs, const Weight& nu, long cap = default_cap());

/// Assembles the invariant operator together with exact predictions obtained
/// from the character formula and the general decomposition oracle. Both
/// arguments must use the same basis family (two engine modules, or one
/// transcribed natural module paired with itself).
MTypeMatrix mtype_matrix(const RootSystemData& rs, const MatrixRep& rep_l, const MatrixRep& rep_n);

/// Clusters the numeric spectrum at 1e-7 and matches clusters to predictions
/// bijectively. When two distinct exact predictions fall within 1e-6 of each
/// other the numeric clusters are merged for counting and the report is
/// marked ambiguous; the distinctness verdict always comes from the exact
/// values.
SpectrumReport spectrum_check(const MTypeMatrix& m);

/// Lagrange interpolation projectors onto the predicted eigenspaces, in
/// summand order. Refuses (Unsupported) when two summands share a predicted
/// value exactly.
std::vector<CMat> projectors(const MTypeMatrix& m);

/// Degree of the minimal polynomial measured as the Krylov rank of
/// {I, M, M^2, ...} at the given tolerance (after norm scaling); escalates
/// the cutoff by 50x when a residual falls inside the ambiguous band.
int min_poly_degree(const MTypeMatrix& m, double tol = 1e-7);

}  // namespace smflab
