#include "smflab/matrix_rep.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>
#include <utility>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "smflab/casimir.hpp"
#include "smflab/errors.hpp"
#include "smflab/tensor.hpp"

namespace smflab {

namespace {

using IWeight = std::vector<long>;
using RowMat = Eigen::Matrix<Cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

CMat unit_entry(long n, long i, long j) {
  CMat m = CMat::Zero(n, n);
  m(i, j) = Cplx(1.0, 0.0);
  return m;
}

CMat bracket_mm(const CMat& a, const CMat& b) { return a * b - b * a; }

long int_to_long(const Int& x) {
  if (!x.fits_slong_p()) throw CapExceeded("dimension does not fit a machine integer");
  return x.get_si();
}

IWeight iweight_of(const Weight& w) {
  IWeight out(w.f.size());
  for (std::size_t i = 0; i < w.f.size(); ++i) out[i] = rat_to_long(w.f[i]);
  return out;
}

IWeight iweight_sub(const IWeight& a, const IWeight& b) {
  IWeight out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

/// Exact trace of a*b in d^2 operations.
Cplx trace_prod(const CMat& a, const CMat& b) {
  return a.cwiseProduct(b.transpose()).sum();
}

CMat kron_mm(const CMat& a, const CMat& b) {
  CMat out = CMat::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j) {
      if (std::abs(a(i, j)) == 0.0) continue;
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  return out;
}

// ---------------------------------------------------------------------------
// Generator realizations
// ---------------------------------------------------------------------------

/// A module described by its generator action only: images of e_i, f_i, h_i
/// plus the exact weight (fundamental coordinates) of every basis vector.
/// All h images are diagonal with integer entries.
struct GenRep {
  long dim = 0;
  std::vector<CMat> e, f, h;
  std::vector<IWeight> wts;
  Weight highest;
};

void fill_weights_from_h(GenRep& rep) {
  const int l = static_cast<int>(rep.h.size());
  rep.wts.assign(rep.dim, IWeight(l, 0));
  for (long c = 0; c < rep.dim; ++c)
    for (int j = 0; j < l; ++j) {
      Cplx v = rep.h[j](c, c);
      long r = std::llround(v.real());
      if (std::abs(v.real() - static_cast<double>(r)) > 1e-9 || std::abs(v.imag()) > 1e-9)
        throw InternalError("generator diagonal is not integral");
      rep.wts[c][j] = r;
    }
}

GenRep gens_type_a(int l) {
  const long n = l + 1;
  GenRep rep;
  rep.dim = n;
  for (int j = 0; j < l; ++j) {
    rep.e.push_back(unit_entry(n, j, j + 1));
    rep.f.push_back(unit_entry(n, j + 1, j));
    rep.h.push_back(unit_entry(n, j, j) - unit_entry(n, j + 1, j + 1));
  }
  rep.highest = basis_weight(l, 0);
  fill_weights_from_h(rep);
  return rep;
}

/// Split-form so(2l+1): coordinates ordered w_1..w_l, w_{-1}..w_{-l}, w_0.
GenRep gens_type_b(int l) {
  const long n = 2 * l + 1;
  auto pos = [l](int i) -> long { return i > 0 ? i - 1 : (i < 0 ? l - i - 1 : 2 * l); };
  GenRep rep;
  rep.dim = n;
  for (int i = 1; i < l; ++i) {
    rep.e.push_back(unit_entry(n, pos(i), pos(i + 1)) - unit_entry(n, pos(-i - 1), pos(-i)));
    rep.f.push_back(unit_entry(n, pos(i + 1), pos(i)) - unit_entry(n, pos(-i), pos(-i - 1)));
    rep.h.push_back(unit_entry(n, pos(i), pos(i)) - unit_entry(n, pos(i + 1), pos(i + 1)) -
                    unit_entry(n, pos(-i), pos(-i)) + unit_entry(n, pos(-i - 1), pos(-i - 1)));
  }
  rep.e.push_back(2.0 * (unit_entry(n, pos(l), pos(0)) - unit_entry(n, pos(0), pos(-l))));
  rep.f.push_back(unit_entry(n, pos(0), pos(l)) - unit_entry(n, pos(-l), pos(0)));
  rep.h.push_back(2.0 * (unit_entry(n, pos(l), pos(l)) - unit_entry(n, pos(-l), pos(-l))));
  rep.highest = basis_weight(l, 0);
  fill_weights_from_h(rep);
  return rep;
}

/// sp(2l): coordinates ordered w_1..w_l, w_{-1}..w_{-l}.
GenRep gens_type_c(int l) {
  const long n = 2 * l;
  auto pos = [l](int i) -> long { return i > 0 ? i - 1 : l - i - 1; };
  GenRep rep;
  rep.dim = n;
  for (int i = 1; i < l; ++i) {
    rep.e.push_back(unit_entry(n, pos(i), pos(i + 1)) - unit_entry(n, pos(-i - 1), pos(-i)));
    rep.f.push_back(unit_entry(n, pos(i + 1), pos(i)) - unit_entry(n, pos(-i), pos(-i - 1)));
    rep.h.push_back(unit_entry(n, pos(i), pos(i)) - unit_entry(n, pos(i + 1), pos(i + 1)) -
                    unit_entry(n, pos(-i), pos(-i)) + unit_entry(n, pos(-i - 1), pos(-i - 1)));
  }
  rep.e.push_back(unit_entry(n, pos(l), pos(-l)));
  rep.f.push_back(unit_entry(n, pos(-l), pos(l)));
  rep.h.push_back(unit_entry(n, pos(l), pos(l)) - unit_entry(n, pos(-l), pos(-l)));
  rep.highest = basis_weight(l, 0);
  fill_weights_from_h(rep);
  return rep;
}

/// Split-form so(2l): coordinates ordered w_1..w_l, w_{-1}..w_{-l}.
GenRep gens_type_d(int l) {
  const long n = 2 * l;
  auto pos = [l](int i) -> long { return i > 0 ? i - 1 : l - i - 1; };
  GenRep rep;
  rep.dim = n;
  for (int i = 1; i < l; ++i) {
    rep.e.push_back(unit_entry(n, pos(i), pos(i + 1)) - unit_entry(n, pos(-i - 1), pos(-i)));
    rep.f.push_back(unit_entry(n, pos(i + 1), pos(i)) - unit_entry(n, pos(-i), pos(-i - 1)));
    rep.h.push_back(unit_entry(n, pos(i), pos(i)) - unit_entry(n, pos(i + 1), pos(i + 1)) -
                    unit_entry(n, pos(-i), pos(-i)) + unit_entry(n, pos(-i - 1), pos(-i - 1)));
  }
  rep.e.push_back(unit_entry(n, pos(l - 1), pos(-l)) - unit_entry(n, pos(l), pos(-l + 1)));
  rep.f.push_back(unit_entry(n, pos(-l), pos(l - 1)) - unit_entry(n, pos(-l + 1), pos(l)));
  rep.h.push_back(unit_entry(n, pos(l - 1), pos(l - 1)) + unit_entry(n, pos(l), pos(l)) -
                  unit_entry(n, pos(-l + 1), pos(-l + 1)) - unit_entry(n, pos(-l), pos(-l)));
  rep.highest = basis_weight(l, 0);
  fill_weights_from_h(rep);
  return rep;
}

/// The 7-dimensional module with coordinates diag(0, x_1, x_2, x_3, -x_1,
/// -x_2, -x_3); all generator matrices are real.
GenRep gens_g2() {
  const long n = 7;
  auto eu = [n](long i, long j) { return unit_entry(n, i, j); };
  const double r2 = std::sqrt(2.0);
  GenRep rep;
  rep.dim = n;
  CMat f1 = r2 * (eu(0, 1) - eu(4, 0)) - (eu(2, 6) - eu(3, 5));
  rep.e.push_back(f1.transpose());
  rep.f.push_back(f1);
  CMat h1 = CMat::Zero(n, n);
  const double d1[7] = {0, 2, -1, -1, -2, 1, 1};
  for (long i = 0; i < n; ++i) h1(i, i) = d1[i];
  rep.h.push_back(h1);
  rep.e.push_back(r2 * (eu(2, 1) - eu(4, 5)));
  rep.f.push_back((eu(1, 2) - eu(5, 4)) / r2);
  CMat h2 = CMat::Zero(n, n);
  const double d2[7] = {0, -1, 1, 0, 1, -1, 0};
  for (long i = 0; i < n; ++i) h2(i, i) = d2[i];
  rep.h.push_back(h2);
  rep.highest = basis_weight(2, 0);
  fill_weights_from_h(rep);
  return rep;
}

// Fermionic-mode matrices on the 2^l dimensional space indexed by bitmasks;
// mode k is bit k (0-based).
CMat fermi_create(int l, int k) {
  const long n = 1L << l;
  CMat m = CMat::Zero(n, n);
  const long below = (1L << k) - 1;
  for (long b = 0; b < n; ++b) {
    if ((b >> k) & 1) continue;
    int sgn = (std::popcount(static_cast<unsigned long>(b & below)) & 1) ? -1 : 1;
    m(b | (1L << k), b) = static_cast<double>(sgn);
  }
  return m;
}

CMat fermi_number(int l, int k) {
  const long n = 1L << l;
  CMat m = CMat::Zero(n, n);
  for (long b = 0; b < n; ++b)
    if ((b >> k) & 1) m(b, b) = 1.0;
  return m;
}

CMat fermi_parity(int l) {
  const long n = 1L << l;
  CMat m = CMat::Zero(n, n);
  for (long b = 0; b < n; ++b)
    m(b, b) = (std::popcount(static_cast<unsigned long>(b)) & 1) ? -1.0 : 1.0;
  return m;
}

GenRep gens_spin_b(int l) {
  const long n = 1L << l;
  GenRep rep;
  rep.dim = n;
  std::vector<CMat> cr(l), an(l);
  for (int k = 0; k < l; ++k) {
    cr[k] = fermi_create(l, k);
    an[k] = cr[k].transpose();
  }
  for (int i = 0; i + 1 < l; ++i) {
    rep.e.push_back(cr[i] * an[i + 1]);
    rep.f.push_back(cr[i + 1] * an[i]);
    rep.h.push_back(fermi_number(l, i) - fermi_number(l, i + 1));
  }
  CMat g0 = fermi_parity(l);
  rep.e.push_back(cr[l - 1] * g0);
  rep.f.push_back(g0 * an[l - 1]);
  rep.h.push_back(2.0 * fermi_number(l, l - 1) - CMat::Identity(n, n));
  rep.highest = basis_weight(l, l - 1);
  fill_weights_from_h(rep);
  return rep;
}

GenRep restrict_rows(const GenRep& rep, const std::vector<long>& keep) {
  GenRep out;
  out.dim = static_cast<long>(keep.size());
  auto cut = [&](const CMat& m) {
    CMat s(out.dim, out.dim);
    for (long i = 0; i < out.dim; ++i)
      for (long j = 0; j < out.dim; ++j) s(i, j) = m(keep[i], keep[j]);
    return s;
  };
  for (const CMat& m : rep.e) out.e.push_back(cut(m));
  for (const CMat& m : rep.f) out.f.push_back(cut(m));
  for (const CMat& m : rep.h) out.h.push_back(cut(m));
  out.highest = rep.highest;
  fill_weights_from_h(out);
  return out;
}

/// Half-spin module of so(2l): the even or odd fermion-parity sector of the
/// 2^l dimensional Fock space. last selects the sector containing the
/// all-occupied state (highest weight omega_l); the other sector carries
/// omega_{l-1}.
GenRep gens_spin_d(int l, bool last) {
  const long n = 1L << l;
  GenRep full;
  full.dim = n;
  std::vector<CMat> cr(l), an(l);
  for (int k = 0; k < l; ++k) {
    cr[k] = fermi_create(l, k);
    an[k] = cr[k].transpose();
  }
  for (int i = 0; i + 1 < l; ++i) {
    full.e.push_back(cr[i] * an[i + 1]);
    full.f.push_back(cr[i + 1] * an[i]);
    full.h.push_back(fermi_number(l, i) - fermi_number(l, i + 1));
  }
  full.e.push_back(cr[l - 2] * cr[l - 1]);
  full.f.push_back(an[l - 1] * an[l - 2]);
  full.h.push_back(fermi_number(l, l - 2) + fermi_number(l, l - 1) - CMat::Identity(n, n));
  full.highest = basis_weight(l, last ? l - 1 : l - 2);
  const int parity = (last ? l : l - 1) & 1;
  std::vector<long> keep;
  for (long b = 0; b < n; ++b)
    if ((std::popcount(static_cast<unsigned long>(b)) & 1) == parity) keep.push_back(b);
  return restrict_rows(full, keep);
}

GenRep engine_natural(const LieType& t) {
  switch (t.family) {
    case Family::A: return gens_type_a(t.rank);
    case Family::B: return gens_type_b(t.rank);
    case Family::C: return gens_type_c(t.rank);
    case Family::D: return gens_type_d(t.rank);
    case Family::G: return gens_g2();
    default: throw Unsupported("matrix engine supports families A, B, C, D and G2");
  }
}

double trace_kappa(const LieType& t) {
  switch (t.family) {
    case Family::A:
    case Family::G: return 1.0;
    case Family::B:
    case Family::C:
    case Family::D: return 0.25;
    default: throw Unsupported("matrix engine supports families A, B, C, D and G2");
  }
}

// ---------------------------------------------------------------------------
// Abstract basis recipe and dual coefficients (cached per type)
// ---------------------------------------------------------------------------

/// Rep-independent description of the ordered Lie algebra basis
/// h_1..h_l, x_alpha (positive roots by height then lex), y_alpha: every
/// root element is a fixed bracket word in the generators, so applying the
/// recipe to any module of the type yields images of the same abstract
/// elements. The dual coefficients are computed once from the natural module
/// and the normalized trace form and shared by all modules of the type.
struct TypeRecipe {
  int rank = 0;
  long dim_g = 0;
  std::vector<std::string> labels;
  /// Per positive root: x = e_j (step_prev < 0) or x = [e_j, x_{step_prev}].
  std::vector<int> step_gen;
  std::vector<int> step_prev;
  Eigen::MatrixXd dual_coeffs;
};

std::vector<CMat> materialize_images(const TypeRecipe& rec, const GenRep& rep) {
  const std::size_t np = rec.step_gen.size();
  std::vector<CMat> out;
  out.reserve(rec.rank + 2 * np);
  for (const CMat& m : rep.h) out.push_back(m);
  std::vector<CMat> xs(np), ys(np);
  for (std::size_t r = 0; r < np; ++r) {
    const int j = rec.step_gen[r];
    const int prev = rec.step_prev[r];
    xs[r] = prev < 0 ? rep.e[j] : bracket_mm(rep.e[j], xs[prev]);
    ys[r] = prev < 0 ? rep.f[j] : bracket_mm(rep.f[j], ys[prev]);
  }
  for (std::size_t r = 0; r < np; ++r) out.push_back(xs[r]);
  for (std::size_t r = 0; r < np; ++r) out.push_back(ys[r]);
  return out;
}

std::string root_label(char kind, const IWeight& coords) {
  std::ostringstream os;
  os << kind << '[';
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ',';
    os << coords[i];
  }
  os << ']';
  return os.str();
}

TypeRecipe build_recipe(const RootSystemData& rs) {
  const LieType t = rs.type;
  if (t.family == Family::E) throw Unsupported("matrix engine supports families A, B, C, D and G2");
  const int l = t.rank;
  TypeRecipe rec;
  rec.rank = l;
  const std::size_t np = rs.positive_roots.size();
  rec.dim_g = static_cast<long>(l + 2 * np);

  std::vector<IWeight> roots(np);
  std::map<IWeight, int> root_index;
  for (std::size_t r = 0; r < np; ++r) {
    IWeight c(l);
    for (int j = 0; j < l; ++j) c[j] = rat_to_long(rs.positive_roots[r][j]);
    roots[r] = c;
    root_index[c] = static_cast<int>(r);
  }
  rec.step_gen.resize(np);
  rec.step_prev.resize(np);
  for (std::size_t r = 0; r < np; ++r) {
    long ht = 0;
    for (long c : roots[r]) ht += c;
    if (ht == 1) {
      for (int j = 0; j < l; ++j)
        if (roots[r][j] == 1) rec.step_gen[r] = j;
      rec.step_prev[r] = -1;
      continue;
    }
    bool found = false;
    for (int j = 0; j < l && !found; ++j) {
      if (roots[r][j] == 0) continue;
      IWeight c = roots[r];
      c[j] -= 1;
      auto it = root_index.find(c);
      if (it != root_index.end()) {
        rec.step_gen[r] = j;
        rec.step_prev[r] = it->second;
        found = true;
      }
    }
    if (!found) throw InternalError("positive root has no simple predecessor");
  }

  for (int j = 1; j <= l; ++j) rec.labels.push_back("h" + std::to_string(j));
  for (std::size_t r = 0; r < np; ++r) rec.labels.push_back(root_label('x', roots[r]));
  for (std::size_t r = 0; r < np; ++r) rec.labels.push_back(root_label('y', roots[r]));

  const GenRep nat = engine_natural(t);
  const std::vector<CMat> imgs = materialize_images(rec, nat);
  const double kappa = trace_kappa(t);
  Eigen::MatrixXd gram(rec.dim_g, rec.dim_g);
  for (long a = 0; a < rec.dim_g; ++a)
    for (long b = a; b < rec.dim_g; ++b) {
      Cplx tr = trace_prod(imgs[a], imgs[b]);
      if (std::abs(tr.imag()) > 1e-9) throw InternalError("trace form has an imaginary part");
      gram(a, b) = gram(b, a) = kappa * tr.real();
    }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
  if (!lu.isInvertible()) throw InternalError("trace form is numerically singular");
  rec.dual_coeffs = lu.inverse();
  double dev = (gram * rec.dual_coeffs - Eigen::MatrixXd::Identity(rec.dim_g, rec.dim_g))
                   .cwiseAbs()
                   .maxCoeff();
  if (dev > 1e-9) throw InternalError("trace form inversion failed");
  return rec;
}

const TypeRecipe& type_recipe(const RootSystemData& rs) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, TypeRecipe> cache;
  const std::pair<int, int> key{static_cast<int>(rs.type.family), rs.type.rank};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  TypeRecipe rec = build_recipe(rs);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(rec)).first->second;
}

// ---------------------------------------------------------------------------
// Tensor-product step
// ---------------------------------------------------------------------------

/// Applies a (x) 1 + 1 (x) b to each column of cols; composite index
/// p * df + q with the first factor major. Each column is reshaped to a
/// dw x df matrix V and mapped to a V + V b^T.
CMat pair_apply(const CMat& a, const CMat& b, const CMat& cols, long dw, long df) {
  CMat out(dw * df, cols.cols());
  const CMat bt = b.transpose();
  for (long c = 0; c < cols.cols(); ++c) {
    Eigen::Map<const RowMat> vm(cols.col(c).data(), dw, df);
    Eigen::Map<RowMat> om(out.col(c).data(), dw, df);
    om = a * vm + vm * bt;
  }
  return out;
}

Eigen::VectorXcd pair_apply_vec(const CMat& a, const CMat& b, const Eigen::VectorXcd& v, long dw,
                                long df) {
  Eigen::VectorXcd out(dw * df);
  Eigen::Map<const RowMat> vm(v.data(), dw, df);
  Eigen::Map<RowMat> om(out.data(), dw, df);
  om = a * vm + vm * b.transpose();
  return out;
}

/// Extracts the irreducible component of highest weight target from the
/// product of w and fct. The target weight space must contain exactly one
/// highest vector up to scale; the component basis is generated from it by
/// the lowering operators in ascending generator order (deterministic), with
/// two rounds of Gram-Schmidt inside each weight bucket.
GenRep extract_component(const RootSystemData& rs, const GenRep& w, const GenRep& fct,
                         const Weight& target) {
  const int l = rs.type.rank;
  const long dw = w.dim, df = fct.dim, D = dw * df;

  std::map<IWeight, std::vector<long>> bucket;
  for (long p = 0; p < dw; ++p)
    for (long q = 0; q < df; ++q) {
      IWeight cw(l);
      for (int j = 0; j < l; ++j) cw[j] = w.wts[p][j] + fct.wts[q][j];
      bucket[cw].push_back(p * df + q);
    }
  const IWeight tgt = iweight_of(target);
  auto cand_it = bucket.find(tgt);
  if (cand_it == bucket.end()) throw InternalError("target weight absent from the product");
  const std::vector<long>& cand = cand_it->second;
  const long m = static_cast<long>(cand.size());

  CMat cols = CMat::Zero(D, m);
  for (long c = 0; c < m; ++c) cols(cand[c], c) = 1.0;
  CMat stacked(l * D, m);
  for (int i = 0; i < l; ++i)
    stacked.middleRows(static_cast<long>(i) * D, D) = pair_apply(w.e[i], fct.e[i], cols, dw, df);
  Eigen::JacobiSVD<CMat> svd(stacked, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cut = 1e-9 * std::max(sv.size() ? sv(0) : 0.0, 1.0);
  long nullity = 0;
  for (long i = 0; i < sv.size(); ++i)
    if (sv(i) < cut) ++nullity;
  if (nullity != 1) throw InternalError("component multiplicity in the product is not one");
  Eigen::VectorXcd v0c = svd.matrixV().col(m - 1);
  long best = 0;
  for (long i = 1; i < m; ++i)
    if (std::abs(v0c(i)) > std::abs(v0c(best))) best = i;
  v0c *= std::conj(v0c(best)) / std::abs(v0c(best));
  v0c /= v0c.norm();
  Eigen::VectorXcd v0 = Eigen::VectorXcd::Zero(D);
  for (long c = 0; c < m; ++c) v0(cand[c]) = v0c(c);

  std::vector<IWeight> alpha(l, IWeight(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) alpha[i][j] = rat_to_long(rs.cartan[i][j]);

  std::vector<Eigen::VectorXcd> basis;
  std::vector<IWeight> wts;
  std::map<IWeight, std::vector<long>> members;
  basis.push_back(v0);
  wts.push_back(tgt);
  members[tgt].push_back(0);
  for (std::size_t head = 0; head < basis.size(); ++head) {
    const Eigen::VectorXcd v = basis[head];
    const IWeight iw = wts[head];
    for (int i = 0; i < l; ++i) {
      Eigen::VectorXcd u = pair_apply_vec(w.f[i], fct.f[i], v, dw, df);
      const double nrm = u.norm();
      if (nrm <= 1e-9) continue;
      const IWeight niw = iweight_sub(iw, alpha[i]);
      std::vector<long>& mem = members[niw];
      for (int pass = 0; pass < 2; ++pass)
        for (long idx : mem) u -= basis[idx].dot(u) * basis[idx];
      const double res = u.norm();
      if (res > 1e-8 * nrm) {
        u /= res;
        mem.push_back(static_cast<long>(basis.size()));
        basis.push_back(std::move(u));
        wts.push_back(niw);
      }
    }
  }
  const Int expect = weyl_dimension(rs, target);
  if (expect != static_cast<long>(basis.size()))
    throw InternalError("component closure has the wrong dimension");

  const long d = static_cast<long>(basis.size());
  CMat u_mat(D, d);
  for (long c = 0; c < d; ++c) u_mat.col(c) = basis[c];
  GenRep out;
  out.dim = d;
  out.wts = std::move(wts);
  out.highest = target;
  const CMat u_adj = u_mat.adjoint();
  for (int i = 0; i < l; ++i) {
    out.e.push_back(u_adj * pair_apply(w.e[i], fct.e[i], u_mat, dw, df));
    out.f.push_back(u_adj * pair_apply(w.f[i], fct.f[i], u_mat, dw, df));
    CMat hm = CMat::Zero(d, d);
    for (long c = 0; c < d; ++c) hm(c, c) = static_cast<double>(out.wts[c][i]);
    out.h.push_back(hm);
  }
  return out;
}

GenRep trivial_rep(int l) {
  GenRep rep;
  rep.dim = 1;
  for (int i = 0; i < l; ++i) {
    rep.e.push_back(CMat::Zero(1, 1));
    rep.f.push_back(CMat::Zero(1, 1));
    rep.h.push_back(CMat::Zero(1, 1));
  }
  rep.wts.assign(1, IWeight(l, 0));
  rep.highest = Weight(l);
  return rep;
}

const GenRep& fund_rep(const RootSystemData& rs, int k, long cap);

GenRep build_fund(const RootSystemData& rs, int k, long cap) {
  const LieType t = rs.type;
  const int l = t.rank;
  const Weight omega = basis_weight(l, k - 1);
  if (weyl_dimension(rs, omega) > cap)
    throw CapExceeded("fundamental module dimension exceeds the cap");
  switch (t.family) {
    case Family::A:
      if (k == 1) return engine_natural(t);
      break;
    case Family::B:
      if (k == l) return gens_spin_b(l);
      if (k == 1) return engine_natural(t);
      break;
    case Family::C:
      if (k == 1) return engine_natural(t);
      break;
    case Family::D:
      if (k == l) return gens_spin_d(l, true);
      if (k == l - 1) return gens_spin_d(l, false);
      if (k == 1) return engine_natural(t);
      break;
    case Family::G:
      if (k == 1) return engine_natural(t);
      return extract_component(rs, fund_rep(rs, 1, cap), fund_rep(rs, 1, cap), omega);
    default:
      throw Unsupported("matrix engine supports families A, B, C, D and G2");
  }
  return extract_component(rs, fund_rep(rs, k - 1, cap), fund_rep(rs, 1, cap), omega);
}

const GenRep& fund_rep(const RootSystemData& rs, int k, long cap) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, GenRep> cache;
  const std::tuple<int, int, int> key{static_cast<int>(rs.type.family), rs.type.rank, k};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) {
      if (it->second.dim > cap) throw CapExceeded("fundamental module dimension exceeds the cap");
      return it->second;
    }
  }
  GenRep rep = build_fund(rs, k, cap);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(rep)).first->second;
}

}  // namespace

CMat MatrixRep::dual_image(std::size_t a) const {
  CMat out = CMat::Zero(dim, dim);
  for (std::size_t b = 0; b < images.size(); ++b) {
    const double c = dual_coeffs(static_cast<long>(a), static_cast<long>(b));
    if (std::abs(c) > 1e-14) out += c * images[b];
  }
  return out;
}

CMat MatrixRep::casimir_matrix() const {
  CMat out = CMat::Zero(dim, dim);
  for (std::size_t a = 0; a < images.size(); ++a) out += images[a] * dual_image(a);
  return out;
}

MatrixRep natural_rep(LieType t) {
  if (!lie_type_valid(t)) throw Unsupported("invalid type");
  const int l = t.rank;
  std::vector<std::string> labels;
  std::vector<CMat> images;
  // Published dual assignment per basis element, as (index, coefficient)
  // pairs; rows flagged in skip_check carry no published closed form that
  // survives the trace-form cross-check and keep the Gram-inversion values.
  std::vector<std::vector<std::pair<long, double>>> dual_rows;
  std::vector<bool> skip_check;

  if (t.family == Family::A) {
    const long n = l + 1;
    std::map<std::pair<long, long>, long> idx;
    for (long i = 1; i <= n; ++i)
      for (long j = 1; j <= n; ++j) {
        if (i == j) continue;
        idx[{i, j}] = static_cast<long>(images.size());
        labels.push_back("X(" + std::to_string(i) + "," + std::to_string(j) + ")");
        images.push_back(unit_entry(n, i - 1, j - 1));
      }
    for (long k = 1; k <= l; ++k) {
      idx[{k, k}] = static_cast<long>(images.size());
      labels.push_back("X(" + std::to_string(k) + "," + std::to_string(k) + ")");
      images.push_back(unit_entry(n, k - 1, k - 1) -
                       CMat::Identity(n, n) / static_cast<double>(n));
    }
    dual_rows.resize(images.size());
    skip_check.assign(images.size(), false);
    for (long i = 1; i <= n; ++i)
      for (long j = 1; j <= n; ++j)
        if (i != j) dual_rows[idx[{i, j}]] = {{idx[{j, i}], 1.0}};
    for (long k = 1; k <= l; ++k)
      for (long m2 = 1; m2 <= l; ++m2)
        dual_rows[idx[{k, k}]].push_back({idx[{m2, m2}], m2 == k ? 2.0 : 1.0});
  } else if (t.family == Family::B || t.family == Family::D) {
    const long n = t.family == Family::B ? 2 * l + 1 : 2 * l;
    for (long i = 1; i <= n; ++i)
      for (long j = i + 1; j <= n; ++j) {
        labels.push_back("X(" + std::to_string(i) + "," + std::to_string(j) + ")");
        images.push_back(unit_entry(n, i - 1, j - 1) - unit_entry(n, j - 1, i - 1));
      }
    dual_rows.resize(images.size());
    skip_check.assign(images.size(), false);
    for (std::size_t a = 0; a < images.size(); ++a)
      dual_rows[a] = {{static_cast<long>(a), -0.5}};
  } else if (t.family == Family::C) {
    const long n = 2 * l;
    auto pos = [l](long i) -> long { return i > 0 ? i - 1 : l - i - 1; };
    auto ximg = [&](long i, long j) {
      const double sgn = ((i > 0) == (j > 0)) ? 1.0 : -1.0;
      return CMat(unit_entry(n, pos(i), pos(j)) - sgn * unit_entry(n, pos(-j), pos(-i)));
    };
    std::map<std::pair<long, long>, long> idx;
    auto add = [&](long i, long j) {
      idx[{i, j}] = static_cast<long>(images.size());
      labels.push_back("X(" + std::to_string(i) + "," + std::to_string(j) + ")");
      images.push_back(ximg(i, j));
    };
    for (long k = 1; k <= l; ++k)
      for (long m2 = 1; m2 <= l; ++m2) add(k, m2);
    for (long i = 1; i <= l; ++i)
      for (long j = i; j <= l; ++j) add(i, -j);
    for (long i = 1; i <= l; ++i)
      for (long j = i; j <= l; ++j) add(-i, j);
    dual_rows.resize(images.size());
    skip_check.assign(images.size(), false);
    for (long k = 1; k <= l; ++k)
      for (long m2 = 1; m2 <= l; ++m2) dual_rows[idx[{k, m2}]] = {{idx[{m2, k}], 0.5}};
    for (long i = 1; i <= l; ++i)
      for (long j = i; j <= l; ++j) {
        const double c = i == j ? 0.25 : 0.5;
        dual_rows[idx[{i, -j}]] = {{idx[{-i, j}], c}};
        dual_rows[idx[{-i, j}]] = {{idx[{i, -j}], c}};
      }
  } else if (t.family == Family::G) {
    const long n = 7;
    auto eu = [n](long i, long j) { return unit_entry(n, i, j); };
    const double r2 = std::sqrt(2.0);
    const Cplx cneg = 1.0 / std::sqrt(Cplx(-6.0, 0.0));
    CMat h1 = CMat::Zero(n, n), h2 = CMat::Zero(n, n);
    const double d1[7] = {0, 0, 0.5, -0.5, 0, -0.5, 0.5};
    const double d2[7] = {0, 0.5, 0, -0.5, -0.5, 0, 0.5};
    for (long i = 0; i < n; ++i) {
      h1(i, i) = d1[i];
      h2(i, i) = d2[i];
    }
    CMat gp1 = cneg * (r2 * (eu(0, 1) - eu(4, 0)) - (eu(2, 6) - eu(3, 5)));
    CMat gp2 = cneg * (r2 * (eu(0, 2) - eu(5, 0)) - (eu(1, 6) - eu(3, 4)));
    CMat gp3 = cneg * (r2 * (eu(0, 3) - eu(6, 0)) - (eu(1, 5) - eu(2, 4)));
    CMat g12 = (eu(1, 2) - eu(5, 4)) / r2;
    CMat g13 = (eu(1, 3) - eu(6, 4)) / r2;
    CMat g23 = (eu(2, 3) - eu(6, 5)) / r2;
    labels = {"h1",     "h2",     "G(+1)",  "G(+2)",  "G(+3)",  "G(1-2)", "G(1-3)",
              "G(2-3)", "G(-1)",  "G(-2)",  "G(-3)",  "G(2-1)", "G(3-1)", "G(3-2)"};
    images = {h1,
              h2,
              gp1,
              gp2,
              gp3,
              g12,
              g13,
              g23,
              CMat(-gp1.transpose()),
              CMat(-gp2.transpose()),
              CMat(-gp3.transpose()),
              CMat(g12.transpose()),
              CMat(g13.transpose()),
              CMat(g23.transpose())};
    dual_rows.resize(images.size());
    skip_check.assign(images.size(), false);
    skip_check[0] = skip_check[1] = true;
    for (long a = 2; a <= 7; ++a) {
      dual_rows[a] = {{a + 6, 1.0}};
      dual_rows[a + 6] = {{a, 1.0}};
    }
  } else {
    throw Unsupported("no transcribed natural module for E types");
  }

  const long g = static_cast<long>(images.size());
  Eigen::MatrixXd gram(g, g);
  for (long a = 0; a < g; ++a)
    for (long b = a; b < g; ++b) {
      Cplx tr = trace_prod(images[a], images[b]);
      if (std::abs(tr.imag()) > 1e-9) throw InternalError("trace form has an imaginary part");
      gram(a, b) = gram(b, a) = tr.real();
    }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
  if (!lu.isInvertible()) throw InternalError("trace form is numerically singular");
  Eigen::MatrixXd dual = lu.inverse();
  for (long a = 0; a < g; ++a) {
    if (skip_check[a]) continue;
    Eigen::VectorXd row = Eigen::VectorXd::Zero(g);
    for (const auto& [b, c] : dual_rows[a]) row(b) = c;
    if ((dual.row(a).transpose() - row).cwiseAbs().maxCoeff() > 1e-10)
      throw InternalError("published dual assignment does not match the trace form");
  }

  MatrixRep out;
  out.t = t;
  out.highest = basis_weight(l, 0);
  out.dim = images[0].rows();
  out.basis_labels = std::move(labels);
  out.images = std::move(images);
  out.dual_coeffs = std::move(dual);
  Rat kappa = rat(1);
  if (t.family == Family::B || t.family == Family::C || t.family == Family::D) kappa = rat(1, 4);
  out.eigen_scale = kappa;
  return out;
}

MatrixRep build_irrep(const RootSystemData& rs, const Weight& nu, long cap) {
  const int l = rs.type.rank;
  if (nu.rank() != l) throw Unsupported("weight rank does not match the type");
  if (!nu.is_integral() || !nu.is_dominant())
    throw Unsupported("highest weight must be dominant integral");
  if (rs.type.family == Family::E)
    throw Unsupported("matrix engine supports families A, B, C, D and G2");
  const Int dim = weyl_dimension(rs, nu);
  if (dim > cap)
    throw CapExceeded("module dimension " + dim.get_str() + " exceeds the cap " +
                      std::to_string(cap));
  const TypeRecipe& rec = type_recipe(rs);

  GenRep cur = trivial_rep(l);
  for (int k = 1; k <= l; ++k) {
    const long mult = rat_to_long(nu.f[k - 1]);
    for (long c = 0; c < mult; ++c)
      cur = extract_component(rs, cur, fund_rep(rs, k, cap), cur.highest + basis_weight(l, k - 1));
  }

  for (int i = 0; i < l; ++i)
    if (cur.e[i].col(0).norm() > 1e-9) throw InternalError("highest vector is not annihilated");
  if (cur.dim <= 200)
    for (int i = 0; i < l; ++i) {
      const double dev = (bracket_mm(cur.e[i], cur.f[i]) - cur.h[i]).cwiseAbs().maxCoeff();
      if (dev > 1e-8) throw InternalError("generator relations fail in the constructed module");
    }

  MatrixRep out;
  out.t = rs.type;
  out.highest = nu;
  out.dim = cur.dim;
  out.basis_labels = rec.labels;
  out.images = materialize_images(rec, cur);
  out.dual_coeffs = rec.dual_coeffs;
  out.eigen_scale = rat(1);

  const Rat chi = casimir_char(rs, nu);
  const double chid = rat_to_double(chi);
  const double tol = 1e-9 * (1.0 + std::abs(chid));
  Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(out.dim);
  for (long a = 0; a < rec.dim_g; ++a) {
    Eigen::VectorXcd dcol = Eigen::VectorXcd::Zero(out.dim);
    for (long b = 0; b < rec.dim_g; ++b) {
      const double c = out.dual_coeffs(a, b);
      if (std::abs(c) > 1e-14) dcol += c * out.images[b].col(0);
    }
    acc += out.images[a] * dcol;
  }
  acc(0) -= chid;
  if (acc.norm() > tol) throw InternalError("Casimir eigenvalue check failed on the highest vector");
  if (out.dim <= 150) {
    CMat cas = out.casimir_matrix();
    cas -= chid * CMat::Identity(out.dim, out.dim);
    if (cas.cwiseAbs().maxCoeff() > tol) throw InternalError("Casimir matrix is not scalar");
  }
  return out;
}

MTypeMatrix mtype_matrix(const RootSystemData& rs, const MatrixRep& rep_l,
                         const MatrixRep& rep_n) {
  if (!(rep_l.t == rs.type) || !(rep_n.t == rs.type))
    throw Unsupported("modules do not match the root system type");
  if (rep_l.basis_labels != rep_n.basis_labels)
    throw Unsupported("modules are realized over different bases");
  if (rep_l.eigen_scale != rep_n.eigen_scale)
    throw Unsupported("modules use different trace normalizations");

  MTypeMatrix out;
  out.t = rs.type;
  out.lambda = rep_l.highest;
  out.nu = rep_n.highest;
  const long big = rep_l.dim * rep_n.dim;
  out.matrix = CMat::Zero(big, big);
  for (std::size_t a = 0; a < rep_l.images.size(); ++a)
    out.matrix += kron_mm(rep_l.images[a], rep_n.dual_image(a));

  const Rat chi_l = casimir_char(rs, rep_l.highest);
  const Rat chi_n = casimir_char(rs, rep_n.highest);
  const Decomposition dec = decompose_klimyk(rs, rep_l.highest, rep_n.highest);
  Int total = 0;
  for (const auto& [sigma, mult] : dec.summands) {
    MTypeSummand s;
    s.component = sigma;
    s.shift = sigma - rep_n.highest;
    s.value = rep_l.eigen_scale * (casimir_char(rs, sigma) - chi_n - chi_l) / 2;
    s.mult = mult;
    const Int di = weyl_dimension(rs, sigma);
    s.dim = int_to_long(di);
    total += di * mult;
    out.summands.push_back(std::move(s));
  }
  if (total != big) throw InternalError("decomposition does not fill the product dimension");
  std::sort(out.summands.begin(), out.summands.end(), [](const MTypeSummand& a, const MTypeSummand& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.component < b.component;
  });
  for (const MTypeSummand& s : out.summands) {
    if (!out.clusters.empty() && out.clusters.back().first == s.value)
      out.clusters.back().second += s.mult * s.dim;
    else
      out.clusters.push_back({s.value, s.mult * s.dim});
  }
  out.exact_merges = static_cast<long>(out.summands.size()) - static_cast<long>(out.clusters.size());
  return out;
}

SpectrumReport spectrum_check(const MTypeMatrix& m) {
  SpectrumReport rep;
  Eigen::ComplexEigenSolver<CMat> es(m.matrix, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) throw InternalError("eigenvalue computation failed");
  const auto& eig = es.eigenvalues();

  const std::size_t nc = m.clusters.size();
  std::vector<double> vals(nc);
  for (std::size_t i = 0; i < nc; ++i) vals[i] = rat_to_double(m.clusters[i].first);
  // Merge exact clusters whose double values are closer than 1e-6; the
  // numeric spectrum cannot tell them apart reliably at tolerance 1e-7.
  std::vector<std::size_t> group_of(nc, 0);
  std::vector<long> group_dim;
  for (std::size_t i = 0; i < nc; ++i) {
    if (i > 0 && vals[i] - vals[i - 1] < 1e-6) {
      rep.ambiguous = true;
      group_of[i] = group_of[i - 1];
      group_dim.back() += m.clusters[i].second;
    } else {
      group_of[i] = group_dim.size();
      group_dim.push_back(m.clusters[i].second);
    }
  }

  std::vector<long> counts(group_dim.size(), 0);
  for (long k = 0; k < eig.size(); ++k) {
    rep.max_imag = std::max(rep.max_imag, std::abs(eig(k).imag()));
    std::size_t best = 0;
    double bd = std::abs(eig(k) - Cplx(vals[0], 0.0));
    for (std::size_t i = 1; i < nc; ++i) {
      const double d = std::abs(eig(k) - Cplx(vals[i], 0.0));
      if (d < bd) {
        bd = d;
        best = i;
      }
    }
    rep.max_dev = std::max(rep.max_dev, bd);
    counts[group_of[best]] += 1;
  }
  rep.matched = counts == group_dim && rep.max_dev <= 1e-7;
  rep.distinct = m.exact_merges == 0;
  std::size_t i = 0;
  while (i < m.summands.size()) {
    std::size_t j = i;
    while (j + 1 < m.summands.size() && m.summands[j + 1].value == m.summands[i].value) ++j;
    if (j > i) rep.collision_clusters += 1;
    i = j + 1;
  }
  return rep;
}

std::vector<CMat> projectors(const MTypeMatrix& m) {
  const std::size_t s = m.summands.size();
  for (std::size_t i = 0; i + 1 < s; ++i)
    if (m.summands[i].value == m.summands[i + 1].value)
      throw Unsupported("projectors need pairwise distinct eigenvalue predictions");
  const long big = m.matrix.rows();
  const CMat ident = CMat::Identity(big, big);
  std::vector<double> vals(s);
  for (std::size_t i = 0; i < s; ++i) vals[i] = rat_to_double(m.summands[i].value);
  std::vector<CMat> out;
  out.reserve(s);
  for (std::size_t i = 0; i < s; ++i) {
    CMat p = ident;
    for (std::size_t j = 0; j < s; ++j) {
      if (j == i) continue;
      p = (m.matrix - vals[j] * ident) * p / (vals[i] - vals[j]);
    }
    out.push_back(std::move(p));
  }
  return out;
}

int min_poly_degree(const MTypeMatrix& m, double tol) {
  const long big = m.matrix.rows();
  const double scale = std::max(1.0, m.matrix.norm());
  const CMat a = m.matrix / scale;
  std::vector<Eigen::VectorXcd> basis;
  CMat pw = CMat::Identity(big, big);
  Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(pw.data(), pw.size());
  basis.push_back(v / v.norm());
  for (long k = 1; k <= big; ++k) {
    pw = a * pw;
    v = Eigen::Map<const Eigen::VectorXcd>(pw.data(), pw.size());
    const double nv = v.norm();
    if (nv < 1e-300) return static_cast<int>(k);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) v -= b.dot(v) * b;
    const double rel = v.norm() / nv;
    // Residuals below tol mean dependence; the band up to 50x tol is treated
    // the same way so borderline rounding noise cannot inflate the degree.
    if (rel < 50.0 * tol) return static_cast<int>(k);
    basis.push_back(v / v.norm());
  }
  return static_cast<int>(big);
}

}  // namespace smflab
