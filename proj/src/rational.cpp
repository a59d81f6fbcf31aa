#include "smflab/rational.hpp"

#include <stdexcept>

namespace smflab {

Rat rat(long num, long den) {
  if (den == 0) throw std::domain_error("rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

bool rat_is_integer(const Rat& a) { return a.get_den() == 1; }

long rat_to_long(const Rat& a) {
  if (!rat_is_integer(a)) throw std::overflow_error("rat_to_long: not an integer");
  if (!a.get_num().fits_slong_p()) throw std::overflow_error("rat_to_long: out of range");
  return a.get_num().get_si();
}

double rat_to_double(const Rat& a) { return a.get_d(); }

std::string rat_to_string(const Rat& a) {
  if (rat_is_integer(a)) return a.get_num().get_str();
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

Rat rat_parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("rat_parse: empty string");
  Rat q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("rat_parse: bad rational '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("rat_parse: zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

RatMat mat_identity(int n) {
  RatMat m(n, RatVec(n, Rat(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMat out(n, RatVec(m, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

RatVec mat_vec(const RatMat& a, const RatVec& v) {
  RatVec out(a.size(), Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

RatMat mat_transpose(const RatMat& a) {
  if (a.empty()) return a;
  RatMat out(a[0].size(), RatVec(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
  return out;
}

RatMat mat_inverse(const RatMat& a) {
  const int n = static_cast<int>(a.size());
  RatMat work = a;
  RatMat inv = mat_identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (work[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::domain_error("mat_inverse: singular matrix");
    std::swap(work[pivot], work[col]);
    std::swap(inv[pivot], inv[col]);
    const Rat p = work[col][col];
    for (int j = 0; j < n; ++j) {
      work[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || work[r][col] == 0) continue;
      const Rat f = work[r][col];
      for (int j = 0; j < n; ++j) {
        work[r][j] -= f * work[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace smflab
