#include "smflab/weight.hpp"

#include <stdexcept>

namespace smflab {

bool Weight::operator<(const Weight& o) const {
  if (f.size() != o.f.size()) return f.size() < o.f.size();
  for (size_t i = 0; i < f.size(); ++i) {
    const int c = cmp(f[i], o.f[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

Weight& Weight::operator+=(const Weight& o) {
  if (f.size() != o.f.size()) throw std::invalid_argument("Weight: rank mismatch");
  for (size_t i = 0; i < f.size(); ++i) f[i] += o.f[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (f.size() != o.f.size()) throw std::invalid_argument("Weight: rank mismatch");
  for (size_t i = 0; i < f.size(); ++i) f[i] -= o.f[i];
  return *this;
}

Weight operator*(const Rat& s, Weight w) {
  for (auto& c : w.f) c *= s;
  return w;
}

bool Weight::is_zero() const {
  for (const auto& c : f)
    if (c != 0) return false;
  return true;
}

bool Weight::is_integral() const {
  for (const auto& c : f)
    if (!rat_is_integer(c)) return false;
  return true;
}

bool Weight::is_dominant() const {
  for (const auto& c : f)
    if (c < 0) return false;
  return true;
}

std::string Weight::to_string() const {
  std::string out = "(";
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) out += ",";
    out += rat_to_string(f[i]);
  }
  return out + ")";
}

Weight basis_weight(int rank, int i, const Rat& c) {
  Weight w(rank);
  w.f.at(i) = c;
  return w;
}

}  // namespace smflab
