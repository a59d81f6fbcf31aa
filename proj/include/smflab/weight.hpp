#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "smflab/rational.hpp"

namespace smflab {

/// A weight in fundamental-weight coordinates: w = sum_i f[i] * omega_{i+1}.
/// Coordinates are exact rationals so Weyl-translated and half-integral
/// weights are representable; weights of finite-dimensional modules always
/// have integer coordinates.
struct Weight {
  RatVec f;

  Weight() = default;
  explicit Weight(int rank) : f(rank, Rat(0)) {}
  explicit Weight(RatVec coords) : f(std::move(coords)) {}
  Weight(std::initializer_list<long> coords) {
    f.reserve(coords.size());
    for (long c : coords) f.emplace_back(c);
  }

  int rank() const { return static_cast<int>(f.size()); }

  bool operator==(const Weight& o) const { return f == o.f; }
  /// Lexicographic order on coordinates; used for map keys and for
  /// deterministic output ordering.
  bool operator<(const Weight& o) const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rat& s, Weight w);

  bool is_zero() const;
  bool is_integral() const;
  /// All coordinates >= 0 (dominance relative to the fundamental chamber).
  bool is_dominant() const;

  /// Renders "(a,b,...)" with rational entries in lowest terms.
  std::string to_string() const;
};

/// Weight with a single nonzero coordinate c at position i (0-based).
Weight basis_weight(int rank, int i, const Rat& c = Rat(1));

}  // namespace smflab
