#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace smflab {

/// Exact rational scalar used throughout the library. All structural
/// decisions (equality of eigenvalue formulas, dominance, dimension counts)
/// are made on this type; floating point appears only in the matrix module
/// and never decides equality.
using Rat = mpq_class;
using Int = mpz_class;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

/// Canonicalized rational from a numerator/denominator pair.
Rat rat(long num, long den = 1);

bool rat_is_integer(const Rat& a);

/// Exact conversion to long; throws std::overflow_error if not an integer
/// or out of range.
long rat_to_long(const Rat& a);

double rat_to_double(const Rat& a);

/// Renders "p/q" in lowest terms, or "p" when the denominator is 1.
std::string rat_to_string(const Rat& a);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on bad input.
Rat rat_parse(const std::string& text);

RatMat mat_identity(int n);
RatMat mat_mul(const RatMat& a, const RatMat& b);
RatVec mat_vec(const RatMat& a, const RatVec& v);
RatMat mat_transpose(const RatMat& a);

/// Exact inverse by Gauss-Jordan elimination; throws std::domain_error on a
/// singular input.
RatMat mat_inverse(const RatMat& a);

}  // namespace smflab
