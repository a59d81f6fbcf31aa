#pragma once

#include <stdexcept>
#include <string>

namespace smflab {

/// A computation was asked to exceed its configured size budget
/// (weight-system size, module dimension, search space). CLI exit code 3.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// The requested operation is outside the implemented range (for example a
/// closed-form rule applied to a weight it does not cover). CLI exit code 2.
class Unsupported : public std::invalid_argument {
 public:
  explicit Unsupported(const std::string& what) : std::invalid_argument(what) {}
};

/// An internal cross-check failed (negative multiplicity, dimension
/// mismatch, certificate that does not verify). Never expected on healthy
/// inputs; CLI exit code 1.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace smflab
