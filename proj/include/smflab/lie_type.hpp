#pragma once

#include <optional>
#include <string>

namespace smflab {

enum class Family { A, B, C, D, E, G };

/// A complex simple Lie algebra type. Supported range: A_l (l >= 1),
/// B_l (l >= 2), C_l (l >= 3), D_l (l >= 4), E_6, E_7, G_2.
struct LieType {
  Family family = Family::A;
  int rank = 1;

  bool operator==(const LieType&) const = default;
};

bool lie_type_valid(const LieType& t);

std::string to_string(const LieType& t);

/// Accepts compact names such as "A3", "b2", "E6", "G2".
std::optional<LieType> parse_lie_type(const std::string& name);

}  // namespace smflab
