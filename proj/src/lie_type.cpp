#include "smflab/lie_type.hpp"

#include <cctype>

namespace smflab {

bool lie_type_valid(const LieType& t) {
  switch (t.family) {
    case Family::A: return t.rank >= 1;
    case Family::B: return t.rank >= 2;
    case Family::C: return t.rank >= 3;
    case Family::D: return t.rank >= 4;
    case Family::E: return t.rank == 6 || t.rank == 7;
    case Family::G: return t.rank == 2;
  }
  return false;
}

std::string to_string(const LieType& t) {
  static const char* names = "ABCDEG";
  return std::string(1, names[static_cast<int>(t.family)]) + std::to_string(t.rank);
}

std::optional<LieType> parse_lie_type(const std::string& name) {
  if (name.size() < 2) return std::nullopt;
  Family fam;
  switch (std::toupper(static_cast<unsigned char>(name[0]))) {
    case 'A': fam = Family::A; break;
    case 'B': fam = Family::B; break;
    case 'C': fam = Family::C; break;
    case 'D': fam = Family::D; break;
    case 'E': fam = Family::E; break;
    case 'G': fam = Family::G; break;
    default: return std::nullopt;
  }
  int rank = 0;
  for (size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    rank = rank * 10 + (name[i] - '0');
    if (rank > 64) return std::nullopt;
  }
  LieType t{fam, rank};
  if (!lie_type_valid(t)) return std::nullopt;
  return t;
}

}  // namespace smflab
