#include "artin/types.hpp"

#include <cctype>

#include "artin/error.hpp"

namespace artin {

CoxeterType CoxeterType::make(Family f, int rank) {
  auto require = [&](bool ok) {
    if (!ok)
      fail(Errc::unsupported_type,
           "bad rank " + std::to_string(rank) + " for family");
  };
  switch (f) {
    case Family::A: require(rank >= 1); break;
    case Family::B: require(rank >= 2); break;
    case Family::D: require(rank >= 4); break;
    case Family::E6: require(rank == 6); break;
    case Family::E7: require(rank == 7); break;
    case Family::E8: require(rank == 8); break;
    case Family::F4: require(rank == 4); break;
    case Family::H3: require(rank == 3); break;
    case Family::H4: require(rank == 4); break;
    case Family::I2:
      fail(Errc::unsupported_type, "use CoxeterType::i2(m)");
    case Family::AffA: require(rank >= 1); break;
    case Family::AffD: require(rank >= 4); break;
    case Family::AffE6: require(rank == 6); break;
    case Family::AffE7: require(rank == 7); break;
    case Family::AffE8: require(rank == 8); break;
    case Family::Unknown: break;
  }
  return CoxeterType{f, rank, std::nullopt};
}

CoxeterType CoxeterType::i2(long long m) {
  if (m < 3) fail(Errc::label_out_of_range, "I2 label " + std::to_string(m));
  if (m == 3) return make(Family::A, 2);
  if (m == 4) return make(Family::B, 2);
  return CoxeterType{Family::I2, 2, m};
}

bool CoxeterType::spherical() const {
  switch (family) {
    case Family::A:
    case Family::B:
    case Family::D:
    case Family::E6:
    case Family::E7:
    case Family::E8:
    case Family::F4:
    case Family::H3:
    case Family::H4:
    case Family::I2:
      return true;
    default:
      return false;
  }
}

bool CoxeterType::affine() const {
  switch (family) {
    case Family::AffA:
    case Family::AffD:
    case Family::AffE6:
    case Family::AffE7:
    case Family::AffE8:
      return true;
    default:
      return false;
  }
}

bool CoxeterType::affine_simply_laced() const {
  if (!affine()) return false;
  return !(family == Family::AffA && rank == 1);  // the inf edge
}

int CoxeterType::vertex_count() const {
  return affine() ? rank + 1 : rank;
}

std::string CoxeterType::str() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::H3: return "H3";
    case Family::H4: return "H4";
    case Family::I2: return "I2(" + std::to_string(*dihedral_label) + ")";
    case Family::AffA: return "~A" + std::to_string(rank);
    case Family::AffD: return "~D" + std::to_string(rank);
    case Family::AffE6: return "~E6";
    case Family::AffE7: return "~E7";
    case Family::AffE8: return "~E8";
    case Family::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::optional<CoxeterType> parse_type(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool affine = text.front() == '~';
  std::string_view rest = affine ? text.substr(1) : text;
  if (rest.empty()) return std::nullopt;
  char fam = rest.front();
  rest.remove_prefix(1);

  auto parse_int = [](std::string_view s) -> std::optional<long long> {
    if (s.empty()) return std::nullopt;
    long long v = 0;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      v = v * 10 + (c - '0');
      if (v > 1'000'000) return std::nullopt;
    }
    return v;
  };

  try {
    if (!affine && fam == 'I') {
      // I2(m)
      if (rest.size() < 4 || rest.substr(0, 2) != "2(" || rest.back() != ')')
        return std::nullopt;
      auto m = parse_int(rest.substr(2, rest.size() - 3));
      if (!m || *m < 3) return std::nullopt;
      return CoxeterType::i2(*m);
    }
    auto n = parse_int(rest);
    if (!n) return std::nullopt;
    int rank = static_cast<int>(*n);
    switch (fam) {
      case 'A': return CoxeterType::make(affine ? Family::AffA : Family::A, rank);
      case 'B': return affine ? std::nullopt
                              : std::optional(CoxeterType::make(Family::B, rank));
      case 'D': return CoxeterType::make(affine ? Family::AffD : Family::D, rank);
      case 'E':
        switch (rank) {
          case 6: return CoxeterType::make(affine ? Family::AffE6 : Family::E6, 6);
          case 7: return CoxeterType::make(affine ? Family::AffE7 : Family::E7, 7);
          case 8: return CoxeterType::make(affine ? Family::AffE8 : Family::E8, 8);
          default: return std::nullopt;
        }
      case 'F':
        return (affine || rank != 4)
                   ? std::nullopt
                   : std::optional(CoxeterType::make(Family::F4, 4));
      case 'H':
        if (affine) return std::nullopt;
        if (rank == 3) return CoxeterType::make(Family::H3, 3);
        if (rank == 4) return CoxeterType::make(Family::H4, 4);
        return std::nullopt;
      default:
        return std::nullopt;
    }
  } catch (const Error&) {
    return std::nullopt;  // rank constraint failed
  }
}

std::vector<CoxeterType> Decomposition::types() const {
  std::vector<CoxeterType> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(c.type);
  return out;
}

bool Decomposition::all_spherical() const {
  for (const auto& c : components)
    if (!c.type.spherical()) return false;
  return true;
}

}  // namespace artin
