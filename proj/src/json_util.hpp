#pragma once

#include <limits>
#include <nlohmann/json.hpp>

#include "artin/bigint.hpp"

namespace artin {

// Exact integers as JSON: a number when it fits int64, a decimal string
// otherwise.
inline nlohmann::json json_int(const BigInt& x) {
  static const BigInt lo = std::numeric_limits<long long>::min();
  static const BigInt hi = std::numeric_limits<long long>::max();
  if (x >= lo && x <= hi) return x.convert_to<long long>();
  return x.str();
}

}  // namespace artin
