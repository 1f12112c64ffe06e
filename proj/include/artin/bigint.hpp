#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace artin {

// Exact integer used for polynomial coefficients, matrix entries and
// invariant factors. Nothing in the library depends on a rank bound.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

inline BigInt big_abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

}  // namespace artin
