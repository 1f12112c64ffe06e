#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artin/bigint.hpp"

namespace artin {

/// Dense integer polynomial in one variable q, lowest degree first.
/// Canonical form: no trailing zero coefficient; zero is the empty list.
class IntPolynomial {
 public:
  IntPolynomial() = default;  // zero
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial one() { return IntPolynomial({BigInt(1)}); }
  static IntPolynomial constant(BigInt c) { return IntPolynomial({std::move(c)}); }
  /// 1 + q + ... + q^{k-1} (the q-integer [k]).
  static IntPolynomial q_integer(int k);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int i) const;  // zero beyond the stored range

  BigInt eval(const BigInt& x) const;

  /// Exact quotient, or nullopt when division leaves a remainder.
  static std::optional<IntPolynomial> divide_exact(const IntPolynomial& num,
                                                   const IntPolynomial& den);

  std::string str() const;  // "1 + 2*q + q^3"

  friend IntPolynomial operator+(const IntPolynomial&, const IntPolynomial&);
  friend IntPolynomial operator-(const IntPolynomial&, const IntPolynomial&);
  friend IntPolynomial operator*(const IntPolynomial&, const IntPolynomial&);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
  void trim();
};

}  // namespace artin
