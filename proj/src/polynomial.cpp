#include "artin/polynomial.hpp"

#include <sstream>

namespace artin {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::q_integer(int k) {
  return IntPolynomial(std::vector<BigInt>(static_cast<size_t>(k), BigInt(1)));
}

BigInt IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

BigInt IntPolynomial::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(
    const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) return std::nullopt;
  if (num.is_zero()) return IntPolynomial();
  if (num.degree() < den.degree()) return std::nullopt;

  std::vector<BigInt> rem = num.coeffs_;
  std::vector<BigInt> quot(num.coeffs_.size() - den.coeffs_.size() + 1,
                           BigInt(0));
  const BigInt& lead = den.coeffs_.back();
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    BigInt top = rem[k + den.degree()];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    BigInt q = top / lead;
    quot[k] = q;
    for (size_t i = 0; i < den.coeffs_.size(); ++i)
      rem[k + i] -= q * den.coeffs_[i];
  }
  for (const BigInt& r : rem)
    if (r != 0) return std::nullopt;
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      out << a.str();
    } else {
      if (a != 1) out << a.str() << "*";
      out << "q";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace artin
