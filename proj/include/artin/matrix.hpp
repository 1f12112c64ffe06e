#pragma once

#include <vector>

#include "artin/bigint.hpp"

namespace artin {

/// Dense integer matrix, row-major. Zero-sized dimensions are valid.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), BigInt(0)) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  BigInt& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const BigInt& at(int r, int c) const {
    return a_[static_cast<size_t>(r) * cols_ + c];
  }

  bool is_zero() const {
    for (const BigInt& x : a_)
      if (x != 0) return false;
    return true;
  }

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);

  IntMatrix operator*(const IntMatrix& other) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> a_;
};

}  // namespace artin
