#include "artin/snf.hpp"

#include <cassert>

namespace artin {

void IntMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  assert(cols_ == other.rows_);
  IntMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const BigInt& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < other.cols_; ++j) {
        const BigInt& bkj = other.at(k, j);
        if (bkj != 0) out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

namespace {

// Row/column reduction to diagonal form with divisibility chain. The pivot
// is always a minimal-absolute-value nonzero entry of the working
// submatrix, which keeps coefficient growth in check. Column operations
// are mirrored into F (right factor) and G = F^{-1} when requested.
class SnfWorker {
 public:
  SnfWorker(IntMatrix m, bool track_cols)
      : a_(std::move(m)), track_(track_cols) {
    if (track_) {
      f_ = IntMatrix::identity(a_.cols());
      g_ = IntMatrix::identity(a_.cols());
    }
  }

  void run() {
    const int n = std::min(a_.rows(), a_.cols());
    int t = 0;
    while (t < n && move_pivot(t)) {
      clear_cross(t);
      if (!submatrix_divisible(t)) continue;
      if (a_.at(t, t) < 0) negate_row(t);
      ++t;
    }
    rank_ = t;
  }

  std::vector<BigInt> diagonal() const {
    std::vector<BigInt> d;
    d.reserve(rank_);
    for (int i = 0; i < rank_; ++i) d.push_back(a_.at(i, i));
    return d;
  }

  IntMatrix take_f() { return std::move(f_); }
  IntMatrix take_g() { return std::move(g_); }

 private:
  // Finds a minimal nonzero |entry| at or beyond (t, t) and swaps it into
  // the pivot slot. False when the submatrix is zero.
  bool move_pivot(int t) {
    int pr = -1, pc = -1;
    BigInt best;
    for (int r = t; r < a_.rows(); ++r)
      for (int c = t; c < a_.cols(); ++c) {
        const BigInt& x = a_.at(r, c);
        if (x == 0) continue;
        BigInt ax = big_abs(x);
        if (pr < 0 || ax < best) {
          best = ax;
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) return false;
    a_.swap_rows(t, pr);
    swap_cols(t, pc);
    return true;
  }

  // Clears row t and column t beyond the pivot. Whenever a Euclidean step
  // leaves a nonzero remainder, a smaller pivot exists; re-pivot and retry.
  void clear_cross(int t) {
    for (;;) {
      bool dirty = false;
      for (int r = t + 1; r < a_.rows(); ++r) {
        if (a_.at(r, t) == 0) continue;
        BigInt q = a_.at(r, t) / a_.at(t, t);
        if (q != 0) add_row(r, t, -q);
        if (a_.at(r, t) != 0) {
          a_.swap_rows(t, r);
          dirty = true;
        }
      }
      for (int c = t + 1; c < a_.cols(); ++c) {
        if (a_.at(t, c) == 0) continue;
        BigInt q = a_.at(t, c) / a_.at(t, t);
        if (q != 0) add_col(c, t, -q);
        if (a_.at(t, c) != 0) {
          swap_cols(t, c);
          dirty = true;
        }
      }
      if (!dirty) {
        bool row_clear = true;
        for (int c = t + 1; c < a_.cols() && row_clear; ++c)
          row_clear = a_.at(t, c) == 0;
        bool col_clear = true;
        for (int r = t + 1; r < a_.rows() && col_clear; ++r)
          col_clear = a_.at(r, t) == 0;
        if (row_clear && col_clear) return;
      }
    }
  }

  // True when the pivot divides the remaining submatrix; otherwise folds a
  // violating column into column t so the next pass shrinks the pivot.
  bool submatrix_divisible(int t) {
    const BigInt& p = a_.at(t, t);
    for (int r = t + 1; r < a_.rows(); ++r)
      for (int c = t + 1; c < a_.cols(); ++c)
        if (a_.at(r, c) % p != 0) {
          add_col(t, c, 1);
          return false;
        }
    return true;
  }

  // row i += k * row j  (rows never touch F/G)
  void add_row(int i, int j, const BigInt& k) {
    for (int c = 0; c < a_.cols(); ++c) a_.at(i, c) += k * a_.at(j, c);
  }

  // col j += k * col i; F gets the same column op, G the inverse row op.
  void add_col(int j, int i, const BigInt& k) {
    for (int r = 0; r < a_.rows(); ++r) a_.at(r, j) += k * a_.at(r, i);
    if (track_) {
      for (int r = 0; r < f_.rows(); ++r) f_.at(r, j) += k * f_.at(r, i);
      for (int c = 0; c < g_.cols(); ++c) g_.at(i, c) -= k * g_.at(j, c);
    }
  }

  void swap_cols(int i, int j) {
    if (i == j) return;
    a_.swap_cols(i, j);
    if (track_) {
      f_.swap_cols(i, j);
      g_.swap_rows(i, j);
    }
  }

  void negate_row(int t) {
    for (int c = 0; c < a_.cols(); ++c) a_.at(t, c) = -a_.at(t, c);
  }

  IntMatrix a_;
  bool track_;
  IntMatrix f_, g_;
  int rank_ = 0;
};

}  // namespace

SmithForm smith_normal_form(IntMatrix m) {
  SnfWorker w(std::move(m), /*track_cols=*/false);
  w.run();
  return SmithForm{w.diagonal()};
}

SmithTransforms smith_with_col_transform(IntMatrix m) {
  SnfWorker w(std::move(m), /*track_cols=*/true);
  w.run();
  SmithTransforms out;
  out.diagonal = w.diagonal();
  out.col_transform = w.take_f();
  out.col_transform_inv = w.take_g();
  return out;
}

}  // namespace artin
