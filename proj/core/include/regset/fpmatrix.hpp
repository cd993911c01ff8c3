#pragma once

#include <vector>

#include "regset/error.hpp"

namespace regset {

/// Exact matrix over the prime field F_p, entries stored row-major in [0,p).
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(int p, int rows, int cols);

  static FpMatrix identity(int p, int n);
  static FpMatrix from_rows(int p, const std::vector<std::vector<int>>& rows);

  int p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, int v);

  /// Matrix-vector product M*v mod p.
  std::vector<int> apply(const std::vector<int>& v) const;

  bool operator==(const FpMatrix& o) const {
    return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  int p_ = 0, rows_ = 0, cols_ = 0;
  std::vector<int> a_;
};

struct RankNullspace {
  int rank = 0;
  FpMatrix basis;  // cols = basis vectors of { w : M w = 0 }
};

/// Reduced-echelon elimination over F_p; dim(null) = cols - rank.
RankNullspace fp_rank_nullspace(const FpMatrix& m);

bool is_prime(int p);

}  // namespace regset
