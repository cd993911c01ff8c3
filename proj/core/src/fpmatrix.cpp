#include "regset/fpmatrix.hpp"

namespace regset {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

FpMatrix::FpMatrix(int p, int rows, int cols) : p_(p), rows_(rows), cols_(cols) {
  require(is_prime(p), "FpMatrix: p must be prime");
  require(rows >= 0 && cols >= 0, "FpMatrix: negative dimensions");
  a_.assign(static_cast<size_t>(rows) * cols, 0);
}

FpMatrix FpMatrix::identity(int p, int n) {
  FpMatrix m(p, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FpMatrix FpMatrix::from_rows(int p, const std::vector<std::vector<int>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  FpMatrix m(p, r, c);
  for (int i = 0; i < r; ++i) {
    require(static_cast<int>(rows[i].size()) == c, "FpMatrix: ragged rows");
    for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void FpMatrix::set(int r, int c, int v) {
  int w = v % p_;
  if (w < 0) w += p_;
  a_[static_cast<size_t>(r) * cols_ + c] = w;
}

std::vector<int> FpMatrix::apply(const std::vector<int>& v) const {
  require(static_cast<int>(v.size()) == cols_, "FpMatrix::apply: dimension mismatch");
  std::vector<int> out(rows_, 0);
  for (int r = 0; r < rows_; ++r) {
    long long acc = 0;
    for (int c = 0; c < cols_; ++c) acc += static_cast<long long>(at(r, c)) * v[c];
    out[r] = static_cast<int>(acc % p_);
  }
  return out;
}

namespace {

int mod_inverse(int a, int p) {
  // Fermat: a^(p-2) mod p.
  long long result = 1, base = a % p;
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<int>(result);
}

}  // namespace

RankNullspace fp_rank_nullspace(const FpMatrix& m) {
  const int p = m.p(), rows = m.rows(), cols = m.cols();
  std::vector<std::vector<int>> a(rows, std::vector<int>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) a[r][c] = m.at(r, c);

  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pr = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[rank], a[pr]);
    int inv = mod_inverse(a[rank][c], p);
    for (int j = 0; j < cols; ++j) a[rank][j] = static_cast<int>(static_cast<long long>(a[rank][j]) * inv % p);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      int f = a[r][c];
      for (int j = 0; j < cols; ++j) {
        long long v = a[r][j] - static_cast<long long>(f) * a[rank][j] % p;
        a[r][j] = static_cast<int>((v % p + p) % p);
      }
    }
    pivot_col.push_back(c);
    ++rank;
  }

  std::vector<char> is_pivot(cols, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  int dim = cols - rank;
  FpMatrix basis(p, cols, dim);
  int bi = 0;
  for (int free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    basis.set(free_c, bi, 1);
    for (int r = 0; r < rank; ++r) {
      // pivot variable = -a[r][free_c]
      basis.set(pivot_col[r], bi, (p - a[r][free_c]) % p);
    }
    ++bi;
  }
  return RankNullspace{rank, std::move(basis)};
}

}  // namespace regset
