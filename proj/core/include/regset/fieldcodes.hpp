#pragma once

#include <optional>

#include "regset/cayley.hpp"
#include "regset/fpmatrix.hpp"
#include "regset/regular.hpp"

namespace regset {

/// Parameters of the repeated check matrix N(k): t x n over F_p with
/// n = (2^t-1)k columns for p = 2 and n = (p^t-1)k/2 for odd p.
struct CheckMatrixPlan {
  int p = 2;
  int t = 1;
  int k = 1;
  int n = 1;
};

/// The matrix (N N ... N), k copies. For p = 2 the columns of N are the
/// nonzero vectors of V(t,2) in lexicographic order (coordinate 0 most
/// significant, i.e. binary integers 1..2^t-1); for odd p the columns are
/// the vectors whose first nonzero coordinate lies in [1,(p-1)/2].
FpMatrix build_check_matrix(const CheckMatrixPlan& plan);

/// A linear (0,k)-regular set realized as the null space of a check matrix.
struct NullspaceCode {
  int p = 2;
  int n = 0;
  int k = 0;
  int t = 0;
  FpMatrix check;   // t x n
  FpMatrix basis;   // n x (n-t), columns span the code
  long long size = 0;  // p^(n-t)
  /// Code words as element indices of Z_p^n (digit i of the index is
  /// coordinate i). Materialized only when size <= 2^20.
  std::vector<long long> words;
  bool materialized = false;
};

/// Null space construction in the hypercube Q_n; empty optional iff there
/// is no t >= 1 with n = (2^t-1)k.
std::optional<NullspaceCode> hypercube_regular_set(int n, int k);

/// Null space construction in the Lee torus C_p^{□n}; empty optional iff
/// there is no 1 <= t <= n-1 with 2n = (p^t-1)k <= p^n - 1.
std::optional<NullspaceCode> lee_regular_set(int p, int n, int k);

/// Checks a user-supplied check matrix against a cubelike graph: M must
/// have full row rank and the syndromes of the connection set must cover
/// every nonzero vector of V(t,2) exactly k times. On success returns the
/// verified certificate for W = nullspace(M).
std::optional<RegularCertificate> verify_user_check_matrix(const CayleyGraph& graph,
                                                           const FpMatrix& m, int k);

/// Code words as an ElementSet over Z_p^n (requires materialized words and
/// p^n within int range).
ElementSet code_as_element_set(const NullspaceCode& code);

}  // namespace regset
