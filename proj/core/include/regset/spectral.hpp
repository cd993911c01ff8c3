#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

#include "regset/cayley.hpp"
#include "regset/regular.hpp"

namespace regset {

using BigInt = boost::multiprecision::cpp_int;

/// Integer polynomial, coefficients in descending degree order (monic for
/// every characteristic polynomial produced here).
using IntPoly = std::vector<BigInt>;

struct VertexPartition {
  std::vector<ElementSet> blocks;
  std::vector<int> block_of;  // vertex -> block index

  static VertexPartition from_blocks(int num_vertices, std::vector<ElementSet> blocks);
};

struct QuotientMatrix {
  int r = 0;
  std::vector<long long> m;  // row-major r x r
  long long at(int i, int j) const { return m[static_cast<size_t>(i) * r + j]; }
};

/// Quotient matrix if the partition is equitable, empty optional otherwise.
std::optional<QuotientMatrix> quotient_matrix(const CayleyGraph& graph,
                                              const VertexPartition& pi);

/// det(xI - M), exact integer coefficients via Faddeev-LeVerrier.
IntPoly char_poly(const QuotientMatrix& m);

/// Characteristic polynomial of the adjacency matrix; |V| <= 64.
IntPoly adjacency_char_poly(const CayleyGraph& graph);

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
/// Remainder of a by a monic divisor; exact integer arithmetic.
IntPoly poly_mod_monic(const IntPoly& a, const IntPoly& divisor);
/// (x - d)(x - mu)^(r-1).
IntPoly two_eigenvalue_poly(long long d, long long mu, int r);

/// True iff the partition is equitable and all non-principal eigenvalues of
/// its quotient equal mu, by exact polynomial comparison.
bool is_mu_equitable(const CayleyGraph& graph, const VertexPartition& pi, long long mu);

bool is_mu_perfect_set(const CayleyGraph& graph, const ElementSet& d, long long mu);

/// The coset partition {H, s_1 H, ..., s_{n-1} H} from the extracted
/// transversal. Requires H (0,k)-regular and S inside the normalizer of H;
/// the result is (-k)-equitable.
VertexPartition coset_equitable_partition(const CayleyGraph& graph, const SubgroupInfo& h,
                                          int k);

struct NestedRegularSet {
  ElementSet set;
  long long a = 0;  // inside count  (a*k)
  long long b = 0;  // outside count ((a+1)*k)
};

/// Nested family H_a = H ∪ s_1 H ∪ ... ∪ s_a H, each verified
/// (ak,(a+1)k)-regular, for 0 <= a <= |S|/k - 1. For a non-subgroup D the
/// k = 1 variant is used (requires sD = Ds for every s).
std::vector<NestedRegularSet> nested_regular_family(const CayleyGraph& graph,
                                                    const ElementSet& d, int k);

}  // namespace regset
