#include "regset/fieldcodes.hpp"

#include <algorithm>

namespace regset {

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Nonzero vectors of V(t,p) in lexicographic order (coordinate 0 most
// significant), filtered to the canonical half-space for odd p.
std::vector<std::vector<int>> check_columns(int p, int t) {
  std::vector<std::vector<int>> cols;
  std::vector<int> v(t, 0);
  while (true) {
    int i = t - 1;
    while (i >= 0 && v[i] == p - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
    if (p == 2) {
      cols.push_back(v);
    } else {
      int first = 0;
      for (int j = 0; j < t; ++j)
        if (v[j] != 0) {
          first = v[j];
          break;
        }
      if (first >= 1 && first <= (p - 1) / 2) cols.push_back(v);
    }
  }
  return cols;
}

constexpr long long kMaterializeBound = 1LL << 20;

NullspaceCode make_code(int p, int n, int k, int t) {
  CheckMatrixPlan plan{p, t, k, n};
  NullspaceCode code;
  code.p = p;
  code.n = n;
  code.k = k;
  code.t = t;
  code.check = build_check_matrix(plan);
  RankNullspace rn = fp_rank_nullspace(code.check);
  require(rn.rank == t, "check matrix does not have full row rank");
  code.basis = rn.basis;
  code.size = ipow(p, n - t);
  if (code.size <= kMaterializeBound) {
    code.materialized = true;
    const int dim = n - t;
    std::vector<int> coeff(dim, 0);
    std::vector<int> word(n, 0);
    long long total = ipow(p, dim);
    std::vector<long long> place(n);
    for (int j = 0; j < n; ++j) place[j] = ipow(p, j);
    code.words.reserve(total);
    for (long long it = 0; it < total; ++it) {
      long long rem = it;
      for (int i = 0; i < dim; ++i) {
        coeff[i] = static_cast<int>(rem % p);
        rem /= p;
      }
      std::fill(word.begin(), word.end(), 0);
      for (int i = 0; i < dim; ++i) {
        if (coeff[i] == 0) continue;
        for (int j = 0; j < n; ++j)
          word[j] = (word[j] + coeff[i] * code.basis.at(j, i)) % p;
      }
      long long idx = 0;
      for (int j = 0; j < n; ++j) idx += word[j] * place[j];
      code.words.push_back(idx);
    }
    std::sort(code.words.begin(), code.words.end());
  }
  return code;
}

}  // namespace

FpMatrix build_check_matrix(const CheckMatrixPlan& plan) {
  require(is_prime(plan.p), "build_check_matrix: p must be prime");
  require(plan.t >= 1 && plan.k >= 1, "build_check_matrix: t,k must be >= 1");
  long long block = plan.p == 2 ? ipow(2, plan.t) - 1 : (ipow(plan.p, plan.t) - 1) / 2;
  require(block * plan.k == plan.n,
          "build_check_matrix: n must equal (p^t-1)k for p=2 or (p^t-1)k/2 for odd p");
  auto cols = check_columns(plan.p, plan.t);
  require(static_cast<long long>(cols.size()) == block, "build_check_matrix: internal");
  FpMatrix m(plan.p, plan.t, plan.n);
  for (int rep = 0; rep < plan.k; ++rep)
    for (long long c = 0; c < block; ++c)
      for (int r = 0; r < plan.t; ++r)
        m.set(r, static_cast<int>(rep * block + c), cols[c][r]);
  return m;
}

std::optional<NullspaceCode> hypercube_regular_set(int n, int k) {
  require(k >= 1, "hypercube_regular_set: k must be >= 1");
  require(n >= k, "hypercube_regular_set: need n >= k");
  for (int t = 1; ipow(2, t) - 1 <= n; ++t) {
    if ((ipow(2, t) - 1) * k == n) return make_code(2, n, k, t);
  }
  return std::nullopt;
}

std::optional<NullspaceCode> lee_regular_set(int p, int n, int k) {
  require(is_prime(p) && p % 2 == 1, "lee_regular_set: p must be an odd prime");
  require(n >= 1 && k >= 1, "lee_regular_set: n,k must be >= 1");
  for (int t = 1; t <= n - 1; ++t) {
    if ((ipow(p, t) - 1) * k == 2LL * n) {
      if (2LL * n > ipow(p, n) - 1) return std::nullopt;
      return make_code(p, n, k, t);
    }
    if (ipow(p, t) - 1 > 2LL * n) break;
  }
  return std::nullopt;
}

ElementSet code_as_element_set(const NullspaceCode& code) {
  require(code.materialized, "code words not materialized");
  long long universe = ipow(code.p, code.n);
  require(universe <= kMaterializeBound, "code universe too large for an ElementSet");
  std::vector<int> members(code.words.begin(), code.words.end());
  return ElementSet(static_cast<int>(universe), std::move(members));
}

std::optional<RegularCertificate> verify_user_check_matrix(const CayleyGraph& graph,
                                                           const FpMatrix& m, int k) {
  require(k >= 1, "verify_user_check_matrix: k must be >= 1");
  require(m.p() == 2, "verify_user_check_matrix: matrix must be over F_2");
  const int n = m.cols();
  const FiniteGroup& g = graph.group();
  require(g.order() == ipow(2, n), "verify_user_check_matrix: dimension mismatch");
  for (int x = 0; x < g.order(); ++x)
    require(g.op(x, x) == g.identity(), "verify_user_check_matrix: graph is not cubelike");

  const int t = m.rows();
  if (fp_rank_nullspace(m).rank != t) return std::nullopt;

  // Multiset of syndromes of S must be k copies of each nonzero vector.
  long long nonzero = ipow(2, t) - 1;
  if (graph.degree() != nonzero * k) return std::nullopt;
  std::vector<int> counts(static_cast<size_t>(nonzero) + 1, 0);
  std::vector<int> vec(n);
  for (int s : graph.connection().members()) {
    for (int j = 0; j < n; ++j) vec[j] = (s >> j) & 1;
    auto syn = m.apply(vec);
    long long val = 0;
    for (int r = 0; r < t; ++r) val |= static_cast<long long>(syn[r]) << r;
    if (val == 0) return std::nullopt;
    ++counts[val];
  }
  for (long long v = 1; v <= nonzero; ++v)
    if (counts[v] != k) return std::nullopt;

  // W = nullspace(M), verified exactly.
  RankNullspace rn = fp_rank_nullspace(m);
  std::vector<int> words;
  const int dim = n - t;
  require(ipow(2, n) <= (1LL << 20), "verify_user_check_matrix: graph too large");
  for (long long it = 0; it < (1LL << dim); ++it) {
    int w = 0;
    for (int i = 0; i < dim; ++i) {
      if (!((it >> i) & 1)) continue;
      int col = 0;
      for (int j = 0; j < n; ++j) col |= rn.basis.at(j, i) << j;
      w ^= col;
    }
    words.push_back(w);
  }
  ElementSet wset(g.order(), std::move(words));
  return verify_regular_set(graph, wset, 0, k);
}

}  // namespace regset
