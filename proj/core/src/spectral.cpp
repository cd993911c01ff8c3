#include "regset/spectral.hpp"

#include <algorithm>

namespace regset {

VertexPartition VertexPartition::from_blocks(int num_vertices,
                                             std::vector<ElementSet> blocks) {
  VertexPartition pi;
  pi.block_of.assign(num_vertices, -1);
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    require(blocks[b].parent_order() == num_vertices,
            "VertexPartition: block over wrong vertex set");
    require(!blocks[b].is_empty(), "VertexPartition: empty block");
    for (int v : blocks[b].members()) {
      require(pi.block_of[v] == -1, "VertexPartition: overlapping blocks");
      pi.block_of[v] = b;
    }
  }
  for (int v = 0; v < num_vertices; ++v)
    require(pi.block_of[v] != -1, "VertexPartition: blocks do not cover all vertices");
  pi.blocks = std::move(blocks);
  return pi;
}

std::optional<QuotientMatrix> quotient_matrix(const CayleyGraph& graph,
                                              const VertexPartition& pi) {
  const int r = static_cast<int>(pi.blocks.size());
  require(static_cast<int>(pi.block_of.size()) == graph.num_vertices(),
          "quotient_matrix: partition over wrong vertex set");
  QuotientMatrix q;
  q.r = r;
  q.m.assign(static_cast<size_t>(r) * r, 0);
  std::vector<long long> row(r);
  for (int b = 0; b < r; ++b) {
    bool first = true;
    for (int v : pi.blocks[b].members()) {
      std::fill(row.begin(), row.end(), 0);
      for (int s : graph.connection().members())
        ++row[pi.block_of[graph.group().op(s, v)]];
      if (first) {
        for (int j = 0; j < r; ++j) q.m[static_cast<size_t>(b) * r + j] = row[j];
        first = false;
      } else {
        for (int j = 0; j < r; ++j)
          if (q.m[static_cast<size_t>(b) * r + j] != row[j]) return std::nullopt;
      }
    }
  }
  return q;
}

IntPoly char_poly(const QuotientMatrix& q) {
  const int n = q.r;
  auto idx = [n](int i, int j) { return static_cast<size_t>(i) * n + j; };
  std::vector<BigInt> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[idx(i, j)] = q.at(i, j);

  // Faddeev-LeVerrier: M_1 = I, c_k = -tr(A M_k)/k, M_{k+1} = A M_k + c_k I.
  IntPoly c(n + 1);
  c[0] = 1;
  std::vector<BigInt> m(static_cast<size_t>(n) * n), am(m.size());
  for (int i = 0; i < n; ++i) m[idx(i, i)] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        BigInt acc = 0;
        for (int l = 0; l < n; ++l) acc += a[idx(i, l)] * m[idx(l, j)];
        am[idx(i, j)] = acc;
      }
    BigInt tr = 0;
    for (int i = 0; i < n; ++i) tr += am[idx(i, i)];
    require(tr % k == 0, "char_poly: internal (trace divisibility)");
    c[k] = -tr / k;
    if (k < n) {
      m = am;
      for (int i = 0; i < n; ++i) m[idx(i, i)] += c[k];
    }
  }
  return c;
}

IntPoly adjacency_char_poly(const CayleyGraph& graph) {
  const int n = graph.num_vertices();
  require(n <= 64, "adjacency_char_poly: graph too large (order > 64)");
  QuotientMatrix a;
  a.r = n;
  a.m.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (graph.adjacent(i, j)) a.m[static_cast<size_t>(i) * n + j] = 1;
  return char_poly(a);
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  require(!a.empty() && !b.empty(), "poly_mul: empty polynomial");
  IntPoly out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

IntPoly poly_mod_monic(const IntPoly& a, const IntPoly& divisor) {
  require(!divisor.empty() && divisor[0] == 1, "poly_mod_monic: divisor must be monic");
  IntPoly r = a;
  const size_t dd = divisor.size() - 1;
  while (r.size() > dd) {
    BigInt lead = r[0];
    if (lead != 0)
      for (size_t j = 1; j < divisor.size(); ++j) r[j] -= lead * divisor[j];
    r.erase(r.begin());
  }
  while (r.size() > 1 && r[0] == 0) r.erase(r.begin());
  return r;
}

IntPoly two_eigenvalue_poly(long long d, long long mu, int r) {
  require(r >= 1, "two_eigenvalue_poly: r must be >= 1");
  IntPoly out{1, BigInt(-d)};
  IntPoly factor{1, BigInt(-mu)};
  for (int i = 1; i < r; ++i) out = poly_mul(out, factor);
  return out;
}

bool is_mu_equitable(const CayleyGraph& graph, const VertexPartition& pi, long long mu) {
  auto q = quotient_matrix(graph, pi);
  if (!q) return false;
  return char_poly(*q) == two_eigenvalue_poly(graph.degree(), mu, q->r);
}

bool is_mu_perfect_set(const CayleyGraph& graph, const ElementSet& d, long long mu) {
  const int n = graph.num_vertices();
  require(!d.is_empty() && d.size() < n, "is_mu_perfect_set: set must be proper and nonempty");
  ElementSet rest = ElementSet::empty(n);
  for (int v = 0; v < n; ++v)
    if (!d.contains(v)) rest.insert(v);
  auto pi = VertexPartition::from_blocks(n, {d, rest});
  return is_mu_equitable(graph, pi, mu);
}

VertexPartition coset_equitable_partition(const CayleyGraph& graph, const SubgroupInfo& h,
                                          int k) {
  const FiniteGroup& g = graph.group();
  SubgroupInfo ng = normalizer(g, h);
  for (int s : graph.connection().members())
    require(ng.elements.contains(s),
            "coset_equitable_partition: connection set must normalize the subgroup");
  require(verify_regular_set(graph, h.elements, 0, k).has_value(),
          "coset_equitable_partition: subgroup is not a (0,k)-regular set");
  ElementSet l = extract_transversal(graph, h);
  std::vector<ElementSet> blocks;
  blocks.push_back(h.elements);
  for (int t : l.members()) {
    ElementSet coset = ElementSet::empty(g.order());
    for (int x : h.elements.members()) coset.insert(g.op(t, x));
    blocks.push_back(std::move(coset));
  }
  return VertexPartition::from_blocks(g.order(), std::move(blocks));
}

namespace {

bool is_subgroup(const FiniteGroup& g, const ElementSet& d) {
  if (!d.contains(g.identity())) return false;
  for (int x : d.members())
    for (int y : d.members())
      if (!d.contains(g.op(x, y))) return false;
  return true;
}

ElementSet left_translate(const FiniteGroup& g, int s, const ElementSet& d) {
  ElementSet out = ElementSet::empty(g.order());
  for (int x : d.members()) out.insert(g.op(s, x));
  return out;
}

}  // namespace

std::vector<NestedRegularSet> nested_regular_family(const CayleyGraph& graph,
                                                    const ElementSet& d, int k) {
  const FiniteGroup& g = graph.group();
  std::vector<ElementSet> cosets_of_d;  // translates past D itself, in order
  if (is_subgroup(g, d)) {
    SubgroupInfo h = subgroup_from_elements(g, d);
    require(verify_regular_set(graph, h.elements, 0, k).has_value(),
            "nested_regular_family: subgroup is not a (0,k)-regular set");
    ElementSet transversal = extract_transversal(graph, h);
    for (int t : transversal.members()) cosets_of_d.push_back(left_translate(g, t, d));
  } else {
    require(k == 1, "nested_regular_family: non-subgroup sets require k = 1");
    require(d.contains(g.identity()),
            "nested_regular_family: set must contain the identity");
    require(verify_regular_set(graph, d, 0, 1).has_value(),
            "nested_regular_family: set is not a perfect code");
    for (int s : graph.connection().members()) {
      ElementSet sd = left_translate(g, s, d);
      ElementSet ds = ElementSet::empty(g.order());
      for (int x : d.members()) ds.insert(g.op(x, s));
      require(sd == ds, "nested_regular_family: set does not commute with the connection set");
      cosets_of_d.push_back(std::move(sd));
    }
  }

  std::vector<NestedRegularSet> family;
  ElementSet acc = d;
  for (int a = 0; a < static_cast<int>(cosets_of_d.size()); ++a) {
    if (a > 0)
      for (int x : cosets_of_d[a - 1].members()) acc.insert(x);
    NestedRegularSet entry;
    entry.set = acc;
    entry.a = static_cast<long long>(a) * k;
    entry.b = static_cast<long long>(a + 1) * k;
    require(verify_regular_set(graph, acc, static_cast<int>(entry.a),
                               static_cast<int>(entry.b))
                .has_value(),
            "nested_regular_family: verification failed");
    family.push_back(std::move(entry));
  }
  return family;
}

}  // namespace regset
