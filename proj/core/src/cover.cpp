#include "regset/cover.hpp"

#include "regset/regular.hpp"

namespace regset {

SimpleGraph::SimpleGraph(int num_vertices) : n_(num_vertices) {
  require(num_vertices >= 1, "SimpleGraph: need at least one vertex");
  adj_.assign(static_cast<size_t>(n_) * n_, 0);
}

SimpleGraph SimpleGraph::complete(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

void SimpleGraph::add_edge(int x, int y) {
  require(x >= 0 && x < n_ && y >= 0 && y < n_, "SimpleGraph: vertex out of range");
  require(x != y, "SimpleGraph: loops not allowed");
  adj_[static_cast<size_t>(x) * n_ + y] = 1;
  adj_[static_cast<size_t>(y) * n_ + x] = 1;
}

int SimpleGraph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < n_; ++u)
    if (adjacent(v, u)) ++d;
  return d;
}

std::vector<int> SimpleGraph::neighbours(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    if (adjacent(v, u)) out.push_back(u);
  return out;
}

CoveringMap::CoveringMap(CayleyGraph src, SimpleGraph tgt, std::vector<int> assign, int kk)
    : source(std::move(src)), target(std::move(tgt)), assignment(std::move(assign)), k(kk) {
  require(k >= 1, "CoveringMap: k must be >= 1");
  require(static_cast<int>(assignment.size()) == source.num_vertices(),
          "CoveringMap: assignment length mismatch");
  std::vector<char> hit(target.num_vertices(), 0);
  for (int t : assignment) {
    require(t >= 0 && t < target.num_vertices(), "CoveringMap: target vertex out of range");
    hit[t] = 1;
  }
  for (char h : hit) require(h != 0, "CoveringMap: assignment not surjective");
}

ElementSet CoveringMap::fiber(int target_vertex) const {
  ElementSet out = ElementSet::empty(source.num_vertices());
  for (int v = 0; v < source.num_vertices(); ++v)
    if (assignment[v] == target_vertex) out.insert(v);
  return out;
}

bool verify_k_covering(const CoveringMap& f) {
  const int n = f.source.num_vertices();
  // Homomorphism, and fibers independent (no edge maps onto a single vertex).
  for (int u = 0; u < n; ++u)
    for (int s : f.source.connection().members()) {
      int v = f.source.group().op(s, u);
      if (!f.target.adjacent(f.assignment[u], f.assignment[v])) return false;
    }
  // |N(u) ∩ f^{-1}(y)| = k for every target edge {x,y} and u over x.
  for (int u = 0; u < n; ++u) {
    std::vector<int> counts(f.target.num_vertices(), 0);
    for (int s : f.source.connection().members())
      ++counts[f.assignment[f.source.group().op(s, u)]];
    for (int y = 0; y < f.target.num_vertices(); ++y) {
      if (!f.target.adjacent(f.assignment[u], y)) continue;
      if (counts[y] != f.k) return false;
    }
  }
  return true;
}

std::optional<CoveringMap> cover_from_partition(const CayleyGraph& graph,
                                                const std::vector<ElementSet>& blocks,
                                                int k) {
  const int n = graph.num_vertices();
  std::vector<int> assignment(n, -1);
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    require(blocks[b].parent_order() == n, "cover_from_partition: block over wrong vertex set");
    for (int v : blocks[b].members()) {
      require(assignment[v] == -1, "cover_from_partition: overlapping blocks");
      assignment[v] = b;
    }
  }
  for (int v = 0; v < n; ++v)
    require(assignment[v] != -1, "cover_from_partition: blocks do not cover all vertices");

  for (const ElementSet& block : blocks)
    if (!verify_regular_set(graph, block, 0, k)) return std::nullopt;

  CoveringMap f(graph, SimpleGraph::complete(static_cast<int>(blocks.size())),
                std::move(assignment), k);
  require(verify_k_covering(f), "cover_from_partition: internal (covering check failed)");
  return f;
}

bool is_simple_perfect_code(const SimpleGraph& graph, const ElementSet& d) {
  require(d.parent_order() == graph.num_vertices(),
          "is_simple_perfect_code: set over wrong vertex set");
  for (int v = 0; v < graph.num_vertices(); ++v) {
    int c = 0;
    for (int u : graph.neighbours(v))
      if (d.contains(u)) ++c;
    if (c != (d.contains(v) ? 0 : 1)) return false;
  }
  return true;
}

ElementSet pullback_regular_set(const CoveringMap& f, const ElementSet& d) {
  require(verify_k_covering(f), "pullback_regular_set: map is not a k-covering");
  require(is_simple_perfect_code(f.target, d),
          "pullback_regular_set: set is not a perfect code of the target");
  ElementSet out = ElementSet::empty(f.source.num_vertices());
  for (int v = 0; v < f.source.num_vertices(); ++v)
    if (d.contains(f.assignment[v])) out.insert(v);
  require(verify_regular_set(f.source, out, 0, f.k).has_value(),
          "pullback_regular_set: internal (pullback failed verification)");
  return out;
}

}  // namespace regset
