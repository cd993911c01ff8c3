#pragma once

#include <optional>

#include "regset/cayley.hpp"

namespace regset {

/// Small undirected simple graph used as the target of covering maps.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int num_vertices);

  static SimpleGraph complete(int n);

  int num_vertices() const { return n_; }
  bool adjacent(int x, int y) const { return adj_[static_cast<size_t>(x) * n_ + y] != 0; }
  void add_edge(int x, int y);
  int degree(int v) const;

  std::vector<int> neighbours(int v) const;

 private:
  int n_ = 0;
  std::vector<char> adj_;
};

/// A candidate covering f : source -> target together with the cover
/// parameter k. Surjectivity is validated at construction; the covering
/// property itself is checked by verify_k_covering.
struct CoveringMap {
  CayleyGraph source;
  SimpleGraph target;
  std::vector<int> assignment;  // source vertex -> target vertex
  int k = 1;

  CoveringMap(CayleyGraph src, SimpleGraph tgt, std::vector<int> assign, int k);

  ElementSet fiber(int target_vertex) const;
};

/// True iff f maps edges to edges, fibers over adjacent target vertices meet
/// each source neighbourhood in exactly k vertices, and vertex-fibers are
/// independent sets.
bool verify_k_covering(const CoveringMap& f);

/// The map to K_n sending block i to vertex i, provided every block is a
/// (0,k)-regular set of the graph; empty optional otherwise. Throws if the
/// blocks do not partition the vertices.
std::optional<CoveringMap> cover_from_partition(const CayleyGraph& graph,
                                                const std::vector<ElementSet>& blocks, int k);

/// True iff d is a perfect code of the target: no two vertices of d are
/// adjacent and every vertex outside d has exactly one neighbour in d.
bool is_simple_perfect_code(const SimpleGraph& graph, const ElementSet& d);

/// f^{-1}(D) for a (0,1)-regular D of the target; the result is a verified
/// (0,k)-regular set of the source. Requires f to pass verify_k_covering.
ElementSet pullback_regular_set(const CoveringMap& f, const ElementSet& d);

}  // namespace regset
