#pragma once

#include "regset/group.hpp"

namespace regset {

/// Cayley graph Cay(G,S): vertices are the group elements, x ~ y iff
/// y * x^{-1} is in the connection set S. S must be inverse-closed and
/// must not contain the identity; both are validated at construction.
class CayleyGraph {
 public:
  CayleyGraph(FiniteGroup group, ElementSet connection);

  const FiniteGroup& group() const { return group_; }
  const ElementSet& connection() const { return connection_; }
  int num_vertices() const { return group_.order(); }
  int degree() const { return connection_.size(); }

  bool adjacent(int x, int y) const {
    return connection_.contains(group_.op(y, group_.inv(x)));
  }

  /// N(v) = { s*v : s in S }.
  ElementSet neighbours(int v) const;

  /// Connected iff S generates G.
  bool is_connected() const;

 private:
  FiniteGroup group_;
  ElementSet connection_;
};

CayleyGraph build_cayley(const FiniteGroup& g, const ElementSet& s);

/// Hypercube Q_n as Cay(Z_2^n, {e_1..e_n}).
CayleyGraph hypercube_graph(int n);

/// Lee torus C_p^{□n} as Cay(Z_p^n, {±e_1..±e_n}).
CayleyGraph lee_torus_graph(int p, int n);

}  // namespace regset
