#include "regset/cayley.hpp"

namespace regset {

CayleyGraph::CayleyGraph(FiniteGroup group, ElementSet connection)
    : group_(std::move(group)), connection_(std::move(connection)) {
  require(connection_.parent_order() == group_.order(),
          "connection set does not belong to this group");
  require(!connection_.contains(group_.identity()), "identity in connection set");
  for (int s : connection_.members())
    require(connection_.contains(group_.inv(s)), "connection set is not inverse-closed");
}

ElementSet CayleyGraph::neighbours(int v) const {
  require(v >= 0 && v < num_vertices(), "vertex out of range");
  std::vector<int> out;
  out.reserve(connection_.size());
  for (int s : connection_.members()) out.push_back(group_.op(s, v));
  return ElementSet(num_vertices(), std::move(out));
}

bool CayleyGraph::is_connected() const {
  if (connection_.is_empty()) return num_vertices() == 1;
  return generated_subgroup(group_, connection_).elements.size() == num_vertices();
}

CayleyGraph build_cayley(const FiniteGroup& g, const ElementSet& s) {
  return CayleyGraph(g, s);
}

CayleyGraph hypercube_graph(int n) {
  FiniteGroup g = FiniteGroup::elementary_abelian(2, n);
  std::vector<int> s;
  for (int i = 0; i < n; ++i) s.push_back(1 << i);
  return CayleyGraph(g, ElementSet(g.order(), std::move(s)));
}

CayleyGraph lee_torus_graph(int p, int n) {
  require(p >= 3, "lee_torus_graph: p must be >= 3");
  FiniteGroup g = FiniteGroup::elementary_abelian(p, n);
  std::vector<int> s;
  int pw = 1;
  for (int i = 0; i < n; ++i) {
    int e = pw;
    s.push_back(e);
    s.push_back(g.inv(e));
    pw *= p;
  }
  return CayleyGraph(g, ElementSet(g.order(), std::move(s)));
}

}  // namespace regset
