#pragma once

#include <optional>

#include "regset/cayley.hpp"

namespace regset {

/// A verified (a,b)-regular-set claim: every vertex of D has exactly a
/// neighbours in D and every vertex outside D has exactly b.
struct RegularCertificate {
  CayleyGraph graph;
  ElementSet set;
  int a = 0;
  int b = 0;
  int inside_checked = 0;   // |D|
  int outside_checked = 0;  // |V| - |D|
};

struct RegularCheck {
  std::optional<RegularCertificate> certificate;
  int failing_vertex = -1;  // first vertex with the wrong count, if any
  int failing_count = -1;
};

/// Exact counting over every vertex; no sampling. Throws if D is empty or
/// equal to the whole vertex set.
RegularCheck check_regular_set(const CayleyGraph& graph, const ElementSet& d, int a, int b);

std::optional<RegularCertificate> verify_regular_set(const CayleyGraph& graph,
                                                     const ElementSet& d, int a, int b);

/// |D| = |V| * b / (b + d - a); throws if the result is not integral
/// (no regular set with these parameters can exist).
long long regular_set_size(long long num_vertices, long long degree, long long a, long long b);

/// The subset L of S with L ∪ {e} a left transversal of H, minimal element
/// per coset. Requires H to be a (0,k)-regular set in the graph.
ElementSet extract_transversal(const CayleyGraph& graph, const SubgroupInfo& h);

struct TransversalPartition {
  std::vector<ElementSet> parts;  // L_1..L_k (or R_1..R_k)
  Side side = Side::left;
};

/// Partition of S into k parts, each a transversal of H minus the identity,
/// grouped by coset. Empty optional iff H is not (0,k)-regular for any k.
std::optional<TransversalPartition> transversal_partition(const CayleyGraph& graph,
                                                          const SubgroupInfo& h, Side side);

/// Exhaustive backtracking search for an inverse-closed connection set S
/// making H a (0,k)-regular set in Cay(G,S). Deterministic order: cosets by
/// minimal element, elements in index order, each element paired with its
/// inverse. Empty optional is a proof of non-existence.
std::optional<ElementSet> search_connection_set(const FiniteGroup& g, const SubgroupInfo& h,
                                                int k);

/// Connection set making a nontrivial proper normal H a (0,k)-regular set,
/// for even k; existence is unconditional.
ElementSet construct_normal_even(const FiniteGroup& g, const SubgroupInfo& h, int k);

/// True iff every g in G with g^2 in H admits h in H with (gh)^2 = e.
/// Decides (0,k)-regularity of a normal H for every odd k. Refuses
/// non-normal subgroups.
bool odd_criterion(const FiniteGroup& g, const SubgroupInfo& h);

/// Connection set for odd k, or empty optional iff odd_criterion fails.
std::optional<ElementSet> construct_normal_odd(const FiniteGroup& g, const SubgroupInfo& h,
                                               int k);

/// Invariant-factor style cyclic decomposition of an abelian 2-group,
/// largest order first. Entries are generators of the factors.
std::vector<int> abelian_cyclic_decomposition(const FiniteGroup& p2group);

/// Sylow 2-subgroup of an abelian group.
SubgroupInfo sylow_2_subgroup(const FiniteGroup& g);

/// Decides whether a subgroup H of an abelian G is a (0,k)-regular set of G
/// for odd k, via the Sylow 2-subgroup criterion, falling back to search
/// inside P when no closed form applies.
bool abelian_sylow2_criterion(const FiniteGroup& g, const SubgroupInfo& h, int k);

}  // namespace regset
