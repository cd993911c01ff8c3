#pragma once

#include <optional>

#include "regset/group.hpp"

namespace regset {

enum class SubgroupKind {
  cyclic,  // <a^t>
  mixed,   // <a^t, a^s b>
};

/// Subgroup of the dihedral group of order 2n: either <a^t> with t | n, or
/// <a^t, a^s b> with t | n and s taken mod t.
struct DihedralSubgroupSpec {
  int n = 3;
  SubgroupKind kind = SubgroupKind::cyclic;
  int t = 1;
  int s = 0;
};

/// Subgroup of the generalized quaternion group of order 4n: either <a^t>
/// with t | 2n, or <a^t, a^s b>. A mixed subgroup always contains b^2 = a^n,
/// so it equals <a^g, a^s b> with g = gcd(t,n); specs are normalized to that
/// form (t | n, s mod t) before use.
struct QuaternionSubgroupSpec {
  int n = 2;
  SubgroupKind kind = SubgroupKind::cyclic;
  int t = 1;
  int s = 0;
};

/// Validated spec with s reduced mod t (mixed) and, for quaternion mixed
/// subgroups, t replaced by gcd(t,n).
DihedralSubgroupSpec normalize(const DihedralSubgroupSpec& spec);
QuaternionSubgroupSpec normalize(const QuaternionSubgroupSpec& spec);

/// The subgroup as a subset of the standard element encoding
/// (a^i b^j -> i + n*j for dihedral, i + 2n*j for quaternion).
ElementSet dihedral_subgroup_elements(const DihedralSubgroupSpec& spec);
ElementSet quaternion_subgroup_elements(const QuaternionSubgroupSpec& spec);

int dihedral_subgroup_order(const DihedralSubgroupSpec& spec);
int quaternion_subgroup_order(const QuaternionSubgroupSpec& spec);

/// Whether the subgroup is a (0,k)-regular set of the dihedral group:
/// always for even k; for odd k iff the subgroup is mixed, or cyclic with
/// t or n/t odd. Requires 1 <= k <= |H| and H proper.
bool dihedral_classify(const DihedralSubgroupSpec& spec, int k);

/// Explicit connection set realizing the (0,k)-regular set, or empty
/// optional exactly when dihedral_classify is false. Mixed subgroups use
/// the closed-form reflection/rotation blocks; cyclic subgroups are normal
/// and go through the generic normal-subgroup constructions.
std::optional<ElementSet> dihedral_construct(const DihedralSubgroupSpec& spec, int k);

/// Whether the subgroup is a (0,k)-regular set of the quaternion group:
/// always for even k; for odd k iff cyclic with 2n/t odd, or mixed with
/// (normalized) t odd. Requires 1 <= k <= |H| and H proper.
bool quaternion_classify(const QuaternionSubgroupSpec& spec, int k);

std::optional<ElementSet> quaternion_construct(const QuaternionSubgroupSpec& spec, int k);

}  // namespace regset
