#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "regset/error.hpp"

namespace regset {

/// Dense index set over the elements 0..parent_order-1 of a group.
/// Used for subgroups, connection sets, regular sets and cosets.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(int parent_order, std::vector<int> members);

  static ElementSet empty(int parent_order) { return ElementSet(parent_order, {}); }
  static ElementSet full(int parent_order);

  int parent_order() const { return parent_order_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool is_empty() const { return members_.empty(); }
  bool contains(int x) const { return x >= 0 && x < parent_order_ && mask_[x] != 0; }
  const std::vector<int>& members() const { return members_; }

  void insert(int x);
  void erase(int x);

  bool operator==(const ElementSet& o) const {
    return parent_order_ == o.parent_order_ && members_ == o.members_;
  }
  bool operator!=(const ElementSet& o) const { return !(*this == o); }

  /// Lexicographic on (size, member list); used for deterministic sorting.
  bool operator<(const ElementSet& o) const {
    if (members_.size() != o.members_.size()) return members_.size() < o.members_.size();
    return members_ < o.members_;
  }

  bool is_subset_of(const ElementSet& o) const;

 private:
  int parent_order_ = 0;
  std::vector<char> mask_;
  std::vector<int> members_;  // sorted ascending
};

enum class TableCheck {
  exhaustive,  // all triples
  sampled,     // 10*order^2 seeded random triples
  trusted,     // table generated by formula, skip associativity
};

/// Finite group backed by an explicit multiplication table.
/// Immutable after construction; cheap to copy (shared table).
class FiniteGroup {
 public:
  static FiniteGroup cyclic(int n);
  /// Dihedral group of order 2n, n >= 3. index(a^i b^j) = i + n*j.
  static FiniteGroup dihedral(int n);
  /// Generalized quaternion group of order 4n, n >= 2. index(a^i b^j) = i + 2n*j.
  static FiniteGroup generalized_quaternion(int n);
  /// Z_p^n with index(v) = sum v_i p^i (coordinate 0 least significant).
  static FiniteGroup elementary_abelian(int p, int n);
  static FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2);
  static FiniteGroup from_table(const std::vector<std::vector<int>>& mul,
                                std::vector<std::string> labels = {},
                                TableCheck check = TableCheck::exhaustive,
                                unsigned seed = 12345);

  int order() const { return d_->order; }
  int identity() const { return d_->identity; }
  int op(int x, int y) const { return d_->mul[static_cast<size_t>(x) * d_->order + y]; }
  int inv(int x) const { return d_->inv[x]; }
  const std::string& label(int x) const { return d_->labels[x]; }
  const std::vector<std::string>& labels() const { return d_->labels; }

  /// Index of the element carrying the given label, if any.
  std::optional<int> find_label(const std::string& label) const;

  int element_order(int x) const;
  bool is_abelian() const;

  int conjugate(int g, int x) const { return op(op(g, x), inv(g)); }

  ElementSet involutions() const;  // excludes identity
  bool is_inverse_closed(const ElementSet& x) const;
  ElementSet inverse_of(const ElementSet& x) const;

  bool same_table(const FiniteGroup& o) const { return d_ == o.d_; }

 private:
  struct Data {
    int order = 0;
    std::vector<int> mul;
    int identity = 0;
    std::vector<int> inv;
    std::vector<std::string> labels;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static FiniteGroup finish(Data d, TableCheck check, unsigned seed);
  std::shared_ptr<const Data> d_;
};

struct SubgroupInfo {
  ElementSet elements;
  int index = 0;  // |G:H|
  bool normal = false;
};

enum class Side { left, right };

/// Smallest subgroup containing gens, with index and normality computed.
SubgroupInfo generated_subgroup(const FiniteGroup& g, const ElementSet& gens);

SubgroupInfo subgroup_from_elements(const FiniteGroup& g, const ElementSet& elements);

/// Every subgroup exactly once, sorted by (order, lexicographic member list).
/// Throws if |G| exceeds the census bound.
std::vector<SubgroupInfo> all_subgroups(const FiniteGroup& g, int census_bound = 64);

/// Partition of G into |G:H| cosets. H itself (the block containing the
/// identity) is listed first; the rest sorted by minimal element index.
std::vector<ElementSet> cosets(const FiniteGroup& g, const SubgroupInfo& h, Side side);

SubgroupInfo normalizer(const FiniteGroup& g, const SubgroupInfo& h);

/// Rebuilds a subgroup H of G as a standalone FiniteGroup.
/// Element i of the result corresponds to h.elements.members()[i].
FiniteGroup subgroup_as_group(const FiniteGroup& g, const SubgroupInfo& h);

}  // namespace regset
