#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "wedgelab/group.hpp"

namespace wedgelab {

/// A subgroup of a parent group: sorted member ids, a generating list and a
/// membership bitmap sized to the parent.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<Elem> members, std::vector<Elem> generators);

  const GroupPtr& parent() const noexcept { return parent_; }
  std::size_t order() const noexcept { return members_.size(); }
  const std::vector<Elem>& members() const noexcept { return members_; }
  const std::vector<Elem>& generators() const noexcept { return gens_; }
  bool contains(Elem x) const noexcept { return (bits_[x >> 6] >> (x & 63)) & 1u; }
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool is_whole() const noexcept { return members_.size() == parent_->order(); }

 private:
  GroupPtr parent_;
  std::vector<Elem> members_;
  std::vector<Elem> gens_;
  std::vector<std::uint64_t> bits_;
};

/// Incremental subgroup closure: each add() extends the current subgroup by
/// right cosets of the previous one.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(GroupPtr parent, std::size_t budget = static_cast<std::size_t>(-1));

  /// Adds x as a generator; returns false when x was already a member.
  bool add(Elem x);
  bool contains(Elem x) const noexcept { return (bits_[x >> 6] >> (x & 63)) & 1u; }
  std::size_t order() const noexcept { return members_.size(); }
  const std::vector<Elem>& members() const noexcept { return members_; }
  const std::vector<Elem>& generators() const noexcept { return gens_; }
  Subgroup build() const;

 private:
  void insert(Elem x);

  GroupPtr parent_;
  std::size_t budget_;
  std::vector<Elem> members_;
  std::vector<Elem> gens_;
  std::vector<std::uint64_t> bits_;
};

/// Smallest subgroup containing `seeds`. Throws BudgetExceeded when the
/// closure would exceed `budget` elements.
Subgroup close_generators(const GroupPtr& g, std::span<const Elem> seeds,
                          std::size_t budget = static_cast<std::size_t>(-1));

/// Smallest subgroup of `within` containing `seeds` and closed under
/// conjugation by the generators of `within`.
Subgroup normal_closure(const Subgroup& within, std::span<const Elem> seeds);
Subgroup normal_closure(const GroupPtr& g, std::span<const Elem> seeds);

Subgroup whole_group(const GroupPtr& g);
Subgroup trivial_subgroup(const GroupPtr& g);

/// Normal closure of the commutators of generator pairs.
Subgroup derived_subgroup(const GroupPtr& g);
Subgroup derived_subgroup(const Subgroup& s);

/// Elements commuting with every generator.
Subgroup center(const GroupPtr& g);

/// Preimage of Z(G/Z(G)): elements x with [x, s] in Z(G) for every generator s.
Subgroup second_center(const GroupPtr& g, const Subgroup& z);

Subgroup intersect(const Subgroup& a, const Subgroup& b);

bool is_normal(const Subgroup& n);
bool is_abelian(const GroupPtr& g);
bool is_abelian(const Subgroup& s);

/// Length of the derived series; 0 for the trivial group. Returns -1 when the
/// series stabilises at a non-trivial perfect subgroup.
int derived_length(const GroupPtr& g);

/// order_of[x] for every element.
std::vector<std::uint32_t> element_orders(const Group& g);

struct ConjugacyClasses {
  std::vector<std::uint32_t> class_of;  // element -> class index (classes numbered by smallest member)
  std::vector<std::uint32_t> sizes;     // class index -> size
};
ConjugacyClasses conjugacy_classes(const Group& g);

struct OrderStats {
  std::uint64_t exponent = 1;
  std::map<std::uint64_t, std::uint64_t> order_histogram;  // element order -> count
  std::map<std::uint64_t, std::uint64_t> class_sizes;      // class size -> number of classes
  bool operator==(const OrderStats&) const = default;
};
OrderStats order_stats(const GroupPtr& g);

/// A subgroup materialised as a group in its own right.
struct EmbeddedGroup {
  GroupPtr group;
  std::vector<Elem> to_parent;    // local id -> parent id
  std::vector<Elem> from_parent;  // parent id -> local id, kNoElem outside
};

/// Dense copy of a subgroup, ids in breadth-first order from its generators.
EmbeddedGroup subgroup_as_group(const Subgroup& s, std::size_t dense_cutoff);

}  // namespace wedgelab
