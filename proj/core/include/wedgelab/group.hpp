#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "wedgelab/budget.hpp"

namespace wedgelab {

/// Canonical element id. Id 0 is always the identity.
using Elem = std::uint32_t;
inline constexpr Elem kIdentity = 0;
inline constexpr Elem kNoElem = 0xFFFFFFFFu;

enum class FamilyKind {
  Cyclic,
  Abelian,
  Dihedral,
  Quaternion,
  Symmetric,
  Alternating,
  Extraspecial,
  Holder,
  Product,
};

/// Records which named family a group was built from, so that family-specific
/// machinery (Schur covers, closed-form criteria) can be dispatched.
struct FamilyTag {
  FamilyKind kind;
  std::vector<std::int64_t> params;
  std::vector<std::shared_ptr<const FamilyTag>> factors;  // Product only

  /// Compact descriptor, e.g. "holder:4,5,3" or "cyclic:3*alternating:4".
  std::string describe() const;
};

using FamilyPtr = std::shared_ptr<const FamilyTag>;

/**
 * A finite group with elements 0..order()-1.
 *
 * Two backends exist: DenseGroup stores a Cayley table; structured groups
 * (direct products, functor groups, quotients of large groups) compute
 * products from element records. Instances are immutable once published.
 */
class Group {
 public:
  virtual ~Group() = default;

  std::size_t order() const noexcept { return order_; }
  const std::vector<Elem>& generators() const noexcept { return gens_; }

  virtual Elem mul(Elem a, Elem b) const = 0;
  virtual Elem inv(Elem a) const = 0;
  virtual bool is_dense() const noexcept { return false; }

  const FamilyTag* family() const noexcept { return family_.get(); }
  FamilyPtr family_ptr() const noexcept { return family_; }
  void set_family(FamilyPtr tag) { family_ = std::move(tag); }

  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// The family descriptor when present, otherwise the label, otherwise a
  /// generic "order N" description.
  std::string describe() const;

  Elem pow(Elem x, std::int64_t k) const;
  Elem conj(Elem x, Elem g) const { return mul(mul(inv(g), x), g); }  // x^g
  Elem comm(Elem x, Elem y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }
  Elem element_order(Elem x) const;

 protected:
  Group(std::size_t order, std::vector<Elem> generators);

  std::size_t order_;
  std::vector<Elem> gens_;

 private:
  FamilyPtr family_;
  std::string label_;
};

using GroupPtr = std::shared_ptr<const Group>;

/// Cayley-table backend.
class DenseGroup final : public Group {
 public:
  /// Wraps an explicit n-by-n table. Element 0 must be the identity.
  DenseGroup(std::size_t n, std::vector<Elem> table, std::vector<Elem> generators);

  /// Builds a group from its right-regular action: `actions[j][p]` is the
  /// point reached from p by generator j, point 0 being the identity. Ids are
  /// assigned in breadth-first order from the identity. When `relabel` is
  /// non-null it receives point -> id.
  static std::shared_ptr<DenseGroup> from_right_regular(
      const std::vector<std::vector<Elem>>& actions, std::vector<Elem>* relabel = nullptr);

  Elem mul(Elem a, Elem b) const override { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const override { return inverse_[a]; }
  bool is_dense() const noexcept override { return true; }

 private:
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
};

/// Copies any group into a Cayley table with identical ids.
std::shared_ptr<DenseGroup> materialize(const GroupPtr& g, std::size_t dense_cutoff);

/// Direct product G1 x G2 with id a * |G2| + b and componentwise operations.
class ProductGroup final : public Group {
 public:
  ProductGroup(GroupPtr left, GroupPtr right);

  Elem mul(Elem a, Elem b) const override;
  Elem inv(Elem a) const override;

  const GroupPtr& left() const noexcept { return left_; }
  const GroupPtr& right() const noexcept { return right_; }
  Elem pack(Elem a, Elem b) const noexcept { return static_cast<Elem>(a * right_->order() + b); }
  Elem left_of(Elem x) const noexcept { return static_cast<Elem>(x / right_->order()); }
  Elem right_of(Elem x) const noexcept { return static_cast<Elem>(x % right_->order()); }

 private:
  GroupPtr left_, right_;
};

GroupPtr direct_product(const GroupPtr& g1, const GroupPtr& g2);

/// Exhaustive spot checks of the group axioms; samples random triples when
/// the group is larger than `exhaustive_limit`.
bool check_group_axioms(const Group& g, std::size_t samples = 10000, std::size_t exhaustive_limit = 64);

}  // namespace wedgelab
