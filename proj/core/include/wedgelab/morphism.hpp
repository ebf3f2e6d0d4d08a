#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wedgelab/group.hpp"
#include "wedgelab/subgroup.hpp"

namespace wedgelab {

/// A map between groups, given by generator images and either a full table
/// or a closed formula.
struct Morphism {
  GroupPtr source;
  GroupPtr target;
  std::vector<Elem> gen_images;  // aligned with source->generators()
  std::shared_ptr<const std::vector<Elem>> full_map;
  std::function<Elem(Elem)> formula;

  Elem apply(Elem x) const;
  Elem operator()(Elem x) const { return apply(x); }
};

/// Extends generator images to a homomorphism by breadth-first search over
/// the source. Every check f(x*s) = f(x)*f(s) is performed on the way, so a
/// returned morphism is verified. Throws NotAMorphism otherwise.
Morphism extend_to_morphism(const GroupPtr& source, const GroupPtr& target, std::vector<Elem> images);

/// Wraps a closed-form map; nothing is verified.
Morphism morphism_from_formula(const GroupPtr& source, const GroupPtr& target, std::function<Elem(Elem)> fn);

/// Wraps an explicit element table; nothing is verified.
Morphism morphism_from_table(const GroupPtr& source, const GroupPtr& target, std::vector<Elem> table);

struct MorphismFailure {
  Elem element;
  std::size_t generator;  // index into source->generators()
  std::string describe() const;
};

/// First pair (x, s) with f(x*s) != f(x)*f(s), scanning x in id order.
std::optional<MorphismFailure> first_morphism_failure(const Morphism& f);
bool verify_morphism(const Morphism& f);
void require_morphism(const Morphism& f);

/// Tabulated copy (full_map filled in).
Morphism tabulate(const Morphism& f);

Subgroup kernel(const Morphism& f);
Subgroup image(const Morphism& f);
bool is_injective(const Morphism& f);
bool is_bijective(const Morphism& f);

/// x -> g(f(x)).
Morphism compose(const Morphism& f, const Morphism& g);

/// Cosets of a normal subgroup. Elements of the quotient are coset labels in
/// breadth-first order from the images of the generators.
class QuotientGroup final : public Group {
 public:
  QuotientGroup(GroupPtr parent, std::vector<Elem> label, std::vector<Elem> reps, std::vector<Elem> gens);

  Elem mul(Elem a, Elem b) const override { return label_[parent_->mul(reps_[a], reps_[b])]; }
  Elem inv(Elem a) const override { return label_[parent_->inv(reps_[a])]; }

  const GroupPtr& parent() const noexcept { return parent_; }
  Elem label(Elem x) const noexcept { return label_[x]; }
  Elem representative(Elem q) const noexcept { return reps_[q]; }
  const std::vector<Elem>& labels() const noexcept { return label_; }

 private:
  GroupPtr parent_;
  std::vector<Elem> label_;
  std::vector<Elem> reps_;
};

struct QuotientResult {
  GroupPtr group;
  Morphism projection;
  std::vector<Elem> representatives;  // quotient id -> parent element
};

/// G/N. The quotient is dense when its order is at most `dense_cutoff` and a
/// QuotientGroup otherwise. Throws NotNormal.
QuotientResult quotient(const GroupPtr& g, const Subgroup& n, std::size_t dense_cutoff);

}  // namespace wedgelab
