#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wedgelab/group.hpp"
#include "wedgelab/morphism.hpp"
#include "wedgelab/presentation.hpp"
#include "wedgelab/subgroup.hpp"

namespace wedgelab {

/// Direct sum of cyclic groups with mixed-radix ids; generators are the unit
/// vectors of the factors.
class AbelianGroup final : public Group {
 public:
  explicit AbelianGroup(std::vector<std::uint64_t> factors);

  Elem mul(Elem a, Elem b) const override;
  Elem inv(Elem a) const override;

  const std::vector<std::uint64_t>& factors() const noexcept { return d_; }
  std::vector<std::int64_t> coords(Elem x) const;
  Elem element(const std::vector<std::int64_t>& c) const;

 private:
  std::vector<std::uint64_t> d_;
};

/// <a, b | a^m, b^k = a^s, a^b = a^r> with elements b^j a^i, id j*m + i.
class MetacyclicGroup final : public Group {
 public:
  MetacyclicGroup(std::int64_t m, std::int64_t k, std::int64_t r, std::int64_t s);

  Elem mul(Elem a, Elem b) const override;
  Elem inv(Elem a) const override;
  Elem a() const noexcept { return m_ > 1 ? 1 : 0; }
  Elem b() const noexcept { return k_ > 1 ? static_cast<Elem>(m_) : 0; }

 private:
  std::int64_t m_, k_, r_, s_;
  std::vector<std::int64_t> rpow_;  // r^l mod m for l < k
};

/// Nilpotent class-2 group on top coordinates x (cyclic factors d) and
/// central coordinates z (cyclic factors e), with product
///   (x, z)(y, w) = (x + y, z + w + sum_{i<j} x_j y_i C[j][i]).
/// C[j][i] is the central element [top_j, top_i].
class ClassTwoGroup final : public Group {
 public:
  ClassTwoGroup(std::vector<std::uint64_t> top, std::vector<std::uint64_t> central,
                std::vector<std::vector<std::vector<std::int64_t>>> commutators);

  Elem mul(Elem a, Elem b) const override;
  Elem inv(Elem a) const override;

  std::size_t top_rank() const noexcept { return top_.size(); }
  std::size_t central_rank() const noexcept { return central_.size(); }
  Elem top_generator(std::size_t i) const;
  Elem central_generator(std::size_t k) const;

 private:
  void decode(Elem a, std::int64_t* x, std::int64_t* z) const;
  Elem encode(const std::int64_t* x, const std::int64_t* z) const;

  std::vector<std::uint64_t> top_, central_;
  std::vector<std::int64_t> comm_;  // flattened [j][i][k]
  std::size_t top_size_ = 1;
};

/// Group generated by permutations of {0..n-1} (right action: x*y applies x
/// first). `perms_out` receives the permutation of every element.
std::shared_ptr<DenseGroup> permutation_group(const std::vector<std::vector<std::uint8_t>>& gens,
                                              std::size_t dense_cutoff,
                                              std::vector<std::vector<std::uint8_t>>* perms_out = nullptr);

GroupPtr cyclic(std::int64_t n);
GroupPtr abelian(const std::vector<std::int64_t>& factors);
GroupPtr dihedral(std::int64_t order);     // order 2n
GroupPtr quaternion(std::int64_t order);   // order 4n
GroupPtr symmetric(int n);                 // Coxeter generators (i, i+1)
GroupPtr alternating(int n);               // generators (1 2 k), k = 3..n

enum class ExtraspecialExponent { P, PSquared };
GroupPtr extraspecial(std::int64_t p, int n, ExtraspecialExponent kind);

/// <a, b | b^n, a^m, a^b = a^r>, generators (a, b). Throws ParameterViolation.
GroupPtr holder(std::int64_t n, std::int64_t m, std::int64_t r);
/// Validates Holder parameters, throwing ParameterViolation naming the failure.
void check_holder_parameters(std::int64_t n, std::int64_t m, std::int64_t r);

/// Presentations for the families (used by the CLI and for AI-closure tests).
Presentation dihedral_presentation(std::int64_t n);
Presentation quaternion_presentation(std::int64_t n);
Presentation holder_presentation(std::int64_t n, std::int64_t m, std::int64_t r);
Presentation extraspecial_presentation(std::int64_t p, int n);
Presentation symmetric_cover_presentation(int n);      // H_n
Presentation extraspecial_cover_presentation(std::int64_t p);  // order p^5 cover, n = 1

/// A Schur cover H of G with M <= H' cap Z(H), H/M = G.
struct CoverData {
  GroupPtr h;
  Subgroup m;
  Morphism proj;  // H -> G
  std::string kind;
};

/// Family-specific Schur cover; verifies M <= H' cap Z(H) and |H| = |G||M|.
/// Throws UnsupportedFamily.
CoverData schur_cover(const GroupPtr& g, std::size_t dense_cutoff = 5000);

/// Checks the cover axioms: proj a surjective morphism with kernel M, M
/// central and contained in H'.
bool verify_cover(const CoverData& c);

/// Parses a descriptor such as "holder:4,5,3", "abelian:4,4", "sym4",
/// "extraspecial:3,1,p", or products joined by '*'. Throws ParameterViolation.
GroupPtr group_from_descriptor(const std::string& text);

}  // namespace wedgelab
