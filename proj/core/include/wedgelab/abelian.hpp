#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wedgelab/group.hpp"
#include "wedgelab/subgroup.hpp"

namespace wedgelab {

/// Invariant factors d1 | d2 | ... | dk, each greater than 1. Empty for the
/// trivial group.
struct AbelianInvariants {
  std::vector<std::uint64_t> factors;

  std::uint64_t order() const;
  std::string describe() const;  // e.g. "[4,4]", "[]" for trivial
  bool operator==(const AbelianInvariants&) const = default;
};

/// Invariant factors of the direct sum of cyclic groups of the given orders.
AbelianInvariants normalize_invariants(std::span<const std::uint64_t> cyclic_orders);

/// Z^k modulo n*Z^k and the span of `rows`, in Smith form. coords[j] holds
/// the coordinates of the j-th unit vector, one per factor.
struct SmithQuotient {
  std::vector<std::uint64_t> factors;  // each greater than 1, dividing the next
  std::vector<std::vector<std::int64_t>> coords;
};
SmithQuotient smith_quotient(std::size_t k, std::int64_t n, std::vector<std::vector<std::int64_t>> rows);

/// A basis of an abelian subgroup adapted to its invariant factors, with
/// coordinates for every member.
class AbelianBasis {
 public:
  const std::vector<std::uint64_t>& factors() const noexcept { return factors_; }
  const std::vector<Elem>& basis() const noexcept { return basis_; }
  const GroupPtr& parent() const noexcept { return parent_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  AbelianInvariants invariants() const { return AbelianInvariants{factors_}; }

  /// Exponents c with x = prod basis[i]^c[i], 0 <= c[i] < factors[i].
  std::vector<std::int64_t> coords(Elem x) const;
  Elem element(std::span<const std::int64_t> c) const;

 private:
  friend AbelianBasis abelian_basis(const Subgroup& s);

  GroupPtr parent_;
  std::vector<Elem> members_;            // sorted subgroup members
  std::vector<std::int32_t> raw_;        // breadth-first exponent vectors, k per member
  std::size_t k_ = 0;                    // number of generators used
  std::vector<std::int64_t> v_;          // k x k column transform, mod |S|
  std::vector<std::size_t> kept_;        // columns with nontrivial factor
  std::vector<std::uint64_t> factors_;
  std::vector<Elem> basis_;
};

/// Throws NotApplicable when the subgroup is not abelian.
AbelianBasis abelian_basis(const Subgroup& s);
AbelianBasis abelian_basis(const GroupPtr& g);

/// Invariant factors of G/G'.
AbelianInvariants abelian_invariants(const GroupPtr& g, std::size_t dense_cutoff = 5000);
/// Invariant factors of an abelian subgroup.
AbelianInvariants abelian_invariants(const Subgroup& s);

}  // namespace wedgelab
