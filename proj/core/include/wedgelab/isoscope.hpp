#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wedgelab/abelian.hpp"
#include "wedgelab/automorphisms.hpp"
#include "wedgelab/budget.hpp"
#include "wedgelab/functors.hpp"
#include "wedgelab/group.hpp"
#include "wedgelab/morphism.hpp"

namespace wedgelab {

/// Isomorphism invariants; equality is necessary for isomorphism.
struct Fingerprint {
  std::uint64_t order = 0;
  AbelianInvariants abelianization;
  std::uint64_t derived_order = 0;
  std::uint64_t center_order = 0;
  AbelianInvariants center;
  std::uint64_t exponent = 0;
  std::map<std::uint64_t, std::uint64_t> order_histogram;
  std::map<std::uint64_t, std::uint64_t> class_sizes;
  int derived_length = 0;
  std::uint64_t second_center_order = 0;

  bool operator==(const Fingerprint&) const = default;
  /// Canonical text form, one "field=value" per line.
  std::string serialize() const;
  /// 16 hex digits of FNV-1a over serialize().
  std::string hash() const;
};

/// Throws BudgetExceeded when |G| exceeds `budgets.fingerprint_cap`.
Fingerprint fingerprint(const GroupPtr& g, const Budgets& budgets = Budgets::defaults());

struct InvariantDifference {
  std::string name;
  std::string value_a, value_b;
};

/// The first field, in declaration order, on which the fingerprints differ.
std::optional<InvariantDifference> first_difference(const Fingerprint& a, const Fingerprint& b);

/// Same answer as first_difference(fingerprint(a), fingerprint(b)), computing
/// fields one at a time and stopping at the first that differs.
std::optional<InvariantDifference> staged_difference(const GroupPtr& a, const GroupPtr& b,
                                                     const Budgets& budgets = Budgets::defaults());

/**
 * Conjugation action of G on an abelian G'. When G' = (C_e)^k is homocyclic,
 * the generators act by k x k matrices over Z/e and their determinants
 * generate a subgroup of (Z/e)^*, which does not depend on the basis.
 */
struct DerivedActionInvariant {
  AbelianInvariants derived;
  bool homocyclic = false;
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> determinant_subgroup;  // sorted; empty unless homocyclic
  bool all_in_sl = false;
  std::uint64_t action_order = 1;  // |G : C_G(G')|
  std::vector<std::vector<std::vector<std::int64_t>>> matrices;  // per generator, rows are images of basis elements

  bool same_invariants(const DerivedActionInvariant& o) const {
    return derived == o.derived && homocyclic == o.homocyclic && modulus == o.modulus &&
           determinant_subgroup == o.determinant_subgroup && action_order == o.action_order;
  }
  std::string describe() const;
};

/// Throws NotApplicable when G' is not abelian.
DerivedActionInvariant derived_action(const GroupPtr& g);

/// Determinant of a square integer matrix modulo n.
std::int64_t det_mod(std::vector<std::vector<std::int64_t>> a, std::int64_t n);

struct IsoVerdict {
  Answer answer = Answer::Unknown;
  std::optional<Morphism> iso;  // set for Yes
  InvariantDifference witness;  // set for No
  std::string certificate;
};

/// Cheap invariants first, then a bounded backtracking search up to
/// `budgets.iso_search_cap`.
IsoVerdict are_isomorphic(const GroupPtr& a, const GroupPtr& b, const Budgets& budgets = Budgets::defaults());

struct ExplicitIsoReport {
  bool morphism = false;
  bool injective = false;
  bool orders_equal = false;
  std::string failure;
  bool holds() const { return morphism && injective && orders_equal; }
};

/// Verifies a closed-form map as an isomorphism.
ExplicitIsoReport verify_explicit_iso(const Morphism& f);

/// Verifies the map sending xs[i] to ys[i], where xs generates `source`.
ExplicitIsoReport verify_explicit_iso(const GroupPtr& source, const GroupPtr& target, std::span<const Elem> xs,
                                      std::span<const Elem> ys, Morphism* out = nullptr);

/// psi: tau(G) -> K~(G,3) for abelian G,
/// (a,b;c) -> (a, b; c prod_{i<j} (x_i ^ x_j)^(a_i a_j + b_i b_j + a_i b_j - a_j b_i))
/// on the adapted basis x_i of abelian_basis(G). Not verified.
Morphism psi_map(const std::shared_ptr<const TauGroup>& t, const std::shared_ptr<const KTildeAbelianGroup>& k);

struct GeneratorMap {
  std::vector<Elem> xs, ys;
};

enum class Rank2Form {
  Paper,     // (g1 g2^2, h1, g2 g1^2, h2, k); an isomorphism only when n divides 4
  Symmetric  // (g1, h1^-1 h2^2, g2, h1^2 h2^-1, k^3); an isomorphism for p != 3
};

/// For G = C_m x C_n on generators g, h: the sequence (g1, h1, g2, h2, k) of
/// tau(G) and its image in K~(G,3) under `form`, with g1 = (g,1;1),
/// h1 = (h,1;1), g2 = (1,g;1), h2 = (1,h;1) and k = (1,1;g^h).
GeneratorMap rank2_map(const std::shared_ptr<const TauGroup>& t, const std::shared_ptr<const KTildeAbelianGroup>& k,
                       Rank2Form form = Rank2Form::Symmetric);

}  // namespace wedgelab
