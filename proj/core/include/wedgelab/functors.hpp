#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "wedgelab/abelian.hpp"
#include "wedgelab/constructors.hpp"
#include "wedgelab/group.hpp"
#include "wedgelab/morphism.hpp"
#include "wedgelab/subgroup.hpp"
#include "wedgelab/wedge.hpp"

namespace wedgelab {

/**
 * Extension of G^k by a tail group T, stored as normal-form tuples
 * (g_1, ..., g_k; t). Ids are mixed radix: components base |G|, tail last.
 * Subclasses supply the multiplication of two tuples; inverses are derived
 * from it because (1, ..., 1; t) always multiplies as t in T.
 */
class FunctorGroup : public Group {
 public:
  struct Provenance {
    std::string functor;  // "K", "K-structured", "tau", "K~", "tau-flat", ...
    std::string source;   // description of G
    std::string wedge;    // wedge strategy, empty when not used
    std::string cover;    // cover kind, empty when not used
  };

  static constexpr std::size_t kMaxArity = 8;

  const GroupPtr& base() const noexcept { return g_; }
  const GroupPtr& tail() const noexcept { return t_; }
  std::size_t arity() const noexcept { return k_; }
  const Provenance& provenance() const noexcept { return prov_; }

  Elem encode(std::span<const Elem> comps, Elem tail) const;
  void decode(Elem x, Elem* comps, Elem* tail) const;
  Elem component(Elem x, std::size_t i) const;
  Elem tail_of(Elem x) const { return static_cast<Elem>(x % t_->order()); }

  Elem mul(Elem a, Elem b) const final;
  Elem inv(Elem a) const final;

 protected:
  FunctorGroup(GroupPtr g, std::size_t k, GroupPtr tail, Provenance prov, std::size_t cap);

  /// (a; at)(b; bt) = (out; ot), with out[i] = a[i] b[i].
  virtual Elem combine_tail(const Elem* a, Elem at, const Elem* b, Elem bt) const = 0;

  GroupPtr g_, t_;
  std::size_t k_;
  Provenance prov_;
};

using FunctorPtr = std::shared_ptr<const FunctorGroup>;

/// K(G, n) as G^(n-1).G' on (g_1..g_{n-1}; c), standing for the tuple
/// (g_1, ..., g_{n-1}, g_{n-1}^-1 ... g_1^-1 c).
class KGroup final : public FunctorGroup {
 public:
  KGroup(GroupPtr g, std::size_t n, std::shared_ptr<const EmbeddedGroup> derived, std::size_t cap);

  std::size_t n() const noexcept { return k_ + 1; }
  /// The n-tuple in G^n.
  std::vector<Elem> tuple(Elem x) const;
  /// Inverse of tuple(); kNoElem when the product is outside G'.
  Elem from_tuple(std::span<const Elem> t) const;
  const EmbeddedGroup& derived() const noexcept { return *d_; }

 protected:
  Elem combine_tail(const Elem* a, Elem at, const Elem* b, Elem bt) const override;

 private:
  std::shared_ptr<const EmbeddedGroup> d_;
};

enum class KLaw {
  Mu,      // uv = (gh; mu(g,h) c^h d)
  Class2,  // uv = (gh; cd prod_{i<=j} [g_i, h_j]), valid in class at most 2
};

/// G^(n-1).G' with the mu multiplication, tail in local ids of G'.
class KStructuredGroup final : public FunctorGroup {
 public:
  KStructuredGroup(GroupPtr g, std::size_t n, std::shared_ptr<const EmbeddedGroup> derived, KLaw law,
                   std::size_t cap);
  const EmbeddedGroup& derived() const noexcept { return *d_; }
  KLaw law() const noexcept { return law_; }

 protected:
  Elem combine_tail(const Elem* a, Elem at, const Elem* b, Elem bt) const override;

 private:
  std::shared_ptr<const EmbeddedGroup> d_;
  KLaw law_;
};

/// G^2.W with (a,b;c)(g,h;d) = (ag, bh; (b^h ^ g^h) c^(gh) d).
class TauGroup final : public FunctorGroup {
 public:
  TauGroup(WedgeStructure w, std::string functor, std::size_t cap);
  const WedgeStructure& wedge() const noexcept { return w_; }

 protected:
  Elem combine_tail(const Elem* a, Elem at, const Elem* b, Elem bt) const override;

 private:
  WedgeStructure w_;
};

/// G^(n-1).(G^G) for abelian G: (g;c)(h;d) = (gh; cd prod g_i ^ (h_i...h_{n-1})).
class KTildeAbelianGroup final : public FunctorGroup {
 public:
  KTildeAbelianGroup(WedgeStructure w, std::size_t n, std::size_t cap);
  const WedgeStructure& wedge() const noexcept { return w_; }

 protected:
  Elem combine_tail(const Elem* a, Elem at, const Elem* b, Elem bt) const override;

 private:
  WedgeStructure w_;
};

/// G^2.(H') for a Schur cover H: (g;c)(h;d) = (gh; mu(g',h') c^h d), with mu
/// evaluated on lifts to H.
class KTildeCoverGroup final : public FunctorGroup {
 public:
  KTildeCoverGroup(const CoverData& c, std::size_t dense_cutoff, std::size_t cap);
  const GroupPtr& cover() const noexcept { return h_; }
  const EmbeddedGroup& derived() const noexcept { return *d_; }
  Elem lift(Elem g) const { return lift_[g]; }

 protected:
  Elem combine_tail(const Elem* a, Elem at, const Elem* b, Elem bt) const override;

 private:
  KTildeCoverGroup(const CoverData& c, std::shared_ptr<const EmbeddedGroup> derived, std::size_t cap);

  GroupPtr h_;
  std::vector<Elem> lift_;
  std::shared_ptr<const EmbeddedGroup> d_;
};

std::shared_ptr<const KGroup> k_group(const GroupPtr& g, std::size_t n, const Budgets& budgets = Budgets::defaults());

std::shared_ptr<const KStructuredGroup> k_structured(const GroupPtr& g, std::size_t n, KLaw law = KLaw::Mu,
                                                     const Budgets& budgets = Budgets::defaults());

/// (g; c) -> (g, g_{n-1}^-1 ... g_1^-1 c), verified to be an isomorphism.
Morphism k_structured_to_tuples(const std::shared_ptr<const KStructuredGroup>& s,
                                const std::shared_ptr<const KGroup>& k);

/// mu(g, h) for (n-1)-tuples in G.
Elem mu(const Group& g, std::span<const Elem> a, std::span<const Elem> b);

std::shared_ptr<const TauGroup> tau(const WedgeStructure& w, const Budgets& budgets = Budgets::defaults());

/// |tau(G)'| = |G'|^2 |W|.
bool tau_derived_check(const TauGroup& t);

std::shared_ptr<const KTildeAbelianGroup> ktilde_abelian(const GroupPtr& g, std::size_t n,
                                                         const Budgets& budgets = Budgets::defaults());

std::shared_ptr<const KTildeCoverGroup> ktilde_from_cover(const CoverData& c,
                                                          const Budgets& budgets = Budgets::defaults());

/// Abelian closed form for the centre of K~(G, n):
/// {(u, u y_2, ..., u y_{n-1}; c) : y_i in Z^(G), u^n in Z^(G)} with Z^ the
/// epicentre.
std::size_t ktilde_abelian_center_order(const WedgeStructure& w, std::size_t n);

/// True when the automorphism acts as inversion on G/G'.
bool inverts_abelianization(const Morphism& alpha);

/// Phi_alpha: tau(G) -> G x G x G, (a, b; c) -> (a, b, alpha(a b kappa(c))).
/// The target is direct_product(direct_product(G, G), G). Throws NotAI.
Morphism phi_alpha(const std::shared_ptr<const TauGroup>& t, const Morphism& alpha);

/// Members of K(G, 3) as ids of direct_product(direct_product(G, G), G).
std::vector<Elem> k3_in_cube(const GroupPtr& cube, const GroupPtr& g);

struct CentralExtensionReport {
  std::size_t tau_order = 0;
  std::size_t k3_order = 0;
  std::size_t image_order = 0;
  std::size_t kernel_order = 0;
  std::size_t multiplier_order = 0;
  bool morphism = false;
  bool image_is_k3 = false;
  bool kernel_is_ker_kappa = false;
  bool kernel_central = false;
  bool holds() const {
    return morphism && image_is_k3 && kernel_is_ker_kappa && kernel_central && tau_order == multiplier_order * k3_order;
  }
};

/// Checks 1 -> ker kappa -> tau(G) -> K(G,3) -> 1 through Phi_alpha.
CentralExtensionReport central_extension_check(const std::shared_ptr<const TauGroup>& t, const Morphism& alpha);

/// The quotient of a wedge by a subgroup N of ker kappa, central in W and
/// stable under the action, with the induced pairing.
WedgeStructure wedge_quotient(const WedgeStructure& w, const Subgroup& n);

/// tau(G)/M-flat, realised as tau over W/M-flat.
std::shared_ptr<const TauGroup> tau_flat(const WedgeStructure& w, const Budgets& budgets = Budgets::defaults());

/// ker kappa / M-flat.
AbelianInvariants bogomolov(const WedgeStructure& w);

struct InducedTauMap {
  Morphism map;  // tau(H) -> tau(G)
  bool surjective = false;
  std::size_t kernel_order = 0;
  std::size_t generated_order = 0;  // order of <M, M*>[M, H*][H, M*]
  bool kernel_matches = false;
};

/// (a, b; w) -> (pi a, pi b; w-bar) and the comparison of its kernel with the
/// subgroup generated by M = ker pi in both coordinates and the commutators
/// [M, H*], [H, M*].
InducedTauMap induced_tau_epimorphism(const std::shared_ptr<const TauGroup>& th,
                                      const std::shared_ptr<const TauGroup>& tg, const Morphism& pi);

struct Epi2Result {
  std::shared_ptr<const TauGroup> tau;
  std::shared_ptr<const KTildeCoverGroup> ktilde;
  Morphism map;
};

/// tau(G) -> K~(G, 3) from an AI-automorphism of the cover H inverting M,
/// (a, b; c) -> (a, b; from H'[a'b' alpha(a'b' c)]). The map is verified to be
/// an isomorphism. Throws NotAI or HypothesisFailed.
Epi2Result epi2_isomorphism(const CoverData& c, const Morphism& alpha_h, const Budgets& budgets = Budgets::defaults());

struct KTildeViaTauFlat {
  std::shared_ptr<const TauGroup> tau_flat_h;
  QuotientResult quotient;  // tau-flat(H) / im iota
  std::size_t iota_image_order = 0;
};

/// K~(G,3) as tau-flat(H) / im iota with
/// iota(m1, m2) = m1 m2* prod [alpha^-1(h_i), alpha^-1(k_i)*], where
/// alpha(m1 m2) = m2^-1 m1^-1 prod [h_i, k_i]. Throws NotAI or
/// HypothesisFailed.
KTildeViaTauFlat ktilde_via_tauflat(const CoverData& c, const Morphism& alpha_h,
                                    const Budgets& budgets = Budgets::defaults());

}  // namespace wedgelab
