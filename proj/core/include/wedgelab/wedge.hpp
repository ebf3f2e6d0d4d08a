#pragma once

#include <functional>
#include <optional>
#include <string>

#include "wedgelab/abelian.hpp"
#include "wedgelab/budget.hpp"
#include "wedgelab/constructors.hpp"
#include "wedgelab/group.hpp"
#include "wedgelab/morphism.hpp"
#include "wedgelab/subgroup.hpp"

namespace wedgelab {

enum class WedgeStrategy { Auto, Abelian, Cover, DirectProduct, Generic, Hopf };

std::string to_string(WedgeStrategy s);
/// Accepts "auto", "abelian", "cover", "product", "generic", "hopf".
WedgeStrategy parse_wedge_strategy(const std::string& name);

/**
 * The exterior square G^G with its pairing G x G -> W, the action of G on W
 * and the commutator map kappa: W -> G.
 */
struct WedgeStructure {
  GroupPtr g;
  GroupPtr w;
  std::function<Elem(Elem, Elem)> pair_fn;  // (g, h) -> g^h
  std::function<Elem(Elem, Elem)> act_fn;   // (g, w) -> w^g
  Morphism kappa;
  WedgeStrategy strategy = WedgeStrategy::Auto;
  std::string detail;  // cover kind or similar provenance of the construction

  Elem pair(Elem a, Elem b) const { return pair_fn(a, b); }
  Elem act(Elem x, Elem w) const { return act_fn(x, w); }
};

struct WedgeOptions {
  WedgeStrategy strategy = WedgeStrategy::Auto;
  Budgets budgets = Budgets::defaults();
};

/// Bilinear alternating formula on an adapted basis of an abelian group.
WedgeStructure wedge_abelian(const GroupPtr& g);

/// W = H' for a Schur cover H, pairing by commutators of lifts.
WedgeStructure wedge_from_cover(const CoverData& c, std::size_t dense_cutoff = 5000);

/// Coset enumeration of the crossed-pairing presentation on the symbols
/// w_{g,h}. Throws BudgetExceeded when |G| exceeds the cap.
WedgeStructure wedge_generic(const GroupPtr& g, const Budgets& budgets = Budgets::defaults());

/// W = E' for the central extension E = F/[F,R] of G, with F/R a presentation
/// read off the Cayley graph and R/[F,R] reduced modulo the exponent of its
/// torsion subgroup. Throws BudgetExceeded beyond `budgets.hopf_wedge_cap`.
WedgeStructure wedge_hopf(const GroupPtr& g, const Budgets& budgets = Budgets::defaults());

/// Schur cover F/[F,R] modulo a complement of M in R/[F,R], from the same
/// rewriting as wedge_hopf. Throws BudgetExceeded beyond the Hopf cap.
CoverData hopf_cover(const GroupPtr& g, const Budgets& budgets = Budgets::defaults());

/// The family cover when one exists, otherwise hopf_cover.
CoverData any_schur_cover(const GroupPtr& g, const Budgets& budgets = Budgets::defaults());

/// One preimage under the cover projection for every element of G.
std::vector<Elem> cover_lifts(const CoverData& c);

/// G1 x G2 from the wedges of the factors plus the mixed part
/// G1^ab (x) G2^ab. `g` must be a ProductGroup over the factors' groups.
WedgeStructure wedge_direct_product(const GroupPtr& g, const WedgeStructure& w1, const WedgeStructure& w2,
                                    std::size_t dense_cutoff = 5000);

/// Cheapest applicable strategy unless one is forced by the options.
WedgeStructure wedge(const GroupPtr& g, const WedgeOptions& opts = {});

/// ker kappa.
Subgroup schur_multiplier(const WedgeStructure& w);

/// {g : g^x = 1 for every x}.
Subgroup epicentre(const WedgeStructure& w);

/// Subgroup of W generated by g^h over commuting pairs.
Subgroup mflat(const WedgeStructure& w);

/// G (x) G by the crossed-pairing presentation without the relations
/// w_{g,g} = 1. The returned structure has the tensor pairing.
WedgeStructure tensor_square(const GroupPtr& g, const Budgets& budgets = Budgets::defaults());

/// The isomorphism W_a -> W_b with pair_a(g,h) -> pair_b(g,h) for groups
/// over the same G, when it exists.
std::optional<Morphism> pairing_isomorphism(const WedgeStructure& a, const WedgeStructure& b);

/// The morphism W_a -> W_b with a.pair(x, y) -> b.pair(f(x), f(y)) for a
/// morphism f: G_a -> G_b, when it is well defined.
std::optional<Morphism> induced_wedge_map(const WedgeStructure& a, const WedgeStructure& b, const Morphism& f);

struct WedgeLawFailure {
  std::string law;
  Elem x, y, z;
};

/// Checks w(g,g) = 1, both biderivation laws, kappa(g^h) = [g,h] and that
/// act is an action fixing ker kappa. Exhaustive when |G| <= exhaustive_limit,
/// otherwise on `samples` random triples.
std::optional<WedgeLawFailure> check_wedge_laws(const WedgeStructure& w, std::size_t samples = 20000,
                                                std::size_t exhaustive_limit = 24, bool tensor = false);

}  // namespace wedgelab
