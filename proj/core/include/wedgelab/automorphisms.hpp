#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wedgelab/budget.hpp"
#include "wedgelab/constructors.hpp"
#include "wedgelab/group.hpp"
#include "wedgelab/morphism.hpp"

namespace wedgelab {

enum class SearchMode { FindOne, Exhaust };

struct AutSearchBudget {
  std::uint64_t max_nodes = 20'000'000;
  std::uint64_t millis = 120'000;
  SearchMode mode = SearchMode::Exhaust;

  static AutSearchBudget from(const Budgets& b, SearchMode mode = SearchMode::Exhaust);
};

/// Three-valued answer: Unknown means a budget ran out, never nonexistence.
enum class Answer { Yes, No, Unknown };
std::string to_string(Answer a);

/// Greedy generating set, largest element order first. At most `cap`
/// generators when the greedy pass achieves it; otherwise the pass is
/// repeated without the cap.
std::vector<Elem> search_generators(const Group& g, std::size_t cap = 6);

struct AutSearchStats {
  std::uint64_t nodes = 0;
  std::size_t visited = 0;  // automorphisms handed to the visitor
  bool complete = false;    // the search tree was exhausted or the visitor stopped it
};

/// Candidate filter: may image y be assigned to generator i?
using ImageFilter = std::function<bool(std::size_t i, Elem y)>;

/**
 * Backtracks over images of `gens`, pruned by element order, conjugacy class
 * size, injectivity and consistency on the subgroup generated so far. Each
 * automorphism is passed to `visit`, which returns false to stop. The
 * morphisms carry a full table.
 */
AutSearchStats for_each_automorphism(const GroupPtr& g, std::span<const Elem> gens, const AutSearchBudget& budget,
                                     const ImageFilter& filter, const std::function<bool(const Morphism&)>& visit);

/// The same search for isomorphisms src -> tgt; `gens` generate src.
AutSearchStats for_each_isomorphism(const GroupPtr& src, const GroupPtr& tgt, std::span<const Elem> gens,
                                    const AutSearchBudget& budget, const ImageFilter& filter,
                                    const std::function<bool(const Morphism&)>& visit);

struct AutomorphismList {
  std::vector<Morphism> list;
  bool complete = false;
  std::uint64_t nodes = 0;
};

/// Every automorphism (Exhaust) or the first one found (FindOne).
AutomorphismList automorphisms(const GroupPtr& g, const AutSearchBudget& budget);

struct AutQuery {
  Answer answer = Answer::Unknown;
  std::optional<Morphism> witness;
  std::uint64_t nodes = 0;
  std::string certificate;  // how a Yes or No was established
};

/// alpha(x) = x^-1 for every x in `xs`.
bool inverts_all(const Morphism& alpha, std::span<const Elem> xs);

/// An automorphism inducing inversion on G/G'.
AutQuery has_ai(const GroupPtr& g, const AutSearchBudget& budget);

/// The automorphism inverting every member of `xs`, which must generate G.
/// The candidate is unique, so the answer is never Unknown.
AutQuery has_gi(const GroupPtr& g, std::span<const Elem> xs);

/// An AI-automorphism of the cover with alpha(m) = m^-1 on M.
AutQuery ai_lift_inverting_M(const CoverData& c, const AutSearchBudget& budget);

/// For a cover of nilpotency class at most 2, an AI-automorphism acts
/// trivially on H', since [x^-1 u, y^-1 v] = [x, y] for central u, v. True
/// when this rules out an AI-automorphism inverting M (M not of exponent
/// dividing 2).
bool class_two_lift_obstruction(const CoverData& c);

/// The automorphism of G = H/M induced by an automorphism of H with
/// alpha(M) = M. Throws HypothesisFailed otherwise.
Morphism descend_to_quotient(const CoverData& c, const Morphism& alpha);

struct HolderCriterion {
  bool has_ai = false;
  bool square_free = false;
  /// Cyclic Hall 2'-subgroup, reported for square-free orders.
  std::optional<bool> cyclic_odd_hall;
};

/// Closed form for C_n x| C_m with a^b = a^r: abelian, or n even with
/// r^2 = 1 mod m and gcd(r+1, m) != 1. Throws ParameterViolation.
HolderCriterion holder_ai_criterion(std::int64_t n, std::int64_t m, std::int64_t r);

}  // namespace wedgelab
