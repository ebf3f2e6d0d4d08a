#pragma once

#include <cstddef>
#include <cstdint>

namespace wedgelab {

/// Size and search limits shared by the library. Every limit is a budget, not
/// a mathematical bound: exceeding one raises BudgetExceeded or yields Unknown.
struct Budgets {
  std::size_t dense_cutoff = 5000;          // largest group stored as a Cayley table
  std::size_t max_cosets = 2'000'000;       // Todd-Coxeter coset budget
  std::uint64_t search_nodes = 20'000'000;  // backtracking nodes per search
  std::uint64_t search_millis = 120'000;    // wall-clock limit per search
  std::size_t generic_wedge_cap = 16;       // largest |G| for the crossed-pairing wedge
  std::size_t hopf_wedge_cap = 400;         // largest |G| for the Hopf-formula wedge
  std::size_t iso_search_cap = 2000;        // largest order for isomorphism backtracking
  std::size_t fingerprint_cap = 1'000'000;  // largest structured group to fingerprint
  std::size_t structured_cap = 50'000'000;  // largest structured functor group

  /// Library defaults multiplied by the WEDGELAB_BUDGET_SCALE environment
  /// variable when it is set to a positive number.
  static Budgets defaults();

  Budgets scaled(double factor) const;
};

}  // namespace wedgelab
