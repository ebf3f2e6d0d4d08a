#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wedgelab/group.hpp"

namespace wedgelab {

struct Letter {
  std::uint32_t gen;
  std::int32_t exp;  // nonzero
  bool operator==(const Letter&) const = default;
};

/// Freely reduced word in the generators of a presentation.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);  // reduces on construction

  static Word generator(std::uint32_t gen, std::int32_t exp = 1);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  /// Sum of absolute exponents.
  std::size_t length() const noexcept;

  Word inverse() const;
  Word pow(std::int64_t k) const;
  Word conjugate_by(const Word& w) const;  // w^-1 * this * w
  Word operator*(const Word& o) const;
  bool operator==(const Word&) const = default;

  /// Letters as signed generator steps: +(g+1) or -(g+1), one per unit exponent.
  std::vector<std::int32_t> expand() const;
  std::string to_string(std::span<const std::string> names) const;

 private:
  std::vector<Letter> letters_;
};

Word commutator(const Word& x, const Word& y);  // x^-1 y^-1 x y

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::size_t num_generators() const noexcept { return generators.size(); }
  /// Index of a generator name, or npos.
  std::size_t find(std::string_view name) const;
  std::string to_string() const;
};

/// Parses "gens: a b ; rels: a^2, b^2, [a,b]". The generator and relator
/// sections may also be separated by a newline. Throws ParseError.
Presentation parse_presentation(std::string_view text);

enum class CosetStrategy { HLT, Felsch };

struct CosetTable {
  enum class Status { Complete, Overflowed };
  Status status = Status::Overflowed;
  std::size_t num_generators = 0;
  /// action[j][c]: coset reached from coset c by generator j. Coset 0 is the
  /// subgroup itself. Filled only when Complete.
  std::vector<std::vector<Elem>> action;
  std::size_t max_active = 0;   // peak number of live cosets
  std::size_t total_defined = 0;

  std::size_t index() const { return action.empty() ? 1 : action.front().size(); }
  bool complete() const { return status == Status::Complete; }
};

struct EnumerationOptions {
  std::size_t max_cosets = 2'000'000;
  CosetStrategy strategy = CosetStrategy::HLT;
  /// Cap on table entries (cosets x columns) to bound memory.
  std::size_t max_table_entries = 400'000'000;
};

/// Enumerates the cosets of the subgroup generated by `subgroup` in the group
/// presented by `p`. Coset numbering of the result is deterministic.
CosetTable todd_coxeter(const Presentation& p, std::span<const Word> subgroup, const EnumerationOptions& opts);
CosetTable todd_coxeter(const Presentation& p, std::span<const Word> subgroup, std::size_t max_cosets);

/// Dense group from the regular coset table; generators() is aligned with
/// the presentation's generators. Throws BudgetExceeded on overflow.
std::shared_ptr<DenseGroup> realize(const Presentation& p, const EnumerationOptions& opts);
std::shared_ptr<DenseGroup> realize(const Presentation& p, std::size_t max_cosets = 2'000'000);

/// Value of a word under a generator substitution.
Elem evaluate(const Word& w, const Group& g, std::span<const Elem> images);

/// True iff every relator evaluates to the identity.
bool verify_relator_images(const Presentation& p, const Group& g, std::span<const Elem> images);

/// Adds the images of all relators under generator inversion, repeating until
/// the realized order stops changing.
Presentation ai_closure(const Presentation& p, std::size_t max_cosets = 2'000'000);

/// Removes generators that are trivial or equal to another generator (up to
/// inversion) according to relators of length at most 2. `substitution`
/// receives, for each original generator, a word in the new generators.
Presentation eliminate_redundant_generators(const Presentation& p, std::vector<Word>* substitution);

}  // namespace wedgelab
