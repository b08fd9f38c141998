#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nuengine/perm_group.hpp"

namespace nuengine::fp {

struct GeneratorSymbol {
  std::string name;
  bool phi = false;  // marks the copy G^phi inside a nu presentation

  friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

struct Letter {
  std::size_t gen;
  long long exp;  // never zero in a reduced word

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Word in the generators of a presentation, kept freely reduced.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  static Word generator(std::size_t gen, long long exp = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  /// Total number of generator occurrences (sum of |exp|).
  std::size_t length() const;

  Word inverse() const;
  Word pow(long long e) const;
  Word operator*(const Word& rhs) const;
  Word& operator*=(const Word& rhs);

  /// Column sequence for coset enumeration: column 2g is g, 2g+1 is g^-1.
  std::vector<std::size_t> columns() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  void push(Letter l);
  std::vector<Letter> letters_;
};

/// x^y = y^-1 x y
Word conjugate(const Word& x, const Word& y);
/// [x,y] = x^-1 y^-1 x y
Word commutator(const Word& x, const Word& y);

struct Presentation {
  std::string name;
  std::vector<GeneratorSymbol> generators;
  std::vector<Word> relators;

  std::optional<std::size_t> find(std::string_view generator) const;
  std::string word_to_string(const Word& w) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses every `group NAME { gens: ...; rels: ...; }` block in the text.
std::vector<Presentation> parse_presentations(std::string_view text);
/// Parses text holding exactly one group block.
Presentation parse_presentation(std::string_view text);
std::string serialize(const Presentation& p);

// ---- coset enumeration ----------------------------------------------------

enum class Strategy { kHlt, kFelsch };
enum class EnumerationStatus { kComplete, kOverflow };

struct EnumerationOptions {
  std::size_t cap = 50000;  // live cosets
  Strategy strategy = Strategy::kHlt;
};

class CosetTable {
 public:
  static constexpr std::int32_t kUndefined = -1;

  EnumerationStatus status() const { return status_; }
  bool complete() const { return status_ == EnumerationStatus::kComplete; }
  std::size_t num_cosets() const { return num_cosets_; }
  std::size_t num_columns() const { return columns_; }
  std::size_t max_defined() const { return max_defined_; }
  const std::vector<GeneratorSymbol>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }

  /// Coset reached from `coset` by column `col` (2g for g, 2g+1 for g^-1).
  std::int32_t at(std::size_t coset, std::size_t col) const {
    return entries_[coset * columns_ + col];
  }
  /// Word leading from coset 0 to `coset` along the standardized spanning tree.
  Word coset_word(std::size_t coset) const;

 private:
  friend CosetTable todd_coxeter(const Presentation&, std::span<const Word>,
                                 const EnumerationOptions&);
  std::vector<GeneratorSymbol> generators_;
  std::vector<Word> relators_;
  std::size_t columns_ = 0;
  std::vector<std::int32_t> entries_;
  std::size_t num_cosets_ = 0;
  std::size_t max_defined_ = 0;
  EnumerationStatus status_ = EnumerationStatus::kOverflow;
  std::vector<std::int32_t> tree_parent_;
  std::vector<std::int32_t> tree_column_;
};

/// Coset enumeration of the subgroup generated by `subgroup_gens`. Coset 0 is
/// the subgroup; a complete table is in standard (breadth-first) numbering.
CosetTable todd_coxeter(const Presentation& p, std::span<const Word> subgroup_gens,
                        const EnumerationOptions& options = {});

struct Realization {
  PermGroup group;
  std::vector<Permutation> images;  // one per presentation generator

  const Permutation& image(std::string_view name,
                           const std::vector<GeneratorSymbol>& gens) const;
};

/// Permutation action on the cosets; each relator is checked to act trivially.
/// `order_bound`, when given, is passed to the stabilizer-chain build.
Realization table_to_permgroup(const CosetTable& table,
                               std::optional<Order> order_bound = std::nullopt);

Permutation evaluate(const Word& w, std::span<const Permutation> images,
                     std::size_t degree);

/// True iff every relator of p maps to the identity and every image lies in
/// `target`, i.e. the images define a homomorphism from the presented group.
bool von_dyck_check(const Presentation& p, std::span<const Permutation> images,
                    const PermGroup& target);

/// Order of the presented group by enumeration over the trivial subgroup.
/// Throws EnumerationOverflow when the cap is hit.
Order presented_order(const Presentation& p, const EnumerationOptions& options = {});

class EnumerationOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decides g/n = <h_pres> with generator i of h_pres sent to the coset of
/// candidates[i]: same order, relators land in n, and the candidates together
/// with n generate g. Throws if n is not normal in g.
bool check_quotient_isomorphic(const PermGroup& g, const PermGroup& n,
                               const Presentation& h_pres,
                               std::span<const Permutation> candidates,
                               const EnumerationOptions& options = {});
/// Same, with the first generators of g as candidates.
bool check_quotient_isomorphic(const PermGroup& g, const PermGroup& n,
                               const Presentation& h_pres,
                               const EnumerationOptions& options = {});

}  // namespace nuengine::fp
