#ifndef FOPW_LOGIC_HPP
#define FOPW_LOGIC_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fopw/alphabet.hpp"

namespace fopw {

/// fo allows negation; foplus does not.
enum class Dialect { foplus, fo };

/// Immutable formula tree. Letter atoms test "letter(position) dominates a",
/// so on powerset alphabets an atom for {p} means "the label contains p".
class Formula {
 public:
  enum class Kind { True, False, Atom, Le, Lt, Not, And, Or, Exists, Forall };
  struct Node;  // defined in logic.cpp

  Formula() = default;

  static Formula truth(AlphabetRef a);
  static Formula falsity(AlphabetRef a);
  static Formula atom(AlphabetRef a, LetterId letter, std::string var);
  static Formula le(AlphabetRef a, std::string x, std::string y);
  static Formula lt(AlphabetRef a, std::string x, std::string y);
  static Formula negation(Formula f);
  static Formula conj(Formula f, Formula g);
  static Formula disj(Formula f, Formula g);
  static Formula exists(std::string var, Formula f);
  static Formula forall(std::string var, Formula f);

  bool valid() const { return node_ != nullptr; }
  Kind kind() const;
  const AlphabetRef& alphabet() const;

  LetterId atom_letter() const;
  const std::string& atom_var() const;
  const std::string& var1() const;  // Le/Lt left side; quantifier variable
  const std::string& var2() const;
  const Formula& child(size_t i = 0) const;  // Not/quantifier: 0; And/Or: 0,1

  bool operator==(const Formula& other) const;  // structural, same alphabet
  bool uses_negation() const;
  std::vector<std::string> free_variables() const;  // sorted, unique

 private:
  friend struct NodeAccess;
  std::shared_ptr<const Node> node_;
};

/// Parses the formula grammar:
///
///     formula := or
///     or      := and ('|' and)*
///     and     := unary ('&' unary)*
///     unary   := '!' unary | ('E'|'A') var '.' formula | primary
///     primary := '(' formula ')' | 'true' | 'false'
///              | NAME '(' var ')' | var '<=' var | var '<' var
///
/// Quantifier scope extends maximally to the right. NAME is a letter name,
/// or a predicate name on powerset alphabets. '<' starts a letter name only
/// when a matching '>' follows with a '/' in between (ambiguous reduction
/// letters); otherwise it is the strict comparison. '!' is rejected under
/// Dialect::foplus. Variable shadowing is allowed; the inner binding wins.
Formula parse_formula(const AlphabetRef& alphabet, const std::string& text,
                      Dialect dialect = Dialect::foplus);

/// Inverse of parse_formula: parse_formula(print_formula(f)) == f.
std::string print_formula(const Formula& f);

int quantifier_rank(const Formula& f);

/// Evaluates on a word; valuation gives positions of free variables.
/// Unbound free variables and out-of-range positions are errors. Quantifiers
/// range over the positions of w, so on the empty word Exists is false and
/// Forall is true.
bool evaluate(const Formula& f, const Word& w,
              const std::map<std::string, size_t>& valuation = {});

/// All words of length <= maxlen satisfying the closed formula f, in
/// length-then-lexicographic order.
std::vector<Word> defined_language(const Formula& f, int maxlen, int maxlen_cap = 12);

/// Rewrites an FO formula over a trivially ordered alphabet into an
/// equivalent negation-free one of the same quantifier rank: negations are
/// pushed to the leaves, negated letter atoms become disjunctions over the
/// other letters, and negated comparisons flip.
Formula fo_to_foplus_trivial_order(const Formula& f);

/// Deterministic pseudo-random closed FO+ formula of quantifier rank at most
/// rank. rank 0 yields constant-based formulas.
Formula sample_formula(const AlphabetRef& alphabet, int rank, uint64_t seed,
                       int rank_cap = 3);

}  // namespace fopw

#endif
