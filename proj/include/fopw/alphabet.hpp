#ifndef FOPW_ALPHABET_HPP
#define FOPW_ALPHABET_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fopw {

/// Index of a letter inside its alphabet.
using LetterId = int;

class OrderedAlphabet;
using AlphabetRef = std::shared_ptr<const OrderedAlphabet>;

/// A finite alphabet equipped with a partial order on letters.
///
/// The order is stored as a full relation matrix; constructors take an
/// arbitrary set of pairs, close it reflexively and transitively, and reject
/// inputs whose closure is not antisymmetric. Alphabets are immutable and
/// shared by reference; word-level operations require both words to use the
/// same alphabet object.
class OrderedAlphabet {
 public:
  static AlphabetRef make(const std::vector<std::string>& letters,
                          const std::vector<std::pair<std::string, std::string>>& order);

  /// Alphabet whose letters are all subsets of `predicates`, ordered by
  /// inclusion. Letter names are canonical: "{}", "{p}", "{p,q}" with the
  /// predicates sorted lexicographically.
  static AlphabetRef powerset(const std::vector<std::string>& predicates);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(LetterId a) const { return names_.at(a); }
  LetterId id(const std::string& name) const;
  std::optional<LetterId> find(const std::string& name) const;

  bool leq(LetterId a, LetterId b) const { return leq_[a * size() + b]; }
  /// All letters b with a <= b, in lexicographic name order.
  std::vector<LetterId> up_closure(LetterId a) const;
  bool trivial_order() const;

  bool is_powerset() const { return is_powerset_; }
  const std::vector<std::string>& predicates() const { return predicates_; }
  /// The singleton letter {p}, if this is a powerset alphabet and p is one of
  /// its predicates.
  std::optional<LetterId> singleton_letter(const std::string& predicate) const;
  bool letter_contains(LetterId a, const std::string& predicate) const;

  /// Letters sorted by name; used wherever output must be deterministic.
  const std::vector<LetterId>& lex_order() const { return lex_order_; }
  int lex_rank(LetterId a) const { return lex_rank_[a]; }

 private:
  OrderedAlphabet() = default;

  std::vector<std::string> names_;
  std::vector<char> leq_;
  std::vector<LetterId> lex_order_;
  std::vector<int> lex_rank_;
  bool is_powerset_ = false;
  std::vector<std::string> predicates_;
  std::vector<std::vector<std::string>> letter_predicates_;

  void finish();
};

/// A finite word. The empty word is valid.
struct Word {
  AlphabetRef alphabet;
  std::vector<LetterId> letters;

  size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  LetterId operator[](size_t i) const { return letters[i]; }

  bool operator==(const Word& other) const;
};

/// Componentwise order: |u| == |v| and u[i] <= v[i] at every position.
/// Throws if the words use different alphabet objects.
bool leq_word(const Word& u, const Word& v);

/// Lexicographic comparison by letter name, used for deterministic
/// enumeration orders. Shorter words are not implicitly smaller; callers
/// deal with length separately.
bool lex_less(const Word& u, const Word& v);

void require_same_alphabet(const Word& u, const Word& v);

// --- text formats ---------------------------------------------------------
//
// Alphabet files:
//     letters: a b c
//     order: a<b
//     order: b < c
// or, for powerset alphabets:
//     predicates: a b c
// '#' starts a comment line. Order lines accept "a<b" and "a < b".
//
// Words are whitespace-separated letter names: "a b a", "{a,b} {} {a}".
// The empty word is an empty (or all-whitespace) string.

AlphabetRef parse_alphabet_text(const std::string& text);
std::string alphabet_to_text(const OrderedAlphabet& a);
AlphabetRef load_alphabet_file(const std::string& path);

Word parse_word(const AlphabetRef& alphabet, const std::string& text);
std::string word_to_text(const Word& w);

}  // namespace fopw

#endif
