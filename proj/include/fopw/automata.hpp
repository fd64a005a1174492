#ifndef FOPW_AUTOMATA_HPP
#define FOPW_AUTOMATA_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fopw/alphabet.hpp"

namespace fopw {

struct Nfa {
  AlphabetRef alphabet;
  int num_states = 0;
  std::vector<int> initial;
  std::vector<int> final;
  struct Trans {
    int from;
    LetterId letter;
    int to;
    bool operator==(const Trans&) const = default;
  };
  std::vector<Trans> transitions;

  bool accepts(const Word& w) const;
};

/// Complete DFA; delta[state][letter] is total.
struct Dfa {
  AlphabetRef alphabet;
  int num_states = 0;
  int initial = 0;
  std::vector<char> final;
  std::vector<std::vector<int>> delta;

  bool accepts(const Word& w) const;
  Nfa to_nfa() const;
};

/// Replaces every transition p -a-> q by p -b-> q for each b >= a. The
/// result recognizes the upward closure of L(a) under the componentwise
/// word order.
Nfa nfa_closure(const Nfa& a);

struct InclusionResult {
  bool included = false;
  /// Shortest word of L(a) \ L(b); ties broken lexicographically by letter
  /// name.
  std::optional<Word> counterexample;
};
InclusionResult language_included(const Nfa& a, const Nfa& b);
bool language_equal(const Nfa& a, const Nfa& b);

struct MonotoneResult {
  bool monotone = false;
  /// u in L(a), u <= v, v not in L(a); v is the shortest such word (ties
  /// lexicographic), u the lexicographically least accepted word below v.
  std::optional<std::pair<Word, Word>> witness;
};
MonotoneResult is_monotone(const Nfa& a);

/// Builds an NFA for a L_fresh* + b L(a) over the alphabet of a extended
/// with two fresh letters "a" and "b", ordered a < b (the only nontrivial
/// pair). The result is monotone iff a is universal. Throws if the input
/// alphabet already uses the fresh names.
Nfa hardness_instance(const Nfa& a);

Dfa determinize(const Nfa& a);
Dfa minimize(const Dfa& d);
Dfa complement(const Dfa& d);
bool is_empty(const Nfa& a);
std::vector<char> reachable_states(const Nfa& a);
std::vector<char> coreachable_states(const Nfa& a);

struct TransitionMonoid {
  AlphabetRef alphabet;
  /// Each element is a transformation of the automaton states.
  std::vector<std::vector<int>> elements;
  int identity = 0;
  std::vector<int> letter_element;
  std::vector<std::vector<int>> table;
  /// A shortest word realizing each element (ties lexicographic).
  std::vector<std::vector<LetterId>> element_word;

  int compose(int x, int y) const { return table[x][y]; }
  /// m is aperiodic when m^k = m^{k+1} for some k.
  bool aperiodic() const;
};

TransitionMonoid transition_monoid(const Dfa& d);
/// Transition monoid of the minimized automaton.
TransitionMonoid syntactic_monoid(const Dfa& d);

/// True when no word induces a nontrivial cycle on any state of the
/// reachable part of d (orbit check, independent of syntactic_monoid).
bool is_counter_free(const Dfa& d);

/// Accepted words of length <= maxlen, in length-then-lexicographic order.
/// maxlen beyond the cap is an error.
std::vector<Word> enumerate_language(const Nfa& a, int maxlen, int maxlen_cap = 12);

/// True when some word u <= v (componentwise) is accepted.
bool accepts_some_below(const Nfa& a, const Word& v);

// epsilon-free combinators
Nfa nfa_none(const AlphabetRef& alphabet);
Nfa nfa_epsilon(const AlphabetRef& alphabet);
Nfa nfa_letters(const AlphabetRef& alphabet, const std::vector<LetterId>& letters);
Nfa nfa_union(const Nfa& a, const Nfa& b);
Nfa nfa_concat(const Nfa& a, const Nfa& b);
Nfa nfa_star(const Nfa& a);
Nfa nfa_opt(const Nfa& a);

// --- text format -----------------------------------------------------------
//
//     nfa
//     states: q0 q1
//     initial: q0
//     final: q1
//     q0 -a-> q1
//
// The header is "nfa" or "dfa"; a "dfa" file must be deterministic and
// complete. '#' alone on the first non-space column starts a comment only
// when it is not a transition line; letter names may themselves be "#".

Nfa parse_automaton_text(const AlphabetRef& alphabet, const std::string& text);
std::string nfa_to_text(const Nfa& a);
std::string dfa_to_text(const Dfa& d);
Nfa load_automaton_file(const AlphabetRef& alphabet, const std::string& path);

/// Graphviz dot rendering (nodes and labelled edges).
std::string to_dot(const Nfa& a);

}  // namespace fopw

#endif
