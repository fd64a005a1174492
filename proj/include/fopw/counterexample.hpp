#ifndef FOPW_COUNTEREXAMPLE_HPP
#define FOPW_COUNTEREXAMPLE_HPP

#include <utility>

#include "fopw/alphabet.hpp"
#include "fopw/automata.hpp"

namespace fopw {

/// The running counterexample language K lives over the powerset alphabet of
/// the predicates {a, b, c}. A word belongs to K when either some position
/// carries the full letter {a,b,c}, or the word has length 3k and position i
/// contains the (i mod 3)-th predicate of a, b, c.
struct KContext {
  AlphabetRef alphabet;
  LetterId la, lb, lc;     // singletons {a}, {b}, {c}
  LetterId lab, lbc, lca;  // two-element letters
  LetterId top;            // {a,b,c}
  LetterId bottom;         // {}
  Dfa dfa;                 // five-state recognizer of K
  Nfa pattern_nfa;         // independently built from the defining pattern
};

const KContext& k_context();

bool k_member(const Word& w);

/// The doubling word pair: u = ({a}{b}{c})^(2^n) of length 3 * 2^n, and v the
/// same pattern over the two-element letters {a,b} {b,c} {c,a}, cut to length
/// 3 * 2^n - 1. u is in K, v is not, and Duplicator survives n rounds.
std::pair<Word, Word> build_ce_pair(int n);

}  // namespace fopw

#endif
