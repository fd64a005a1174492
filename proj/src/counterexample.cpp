#include "fopw/counterexample.hpp"

#include <stdexcept>

namespace fopw {

namespace {

KContext build_context() {
  KContext k;
  k.alphabet = OrderedAlphabet::powerset({"a", "b", "c"});
  k.la = k.alphabet->id("{a}");
  k.lb = k.alphabet->id("{b}");
  k.lc = k.alphabet->id("{c}");
  k.lab = k.alphabet->id("{a,b}");
  k.lbc = k.alphabet->id("{b,c}");
  k.lca = k.alphabet->id("{a,c}");
  k.top = k.alphabet->id("{a,b,c}");
  k.bottom = k.alphabet->id("{}");

  // States 0,1,2 await a letter containing a, b, c in rotation; 3 is reached
  // after {a,b,c}; 4 is the sink for a broken rotation.
  const int expect_a = 0, expect_b = 1, expect_c = 2, seen_top = 3, dead = 4;
  k.dfa.alphabet = k.alphabet;
  k.dfa.num_states = 5;
  k.dfa.initial = expect_a;
  k.dfa.final.assign(5, 0);
  k.dfa.final[expect_a] = 1;
  k.dfa.final[seen_top] = 1;
  k.dfa.delta.assign(5, std::vector<int>(k.alphabet->size(), dead));
  for (LetterId l = 0; l < static_cast<LetterId>(k.alphabet->size()); ++l) {
    if (l == k.top) {
      for (int s = 0; s < 5; ++s) k.dfa.delta[s][l] = seen_top;
      continue;
    }
    k.dfa.delta[expect_a][l] = k.alphabet->letter_contains(l, "a") ? expect_b : dead;
    k.dfa.delta[expect_b][l] = k.alphabet->letter_contains(l, "b") ? expect_c : dead;
    k.dfa.delta[expect_c][l] = k.alphabet->letter_contains(l, "c") ? expect_a : dead;
    k.dfa.delta[seen_top][l] = seen_top;
    k.dfa.delta[dead][l] = dead;
  }

  Nfa any = nfa_letters(k.alphabet, k.alphabet->lex_order());
  Nfa rotation = nfa_star(
      nfa_concat(nfa_letters(k.alphabet, k.alphabet->up_closure(k.la)),
                 nfa_concat(nfa_letters(k.alphabet, k.alphabet->up_closure(k.lb)),
                            nfa_letters(k.alphabet, k.alphabet->up_closure(k.lc)))));
  Nfa with_top = nfa_concat(
      nfa_star(any), nfa_concat(nfa_letters(k.alphabet, {k.top}), nfa_star(any)));
  k.pattern_nfa = nfa_union(rotation, with_top);
  return k;
}

}  // namespace

const KContext& k_context() {
  static const KContext k = build_context();
  return k;
}

bool k_member(const Word& w) {
  const KContext& k = k_context();
  if (w.alphabet != k.alphabet)
    throw std::runtime_error("word is not over the K alphabet");
  return k.dfa.accepts(w);
}

std::pair<Word, Word> build_ce_pair(int n) {
  if (n < 0) throw std::runtime_error("n must be nonnegative");
  if (n > 20) throw std::runtime_error("n too large for build_ce_pair");
  const KContext& k = k_context();
  long blocks = 1L << n;
  Word u{k.alphabet, {}};
  Word v{k.alphabet, {}};
  u.letters.reserve(3 * blocks);
  v.letters.reserve(3 * blocks - 1);
  for (long i = 0; i < blocks; ++i) {
    u.letters.push_back(k.la);
    u.letters.push_back(k.lb);
    u.letters.push_back(k.lc);
    v.letters.push_back(k.lab);
    v.letters.push_back(k.lbc);
    v.letters.push_back(k.lca);
  }
  v.letters.pop_back();
  return {std::move(u), std::move(v)};
}

}  // namespace fopw
