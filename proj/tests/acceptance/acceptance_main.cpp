#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fopw/alphabet.hpp"
#include "fopw/automata.hpp"
#include "fopw/counterexample.hpp"
#include "fopw/efgame.hpp"
#include "fopw/intgame.hpp"
#include "fopw/logic.hpp"
#include "fopw/reduction.hpp"

namespace {

using namespace fopw;

void check(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

const char* kWalkerText =
    "gamma: 0 1\n"
    "states: p1/1 p2/2 p3/3\n"
    "p1 0 -> p2 1 R\n"
    "p2 0 -> p3 1 R\n"
    "p3 0 -> p1 1 R\n";

const char* kBouncerText =
    "gamma: 0 1\n"
    "states: p1/1 q2/2 p3/3 q1/1 p2/2 q3/3\n"
    "p1 0 -> q2 0 R\n"
    "q2 0 -> p3 0 L\n"
    "p3 0 -> q1 0 R\n"
    "q1 0 -> p2 0 L\n"
    "p2 0 -> q3 0 R\n"
    "q3 0 -> p1 0 L\n";

// --- randomized fixtures -----------------------------------------------------

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(uint64_t seed) : eng(seed) {}
  int upto(int n) { return std::uniform_int_distribution<int>(0, n - 1)(eng); }
};

AlphabetRef random_alphabet(Rng& rng) {
  static const std::vector<std::string> pool{"a", "b", "c", "d"};
  int k = 2 + rng.upto(3);
  std::vector<std::string> names(pool.begin(), pool.begin() + k);
  std::vector<std::pair<std::string, std::string>> order;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (rng.upto(5) < 2) order.push_back({names[i], names[j]});
  return OrderedAlphabet::make(names, order);
}

Nfa random_nfa(Rng& rng, const AlphabetRef& alphabet, int max_states) {
  Nfa a;
  a.alphabet = alphabet;
  a.num_states = 1 + rng.upto(max_states);
  a.initial.push_back(0);
  for (int s = 0; s < a.num_states; ++s)
    if (rng.upto(2)) a.final.push_back(s);
  int letters = alphabet->size();
  int count = rng.upto(2 * a.num_states * letters + 1);
  for (int t = 0; t < count; ++t)
    a.transitions.push_back(
        {rng.upto(a.num_states), rng.upto(letters), rng.upto(a.num_states)});
  return a;
}

// Accept bits for every word of each length, indexed by the base-k digit
// code with position 0 as the least significant digit.
struct BoundedScan {
  std::vector<std::vector<char>> accept;  // accept[len][code]
  std::vector<std::vector<char>> below;   // some accepted word lies below
};

BoundedScan bounded_scan(const Nfa& a, int maxlen) {
  const OrderedAlphabet& al = *a.alphabet;
  int k = al.size();
  std::vector<std::vector<int>> lower(k);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      if (y != x && al.leq(y, x)) lower[x].push_back(y);

  BoundedScan scan;
  scan.accept.resize(maxlen + 1);
  scan.below.resize(maxlen + 1);
  for (int len = 0; len <= maxlen; ++len) {
    long total = 1;
    for (int i = 0; i < len; ++i) total *= k;
    std::vector<char>& acc = scan.accept[len];
    std::vector<char>& blw = scan.below[len];
    acc.resize(total);
    blw.resize(total);

    std::vector<long> pw(len + 1, 1);
    for (int i = 0; i < len; ++i) pw[i + 1] = pw[i] * k;

    std::vector<LetterId> letters(len);
    // Rank each word by how many letters sit strictly under its letters;
    // replacing a letter by a smaller one strictly lowers the rank, so a
    // rank-ordered pass makes the one-position recurrence sound.
    std::vector<std::vector<long>> buckets(len * k + 1);
    for (long code = 0; code < total; ++code) {
      long rest = code;
      int rank = 0;
      for (int i = 0; i < len; ++i) {
        letters[i] = static_cast<LetterId>(rest % k);
        rank += static_cast<int>(lower[letters[i]].size());
        rest /= k;
      }
      acc[code] = a.accepts(Word{a.alphabet, letters}) ? 1 : 0;
      buckets[rank].push_back(code);
    }
    for (const auto& bucket : buckets)
      for (long code : bucket) {
        char reach = acc[code];
        for (int i = 0; i < len && !reach; ++i) {
          int digit = static_cast<int>((code / pw[i]) % k);
          for (int b : lower[digit])
            if (blw[code + static_cast<long>(b - digit) * pw[i]]) {
              reach = 1;
              break;
            }
        }
        blw[code] = reach;
      }
  }
  return scan;
}

// All (u, v) with u <= v componentwise and |u| <= maxlen.
std::vector<std::pair<Word, Word>> comparable_pairs(const AlphabetRef& alphabet,
                                                    int maxlen) {
  int k = alphabet->size();
  std::vector<std::pair<Word, Word>> out;
  for (int len = 0; len <= maxlen; ++len) {
    long total = 1;
    for (int i = 0; i < len; ++i) total *= k;
    std::vector<LetterId> lu(len), lv(len);
    for (long cu = 0; cu < total; ++cu) {
      long rest = cu;
      for (int i = 0; i < len; ++i) {
        lu[i] = static_cast<LetterId>(rest % k);
        rest /= k;
      }
      for (long cv = 0; cv < total; ++cv) {
        rest = cv;
        bool leq = true;
        for (int i = 0; i < len && leq; ++i) {
          lv[i] = static_cast<LetterId>(rest % k);
          leq = alphabet->leq(lu[i], lv[i]);
          rest /= k;
        }
        if (leq) {
          rest = cv;
          for (int i = 0; i < len; ++i) {
            lv[i] = static_cast<LetterId>(rest % k);
            rest /= k;
          }
          out.push_back({Word{alphabet, lu}, Word{alphabet, lv}});
        }
      }
    }
  }
  return out;
}

// --- configuration enumeration ------------------------------------------------

// Builds every configuration of the given tape length directly from the
// machine: pick the head cell, the transition that entered it, the symbol
// under the head (its outgoing transition must exist), and free symbols for
// the remaining cells. Validated against the brute-force filter at small
// lengths before being trusted at larger ones.
std::vector<ConfigWord> build_configs(const ReductionContext& ctx, int len) {
  const TuringMachine& m = ctx.machine();
  int nsym = static_cast<int>(m.tape_symbols.size());
  std::vector<ConfigWord> out;
  for (int head = 0; head < len; ++head)
    for (int tin = 0; tin < static_cast<int>(m.transitions.size()); ++tin) {
      const TmTransition& in = m.transitions[tin];
      int state = in.to_state;
      int sub_pos = head - in.dir;
      if (sub_pos < 0 || sub_pos >= len) continue;
      for (int g = 0; g < nsym; ++g) {
        auto tnext = m.transition_from(state, g);
        if (!tnext) continue;
        int sup_pos = head + m.transitions[*tnext].dir;
        if (sup_pos < 0 || sup_pos >= len) continue;
        bool merged = sub_pos == sup_pos;
        std::vector<int> free_cells;
        for (int i = 0; i < len; ++i)
          if (i != head && i != sub_pos && i != sup_pos) free_cells.push_back(i);
        int sup_choices = merged ? 1 : nsym;
        long combos = 1;
        for (size_t i = 0; i < free_cells.size(); ++i) combos *= nsym;
        for (int s2 = 0; s2 < sup_choices; ++s2)
          for (long bits = 0; bits < combos; ++bits) {
            std::vector<LetterId> letters(len);
            letters[head] = ctx.head(state, g);
            if (merged) {
              letters[sub_pos] = ctx.subsup(in.write, tin, *tnext);
            } else {
              letters[sub_pos] = ctx.sub(in.write, tin);
              letters[sup_pos] = ctx.sup(s2, *tnext);
            }
            long rest = bits;
            for (int cell : free_cells) {
              letters[cell] = ctx.plain(static_cast<int>(rest % nsym));
              rest /= nsym;
            }
            Word w{ctx.alphabet(), letters};
            if (auto cfg = as_configuration(ctx, w)) out.push_back(std::move(*cfg));
          }
      }
    }
  return out;
}

// Filters every word of the given length through as_configuration.
std::vector<ConfigWord> brute_configs(const ReductionContext& ctx, int len) {
  std::vector<ConfigWord> out;
  int nl = ctx.alphabet()->size();
  std::vector<LetterId> cur(len, 0);
  while (true) {
    Word w{ctx.alphabet(), cur};
    if (auto cfg = as_configuration(ctx, w)) out.push_back(std::move(*cfg));
    int i = 0;
    for (; i < len; ++i) {
      if (++cur[i] < nl) break;
      cur[i] = 0;
    }
    if (i == len) break;
  }
  return out;
}

std::vector<std::string> config_keys(const ReductionContext& ctx,
                                     const std::vector<ConfigWord>& configs) {
  std::vector<std::string> keys;
  keys.reserve(configs.size());
  for (const ConfigWord& c : configs)
    keys.push_back(word_to_text(c.word) + "|" + std::to_string(c.head) + "|" +
                   std::to_string(c.state) + "|" + std::to_string(c.type));
  std::sort(keys.begin(), keys.end());
  return keys;
}

// --- criteria ------------------------------------------------------------------

std::string criterion1() {
  const KContext& k = k_context();
  Dfa minimal = minimize(k.dfa);
  check(minimal.num_states == 5, "minimal recognizer has " +
                                     std::to_string(minimal.num_states) +
                                     " states, expected 5");

  const Nfa& pattern = k.pattern_nfa;
  check(pattern.num_states <= 64, "pattern automaton too large for bitmask walk");
  uint64_t init = 0, accepting = 0;
  for (int s : pattern.initial) init |= uint64_t(1) << s;
  for (int s : pattern.final) accepting |= uint64_t(1) << s;
  int letters = k.alphabet->size();
  std::vector<uint64_t> step(
      static_cast<size_t>(pattern.num_states) * letters, 0);
  for (const auto& t : pattern.transitions)
    step[static_cast<size_t>(t.from) * letters + t.letter] |= uint64_t(1) << t.to;

  long words = 0;
  std::function<void(int, uint64_t, int)> walk = [&](int ds, uint64_t ns,
                                                     int depth) {
    ++words;
    bool dfa_accepts = k.dfa.final[ds];
    bool pattern_accepts = (ns & accepting) != 0;
    check(dfa_accepts == pattern_accepts,
          "recognizer and pattern automaton disagree at depth " +
              std::to_string(depth));
    if (depth == 7) return;
    for (int a = 0; a < letters; ++a) {
      uint64_t next = 0;
      for (uint64_t rest = ns; rest; rest &= rest - 1) {
        int s = std::countr_zero(rest);
        next |= step[static_cast<size_t>(s) * letters + a];
      }
      walk(k.dfa.delta[ds][a], next, depth + 1);
    }
  };
  walk(k.dfa.initial, init, 0);
  check(language_equal(k.dfa.to_nfa(), pattern),
        "recognizer and pattern automaton define different languages");
  return "minimal recognizer has 5 states; agrees with the pattern automaton on " +
         std::to_string(words) + " words";
}

std::string criterion2() {
  const KContext& k = k_context();
  TransitionMonoid m = syntactic_monoid(k.dfa);
  check(m.elements.size() == 21, "syntactic monoid has " +
                                     std::to_string(m.elements.size()) +
                                     " elements, expected 21");
  check(m.aperiodic(), "syntactic monoid is not aperiodic");
  check(is_counter_free(k.dfa), "recognizer is not counter-free");
  return "syntactic monoid has 21 elements, aperiodic; recognizer counter-free";
}

std::string criterion3() {
  for (int n = 0; n <= 2; ++n) {
    auto [u, v] = build_ce_pair(n);
    check(duplicator_wins(u, v, n),
          "Duplicator loses the " + std::to_string(n) + "-round game");
  }
  for (int n = 0; n <= 3; ++n) {
    auto [u, v] = build_ce_pair(n);
    check(verify_strategy(u, v, n, doubling_duplicator_reply),
          "doubling strategy fails at n=" + std::to_string(n));
  }
  return "exact game values hold for n=0,1,2; doubling strategy verified for n=0..3";
}

std::string criterion4() {
  auto ab = OrderedAlphabet::make({"a", "b"}, {{"a", "b"}});
  LetterId la = ab->id("a"), lb = ab->id("b");
  Nfa astar{ab, 1, {0}, {0}, {{0, la, 0}}};
  MonotoneResult r1 = is_monotone(astar);
  check(!r1.monotone && r1.witness, "single-letter star should not be monotone");
  check(word_to_text(r1.witness->first) == "a" &&
            word_to_text(r1.witness->second) == "b",
        "unexpected witness for the single-letter star");
  Nfa contains_top{ab, 2,       {0},         {1},
                   {{{0, la, 0}, {0, lb, 0}, {0, lb, 1}, {1, la, 1}, {1, lb, 1}}}};
  check(is_monotone(contains_top).monotone,
        "letter-occurrence language should be monotone");

  Rng rng(20260814);
  for (int trial = 0; trial < 200; ++trial) {
    AlphabetRef alphabet = random_alphabet(rng);
    Nfa a = random_nfa(rng, alphabet, 3);
    MonotoneResult r = is_monotone(a);
    BoundedScan scan = bounded_scan(a, 6);
    bool brute_violation = false;
    for (int len = 0; len <= 6 && !brute_violation; ++len)
      for (size_t code = 0; code < scan.accept[len].size(); ++code)
        if (scan.below[len][code] && !scan.accept[len][code]) {
          brute_violation = true;
          break;
        }
    if (r.monotone) {
      check(!brute_violation,
            "trial " + std::to_string(trial) +
                ": declared monotone but brute force found a violation");
    } else {
      check(r.witness.has_value(), "missing witness");
      const auto& [wu, wv] = *r.witness;
      check(leq_word(wu, wv) && a.accepts(wu) && !a.accepts(wv),
            "trial " + std::to_string(trial) + ": witness does not violate");
      if (wv.size() <= 6)
        check(brute_violation,
              "trial " + std::to_string(trial) +
                  ": short witness invisible to brute force");
    }
  }
  return "200 random automata agree with bounded brute force; both worked "
         "verdicts reproduced";
}

std::string criterion5() {
  Rng rng(424242);
  long words = 0;
  for (int trial = 0; trial < 100; ++trial) {
    AlphabetRef alphabet = random_alphabet(rng);
    Nfa a = random_nfa(rng, alphabet, 3);
    Nfa closed = nfa_closure(a);
    BoundedScan scan = bounded_scan(a, 6);
    int k = alphabet->size();
    std::vector<LetterId> letters;
    for (int len = 0; len <= 6; ++len) {
      letters.assign(len, 0);
      long total = static_cast<long>(scan.accept[len].size());
      for (long code = 0; code < total; ++code) {
        long rest = code;
        for (int i = 0; i < len; ++i) {
          letters[i] = static_cast<LetterId>(rest % k);
          rest /= k;
        }
        bool in_closure = closed.accepts(Word{alphabet, letters});
        check(in_closure == (scan.below[len][code] != 0),
              "trial " + std::to_string(trial) +
                  ": closure membership disagrees with the exists-below oracle");
        ++words;
      }
    }
  }
  return "closure membership matches the exists-below oracle on " +
         std::to_string(words) + " words over 100 random automata";
}

std::string criterion6() {
  auto ab = OrderedAlphabet::make({"a", "b"}, {{"a", "b"}});
  auto pow = OrderedAlphabet::powerset({"a", "b"});
  auto pairs_ab = comparable_pairs(ab, 4);
  auto pairs_pow = comparable_pairs(pow, 4);
  long held = 0;
  for (int i = 0; i < 500; ++i) {
    bool use_pow = i >= 250;
    const AlphabetRef& alphabet = use_pow ? pow : ab;
    const auto& pairs = use_pow ? pairs_pow : pairs_ab;
    Formula f = sample_formula(alphabet, i % 4, 9000 + i);
    for (const auto& [u, v] : pairs)
      if (evaluate(f, u)) {
        check(evaluate(f, v), "satisfaction not monotone for sampled formula " +
                                  std::to_string(i) + ": " + print_formula(f));
        ++held;
      }
  }
  return "satisfaction stayed monotone on " + std::to_string(held) +
         " satisfied pairs across 500 sampled formulas";
}

std::string criterion7() {
  auto ab = OrderedAlphabet::make({"a", "b"}, {{"a", "b"}});
  int k = ab->size();
  Rng rng(777);
  int collected = 0;
  long attempts = 0;
  while (collected < 200) {
    ++attempts;
    check(attempts <= 20000, "could not collect 200 winning pairs");
    int n = 1 + rng.upto(2);
    int len_u = rng.upto(4);
    std::vector<LetterId> lu(len_u), lv;
    for (int i = 0; i < len_u; ++i) lu[i] = static_cast<LetterId>(rng.upto(k));
    if (attempts % 2 == 0) {
      lv = lu;
      for (auto& l : lv)
        if (rng.upto(2)) l = ab->id("b");
    } else {
      lv.resize(rng.upto(4));
      for (auto& l : lv) l = static_cast<LetterId>(rng.upto(k));
    }
    Word u{ab, lu}, v{ab, lv};
    if (!duplicator_wins(u, v, n)) continue;
    Formula f = sample_formula(ab, rng.upto(n + 1), 5000 + attempts);
    if (evaluate(f, u))
      check(evaluate(f, v),
            "transfer failed: " + print_formula(f) + " on (\"" + word_to_text(u) +
                "\", \"" + word_to_text(v) + "\") with n=" + std::to_string(n));
    ++collected;
  }
  return "forward transfer held on 200 sampled winning pairs";
}

std::string criterion8() {
  long arenas = 0;
  for (int n : {1, 2})
    for (Orientation o : {Orientation::standard, Orientation::mirrored})
      for (const IntegerArena& arena : enumerate_arenas(n, 5, 5, o)) {
        ++arenas;
        IntGameResult r = solve_int_game(arena, 2 * n);
        StrategyCheck s = verify_spoiler_strategy(arena, 2 * n);
        check(r.spoiler_wins && r.rounds <= 2 * n,
              "solver missed a Spoiler win within 2n rounds (n=" +
                  std::to_string(n) + ")");
        check(s.ok && s.worst_rounds <= 2 * n,
              "prescribed strategy failed within 2n rounds (n=" +
                  std::to_string(n) + ")");
      }
  return "Spoiler wins all " + std::to_string(arenas) +
         " arenas within 2n rounds, solver and strategy agreeing";
}

std::string criterion9() {
  TuringMachine walker = parse_tm_text(kWalkerText);
  TuringMachine bouncer = parse_tm_text(kBouncerText);
  ReductionContext wctx(walker);
  ReductionContext bctx(bouncer);

  for (int len = 1; len <= 3; ++len) {
    check(config_keys(wctx, build_configs(wctx, len)) ==
              config_keys(wctx, brute_configs(wctx, len)),
          "direct configuration builder disagrees with the exhaustive filter "
          "(walker, length " +
              std::to_string(len) + ")");
    check(config_keys(bctx, build_configs(bctx, len)) ==
              config_keys(bctx, brute_configs(bctx, len)),
          "direct configuration builder disagrees with the exhaustive filter "
          "(bouncer, length " +
              std::to_string(len) + ")");
  }

  std::vector<ConfigWord> up_to_4, up_to_5;
  for (int len = 1; len <= 5; ++len) {
    std::vector<ConfigWord> cs = build_configs(wctx, len);
    if (len <= 4) up_to_4.insert(up_to_4.end(), cs.begin(), cs.end());
    up_to_5.insert(up_to_5.end(), cs.begin(), cs.end());
  }
  check(!up_to_4.empty() && up_to_5.size() > up_to_4.size(),
        "configuration enumeration looks empty");

  long merges = 0;
  for (const ConfigWord& c : up_to_5)
    if (auto next = tm_step(wctx, c)) {
      Word m = merge_configs(wctx, c, *next);
      check(leq_word(c.word, m) && leq_word(next->word, m),
            "merged word does not dominate both inputs");
      ++merges;
    }
  check(merges > 0, "no mergeable configurations found");

  for (size_t i = 0; i < up_to_4.size(); ++i)
    for (size_t j = 0; j < up_to_4.size(); ++j) {
      const ConfigWord& c1 = up_to_4[i];
      const ConfigWord& c2 = up_to_4[j];
      if (c1.word.size() != c2.word.size()) continue;
      bool dominated_together = true;
      for (size_t p = 0; p < c1.word.size() && dominated_together; ++p) {
        LetterId x = c1.word[p], y = c2.word[p];
        if (x == y) continue;
        if (!wctx.ambiguous_for(x, y) && !wctx.ambiguous_for(y, x))
          dominated_together = false;
      }
      if (!dominated_together) continue;
      bool equal = c1.word == c2.word;
      auto s1 = tm_step(wctx, c1);
      auto s2 = tm_step(wctx, c2);
      bool consecutive = (s1 && s1->word == c2.word) || (s2 && s2->word == c1.word);
      check(equal || consecutive,
            "doubly dominated configurations are neither equal nor consecutive");
    }

  long decoded = 0;
  int nl = wctx.alphabet()->size();
  for (int len = 1; len <= 4; ++len) {
    std::vector<LetterId> cur(len, 0);
    while (true) {
      Word w{wctx.alphabet(), cur};
      size_t n = configurations_below(wctx, w).size();
      check(n <= 2, "a word dominates " + std::to_string(n) +
                        " configurations: " + word_to_text(w));
      ++decoded;
      int i = 0;
      for (; i < len; ++i) {
        if (++cur[i] < nl) break;
        cur[i] = 0;
      }
      if (i == len) break;
    }
  }

  int plain0 = wctx.plain(0), plain1 = wctx.plain(1);
  for (const ConfigWord& c : up_to_5) {
    HeightResult h = height(wctx, c);
    check(!h.overflow && h.value >= 1, "height must be at least 1");
    auto next = tm_step(wctx, c);
    if (next) {
      HeightResult hn = height(wctx, *next);
      check(!hn.overflow && hn.value == h.value - 1,
            "stepping must lower the height by exactly 1");
    } else {
      check(h.value == 1, "a configuration without a successor must have height 1");
    }
    for (int pad : {plain0, plain1})
      for (bool left : {true, false}) {
        std::vector<LetterId> letters = c.word.letters;
        letters.insert(left ? letters.begin() : letters.end(),
                       static_cast<LetterId>(pad));
        auto padded = as_configuration(wctx, Word{wctx.alphabet(), letters});
        check(padded.has_value(), "padding broke the configuration");
        HeightResult hp = height(wctx, *padded);
        check(!hp.overflow && hp.value >= h.value, "padding lowered the height");
      }
    for (int radius : {h.value, h.value + 1}) {
      auto trimmed = as_configuration(wctx, head_neighborhood(wctx, c, radius));
      check(trimmed.has_value(), "head neighborhood is not a configuration");
      HeightResult ht = height(wctx, *trimmed);
      check(!ht.overflow && ht.value == h.value,
            "trimming at radius >= height changed the height");
    }
  }

  return "merge domination on " + std::to_string(merges) +
         " steps; double-domination adjacency; decode bound on " +
         std::to_string(decoded) + " words; height laws on " +
         std::to_string(up_to_5.size()) + " configurations";
}

std::string criterion10() {
  ReductionContext ctx(parse_tm_text(kBouncerText));
  Word start_word = parse_word(ctx.alphabet(), "0 [p3.0] 0_d2^d3 0");
  auto start = as_configuration(ctx, start_word);
  check(start.has_value(), "start word is not a configuration");
  auto [u, v] = build_duplicator_instance(ctx, *start, 2);
  const RunLanguages& langs = ctx.languages();
  check(langs.closed.accepts(u), "u must lie in the closed run language");
  check(!langs.closed.accepts(v), "v must lie outside the closed run language");
  check(duplicator_wins(u, v, 1), "Duplicator must survive one round");
  return "u (" + std::to_string(u.size()) + " letters) accepted, v (" +
         std::to_string(v.size()) + " letters) rejected, one-round survival";
}

std::string criterion11() {
  ReductionContext ctx(parse_tm_text(kBouncerText));
  const RunLanguages& langs = ctx.languages();
  int produced = 0;
  long candidates = 0;
  for (int len = 4; len <= 8 && produced < 50; ++len)
    for (const ConfigWord& c : build_configs(ctx, len)) {
      if (produced >= 50) break;
      ++candidates;
      int n = 4 + (produced % 3);
      std::pair<Word, Word> instance;
      try {
        instance = build_duplicator_instance(ctx, c, n);
      } catch (const std::exception&) {
        continue;
      }
      const Word& v = instance.second;
      FactorReport report = analyze_factors(ctx, v);
      if (!report.locally_consistent || langs.closed.accepts(v)) continue;
      bool incoherent_run = false;
      for (const AmbiguousRun& run : report.runs)
        if (!run.coherent) incoherent_run = true;
      check(!report.all_coherent && incoherent_run,
            "locally clean non-member lacks a non-coherent ambiguous run: " +
                word_to_text(v));
      ++produced;
    }
  check(produced == 50, "only produced " + std::to_string(produced) +
                            " qualifying words out of " +
                            std::to_string(candidates) + " candidates");
  return "50 locally clean non-members each report a non-coherent ambiguous run";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double limit_seconds;
    std::function<std::string()> body;
  };
  const std::vector<Criterion> criteria = {
      {1, 5.0, criterion1},   {2, 1.0, criterion2},   {3, 120.0, criterion3},
      {4, 60.0, criterion4},  {5, 60.0, criterion5},  {6, 120.0, criterion6},
      {7, 120.0, criterion7}, {8, 120.0, criterion8}, {9, 300.0, criterion9},
      {10, 120.0, criterion10}, {11, 60.0, criterion11},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string verdict;
    std::string note;
    try {
      note = c.body();
      verdict = "PASS";
    } catch (const std::exception& e) {
      note = e.what();
      verdict = "FAIL";
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (verdict == "PASS" && elapsed >= c.limit_seconds) {
      verdict = "FAIL";
      note = "exceeded the " + std::to_string(c.limit_seconds) +
             "s time limit: " + note;
    }
    if (verdict == "FAIL") ++failed;
    std::printf("criterion %d: %s (%.2fs) %s\n", c.id, verdict.c_str(), elapsed,
                note.c_str());
    std::fflush(stdout);
  }
  if (failed == 0) {
    std::printf("all 11 criteria passed\n");
    return 0;
  }
  std::printf("%d of 11 criteria failed\n", failed);
  return 1;
}
