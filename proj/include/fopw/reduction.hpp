#ifndef FOPW_REDUCTION_HPP
#define FOPW_REDUCTION_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fopw/alphabet.hpp"
#include "fopw/automata.hpp"

namespace fopw {

struct TmTransition {
  std::string id;  // d1, d2, ... in declaration order
  int from_state;
  int read;  // tape symbol index
  int to_state;
  int write;
  int dir;  // +1 moves right, -1 moves left
};

/// Deterministic machine whose states carry a type in {1,2,3}; every
/// transition must step the type forward cyclically. The head always moves.
struct TuringMachine {
  std::vector<std::string> tape_symbols;
  std::vector<std::string> state_names;
  std::vector<int> state_types;
  std::vector<TmTransition> transitions;

  std::optional<int> transition_from(int state, int read) const;
  int symbol_id(const std::string& name) const;
  int state_id(const std::string& name) const;
};

/// Machine files:
///     gamma: 0 1
///     states: p/1 q/2 r/3
///     p 0 -> q 1 R
/// '#' starts a comment line. By default the table must already satisfy the
/// type rotation; pass require_normalized = false to load a raw machine
/// destined for normalize_types.
TuringMachine parse_tm_text(const std::string& text,
                            bool require_normalized = true);
TuringMachine load_tm_file(const std::string& path,
                           bool require_normalized = true);
std::string tm_to_text(const TuringMachine& m);

/// True when every transition steps the state type forward cyclically.
bool type_normalized(const TuringMachine& m);

/// Returns m unchanged when already normalized; otherwise makes three copies
/// of the state set (state q_k has type k) and redirects each transition from
/// the k-th copy into the next one. Runs are in bijection with the original
/// machine's, so mortality is preserved.
TuringMachine normalize_types(const TuringMachine& m);

struct RunLanguages {
  std::vector<Nfa> config;  // config[t-1]: configurations at a type-t state
  Nfa base;                 // padded runs: consecutive configurations, types
                            // cycling, some block at a type-1 state
  Nfa closed;               // upward closure of base
  Nfa factor;               // factors of closed words
};

/// Builds the word encoding of a machine: a letter per tape cell, the head
/// cell carrying the state, the cell the head just left marked with the
/// transition taken (subscript), the cell the head enters next marked with
/// the transition about to fire (superscript), plus two-element "ambiguous"
/// letters that dominate exactly the letters a step can change between.
///
/// Letter names: "0", "0_d1" (subscript), "0^d2" (superscript), "0_d1^d2",
/// "[p.0]" (head), "#" (separator), "<x/y>" (ambiguous over x and y).
class ReductionContext {
 public:
  explicit ReductionContext(TuringMachine m);

  const TuringMachine& machine() const { return machine_; }
  const AlphabetRef& alphabet() const { return alphabet_; }
  LetterId separator() const { return sep_; }

  enum class Cat { Plain, Sub, Sup, SubSup, Head, Separator, Ambiguous };
  struct LetterInfo {
    Cat cat;
    int symbol = -1;  // tape symbol (for Head: the symbol under the head)
    int state = -1;
    int sub = -1, sup = -1;            // transition indices
    LetterId first = -1, second = -1;  // components of an ambiguous letter
  };
  const LetterInfo& info(LetterId l) const { return info_.at(l); }

  LetterId plain(int symbol) const;
  LetterId sub(int symbol, int t) const;
  LetterId sup(int symbol, int t) const;
  LetterId subsup(int symbol, int tsub, int tsup) const;
  LetterId head(int state, int symbol) const;
  /// The ambiguous letter covering exactly (first, second), if any.
  std::optional<LetterId> ambiguous_for(LetterId first, LetterId second) const;

  const RunLanguages& languages() const;  // built on first use

 private:
  TuringMachine machine_;
  AlphabetRef alphabet_;
  LetterId sep_ = -1;
  std::vector<LetterInfo> info_;
  std::vector<LetterId> plain_, head_, sub_, sup_, subsup_;
  std::vector<std::pair<std::pair<LetterId, LetterId>, LetterId>> amb_;
  mutable std::unique_ptr<RunLanguages> languages_;

  Nfa config_language(int type) const;
};

/// One machine configuration written as a word over base letters.
struct ConfigWord {
  Word word;
  int head = -1;
  int state = -1;
  int type = 0;
};

/// Decodes a word as a configuration: exactly one head letter, one
/// subscript and one superscript annotation on cells adjacent to the head,
/// both consistent with the machine (the subscript transition produced the
/// current state and cell content arriving from that side; the superscript
/// is the transition about to fire, pointing at its destination cell).
std::optional<ConfigWord> as_configuration(const ReductionContext& ctx,
                                           const Word& w);

/// The successor configuration on the same tape span, or nullopt when the
/// next head move leaves the span or the successor state has no transition
/// for the symbol it reads.
std::optional<ConfigWord> tm_step(const ReductionContext& ctx,
                                  const ConfigWord& c);

struct HeightResult {
  bool overflow = false;
  int value = 0;
};

/// Number of machine steps that stay on the tape span before the run halts
/// or falls off; counting stops at cap.
HeightResult height(const ReductionContext& ctx, const ConfigWord& c,
                    int cap = 100000);

/// The letters of c within distance radius of the head.
Word head_neighborhood(const ReductionContext& ctx, const ConfigWord& c,
                       int radius);

/// Positionwise join of a configuration and its tm_step successor: equal
/// cells stay, differing cells take the ambiguous letter over the two.
Word merge_configs(const ReductionContext& ctx, const ConfigWord& c1,
                   const ConfigWord& c2);

/// All configurations whose encoding is dominated by v componentwise, in the
/// order that resolves each ambiguous position first-component-first.
std::vector<ConfigWord> configurations_below(const ReductionContext& ctx,
                                             const Word& v);

/// True iff w (which must contain at most two separators) is not a factor of
/// any word of the closed run language.
bool forbidden_local_factor(const ReductionContext& ctx, const Word& w);

struct BlockReport {
  size_t begin = 0, end = 0;  // letter range [begin, end) within the word
  std::vector<int> types;     // states types t with some configuration below
  bool anchor = false;
  int anchor_type = 0;  // 0 when no type fits both neighbours
};

struct AmbiguousRun {
  size_t first_block = 0, last_block = 0;  // inclusive block indices
  bool coherent = false;
};

struct FactorReport {
  std::optional<std::pair<size_t, size_t>> forbidden;  // first bad window
  std::vector<BlockReport> blocks;
  std::vector<AmbiguousRun> runs;  // maximal runs of non-anchor blocks
  bool locally_consistent = false;
  bool all_coherent = false;
};

/// Splits v at separators, types each block, marks anchors (endpoints, and
/// interior blocks whose neighbourhood does not read as two consecutive
/// steps both ways), and checks that every maximal run of non-anchor blocks
/// admits a type reading compatible with the anchors on both sides.
FactorReport analyze_factors(const ReductionContext& ctx, const Word& v);

/// From a start configuration with at least n+1 successors: u joins the run
/// c_0 # c_1 # ... # c_(n+1); v keeps both endpoint blocks and replaces the
/// interior by merge_configs of consecutive pairs, dropping one block.
/// u lies in the closed run language, v does not, yet their letter sets
/// dominate each other, so Duplicator survives one round. Requires n >= 2.
std::pair<Word, Word> build_duplicator_instance(const ReductionContext& ctx,
                                                const ConfigWord& start, int n);

}  // namespace fopw

#endif
