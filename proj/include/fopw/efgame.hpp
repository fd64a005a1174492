#ifndef FOPW_EFGAME_HPP
#define FOPW_EFGAME_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "fopw/alphabet.hpp"
#include "fopw/automata.hpp"

namespace fopw {

/// Solver limits; exceeding either is an error, not a wrong answer.
struct EfCaps {
  int max_rounds = 4;
  int max_total_length = 64;
};

/// A game state: tokens placed so far and rounds left. alpha[i] pairs with
/// beta[i]; during a round alpha may be one longer than beta (Spoiler moved
/// on u) or shorter (Spoiler moved on v).
struct GamePosition {
  Word u, v;
  std::vector<int> alpha, beta;
  int budget = 0;
};

/// Checks the winning condition for Duplicator at a settled position
/// (equal numbers of tokens): every u-token letter must be dominated by its
/// v-token letter, and token order must agree both ways.
bool position_valid(const GamePosition& p);

/// True iff Duplicator survives `rounds` rounds on (u, v) against optimal
/// play, starting from the empty position.
bool duplicator_wins(const Word& u, const Word& v, int rounds,
                     const EfCaps& caps = {});

struct Move {
  enum class Side { OnU, OnV };
  Side side;
  int pos;
  bool operator==(const Move&) const = default;
};

/// Optimal move for whoever is to act. With alpha and beta balanced Spoiler
/// moves: returns a winning move if one exists, otherwise nullopt. With one
/// pending token Duplicator replies: returns a reply keeping Duplicator
/// winning if possible, otherwise nullopt. Ties break toward OnU, then the
/// smaller position.
std::optional<Move> best_move(const GamePosition& p, const EfCaps& caps = {});

/// Duplicator heuristics get the position before the pending token was added
/// plus the Spoiler move, and return a reply position in the other word.
using DuplicatorStrategy = std::function<int(const GamePosition&, Move)>;

/// Runs every Spoiler move sequence of the given length against the strategy;
/// true iff the strategy never reaches an invalid position.
bool verify_strategy(const Word& u, const Word& v, int rounds,
                     const DuplicatorStrategy& strategy);

/// Copying strategy for doubled words: treat position 0 and the final
/// positions of u and v as pre-placed sentinel pairs, find the placed or
/// sentinel token on the Spoiler's side nearest the move (ties toward the
/// left), and replay the offset from it on the other word, clamped to the
/// word. Both words must be nonempty.
int doubling_duplicator_reply(const GamePosition& p, Move spoiler);

/// Heuristic Spoiler used for demo traces: picks the position farthest from
/// every token and sentinel on its side, preferring u and smaller positions.
Move bisect_spoiler_move(const GamePosition& p);

/// Smallest pair (u in L, v not in L) with Duplicator surviving `rounds`
/// rounds, ordered by total length, then |u|, then u and v lexicographically.
/// Searches lengths up to maxlen per word; nullopt if none exists in range.
std::optional<std::pair<Word, Word>> witness_search(const Nfa& lang, int rounds,
                                                    int maxlen,
                                                    const EfCaps& caps = {},
                                                    int maxlen_cap = 12);

}  // namespace fopw

#endif
