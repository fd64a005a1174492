#ifndef FOPW_INTGAME_HPP
#define FOPW_INTGAME_HPP

#include <string>
#include <utility>
#include <vector>

namespace fopw {

/// Abstract one-round-per-token game on integer words. u ranges over
/// [0, n]; v holds two-element letters written <i/i-1> and stored by their
/// upper value i in [1, n]. A standard arena starts with v[0] = <u[0]/u[0]-1>
/// and ends with v[last] = <u[last]+1/u[last]>; a mirrored arena swaps the
/// two endpoint conventions (its reversal is standard).
enum class Orientation { standard, mirrored };

struct IntegerArena {
  int n = 1;
  std::vector<int> u;
  std::vector<int> v;
  Orientation orientation = Orientation::standard;
};

/// True iff the endpoint conventions hold. Malformed input (n < 1, empty
/// words, letters out of range) is an error.
bool validate_arena(const IntegerArena& a);

/// Completed token pairs (u position, v position) in play order.
using IntTokens = std::vector<std::pair<int, int>>;

/// Duplicator keeps the round iff every pair (x, y) satisfies
/// u[x] in {v[y], v[y]-1}, token order agrees both ways, adjacency agrees
/// both ways, and adjacent pairs read both labels from the same component
/// (both upper or both lower).
bool referee_check(const IntegerArena& a, const IntTokens& tokens);

struct IntMove {
  bool on_u;
  int pos;
  bool operator==(const IntMove&) const = default;
};

struct IntGameState {
  IntegerArena arena;
  IntTokens history;
};

/// The move the inductive Spoiler strategy prescribes after the given
/// history. The history must itself follow the strategy (each recorded pair
/// contains the move the strategy prescribed at that point, completed by
/// some Duplicator reply); anything else is an error.
IntMove spoiler_move(const IntGameState& state);

struct IntGameResult {
  bool spoiler_wins = false;
  int rounds = 0;  // least winning budget, or the searched bound
};

/// Exhaustive minimax: least r <= max_rounds such that Spoiler forces an
/// invalid position within r rounds.
IntGameResult solve_int_game(const IntegerArena& a, int max_rounds);

struct StrategyCheck {
  bool ok = false;
  int worst_rounds = 0;
};

/// Plays spoiler_move against every Duplicator reply sequence; ok iff every
/// branch ends with a failed referee_check within round_limit rounds.
StrategyCheck verify_spoiler_strategy(const IntegerArena& a, int round_limit);

/// All valid arenas with the given parameter and length bounds.
std::vector<IntegerArena> enumerate_arenas(int n, int max_u_len, int max_v_len,
                                           Orientation orientation);

/// u as "2 1 0"; v as "2/1 1/0" (each token upper/lower with lower =
/// upper - 1).
IntegerArena parse_arena(int n, const std::string& u_text,
                         const std::string& v_text, Orientation orientation);

}  // namespace fopw

#endif
