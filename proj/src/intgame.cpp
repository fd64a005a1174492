#include "fopw/intgame.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fopw {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

void check_arena_shape(const IntegerArena& a) {
  if (a.n < 1) fail("arena parameter n must be at least 1");
  if (a.u.empty() || a.v.empty()) fail("arena words must be nonempty");
  for (int x : a.u)
    if (x < 0 || x > a.n) fail("u letter out of range [0, n]");
  for (int y : a.v)
    if (y < 1 || y > a.n) fail("v letter out of range [1, n]");
}

}  // namespace

bool validate_arena(const IntegerArena& a) {
  check_arena_shape(a);
  if (a.orientation == Orientation::standard)
    return a.v.front() == a.u.front() && a.v.back() == a.u.back() + 1;
  return a.v.front() == a.u.front() + 1 && a.v.back() == a.u.back();
}

bool referee_check(const IntegerArena& a, const IntTokens& tokens) {
  check_arena_shape(a);
  const int ulen = static_cast<int>(a.u.size());
  const int vlen = static_cast<int>(a.v.size());
  for (const auto& [x, y] : tokens) {
    if (x < 0 || x >= ulen || y < 0 || y >= vlen)
      fail("token position out of range");
    if (a.u[x] != a.v[y] && a.u[x] != a.v[y] - 1) return false;
  }
  for (size_t i = 0; i < tokens.size(); ++i)
    for (size_t j = i + 1; j < tokens.size(); ++j) {
      auto [xi, yi] = tokens[i];
      auto [xj, yj] = tokens[j];
      int dx = (xi > xj) - (xi < xj);
      int dy = (yi > yj) - (yi < yj);
      if (dx != dy) return false;
      if ((std::abs(xi - xj) == 1) != (std::abs(yi - yj) == 1)) return false;
      if (xj - xi == 1 && yj - yi == 1) {
        bool upper = a.u[xi] == a.v[yi] && a.u[xj] == a.v[yj];
        bool lower = a.u[xi] == a.v[yi] - 1 && a.u[xj] == a.v[yj] - 1;
        if (!upper && !lower) return false;
      }
      if (xi - xj == 1 && yi - yj == 1) {
        bool upper = a.u[xj] == a.v[yj] && a.u[xi] == a.v[yi];
        bool lower = a.u[xj] == a.v[yj] - 1 && a.u[xi] == a.v[yi] - 1;
        if (!upper && !lower) return false;
      }
    }
  return true;
}

// ---------------------------------------------------------------------------
// The inductive Spoiler strategy.
//
// The strategy works on a shrinking window [ulo..uhi] x [vlo..vhi] and a
// level m, starting at the full words and m = n.
//
//   level 1: play the last 1 in the u window; whatever the reply, play the
//     position right after it (a 0), whose reply would have to sit beyond
//     the previous one inside v. If the window contains no 1 at all its
//     left edge already contradicts the boundary token, so play the first
//     window position.
//   level m with m in the u window: play its last occurrence; the reply
//     pins <m/m-1>, and the game continues in the suffix windows.
//   level m with m absent but <m/m-1> in the v window: play its first
//     occurrence y. The reply x must read the lower component (m is absent),
//     so the game continues in the prefix windows at level m - 1. If the
//     reply sits at the window start, one more move on the v window start
//     finishes instead.
//   level m with neither: drop to level m - 1.

namespace {

struct StrategyState {
  std::vector<int> u, v;  // standard orientation copies
  int ulo, uhi, vlo, vhi;
  int level;
  enum class Phase { normal, base_pending, kill_pending, done } phase =
      Phase::normal;
  enum class Issued { none, base_first, base_second, degenerate, last_m,
                      first_amb, killer } issued = Issued::none;
  int issued_pos = -1;
  bool issued_on_u = true;
};

StrategyState init_state(const IntegerArena& a) {
  StrategyState st;
  st.u = a.u;
  st.v = a.v;
  if (a.orientation == Orientation::mirrored) {
    std::reverse(st.u.begin(), st.u.end());
    std::reverse(st.v.begin(), st.v.end());
  }
  st.ulo = 0;
  st.uhi = static_cast<int>(st.u.size()) - 1;
  st.vlo = 0;
  st.vhi = static_cast<int>(st.v.size()) - 1;
  st.level = a.n;
  return st;
}

IntMove next_move(StrategyState& st) {
  using P = StrategyState::Phase;
  using I = StrategyState::Issued;
  switch (st.phase) {
    case P::done:
      fail("the strategy has already finished this game");
    case P::base_pending: {
      int pos = st.issued_pos + 1;
      if (pos >= static_cast<int>(st.u.size()))
        throw std::logic_error("base follow-up move falls off the word");
      st.issued = I::base_second;
      st.issued_pos = pos;
      st.issued_on_u = true;
      return {true, pos};
    }
    case P::kill_pending:
      st.issued = I::killer;
      st.issued_pos = st.vlo;
      st.issued_on_u = false;
      return {false, st.vlo};
    case P::normal:
      break;
  }
  while (true) {
    if (st.level <= 1) {
      for (int x = st.uhi; x >= st.ulo; --x)
        if (st.u[x] == 1) {
          st.issued = I::base_first;
          st.issued_pos = x;
          st.issued_on_u = true;
          return {true, x};
        }
      if (st.ulo >= static_cast<int>(st.u.size()))
        throw std::logic_error("degenerate move falls off the word");
      st.issued = I::degenerate;
      st.issued_pos = st.ulo;
      st.issued_on_u = true;
      return {true, st.ulo};
    }
    for (int x = st.uhi; x >= st.ulo; --x)
      if (st.u[x] == st.level) {
        st.issued = I::last_m;
        st.issued_pos = x;
        st.issued_on_u = true;
        return {true, x};
      }
    for (int y = st.vlo; y <= st.vhi; ++y)
      if (st.v[y] == st.level) {
        st.issued = I::first_amb;
        st.issued_pos = y;
        st.issued_on_u = false;
        return {false, y};
      }
    --st.level;
  }
}

void observe_reply(StrategyState& st, int reply) {
  using P = StrategyState::Phase;
  using I = StrategyState::Issued;
  switch (st.issued) {
    case I::none:
      fail("no move pending");
    case I::base_first:
      st.phase = P::base_pending;
      break;
    case I::base_second:
    case I::degenerate:
    case I::killer:
      st.phase = P::done;
      break;
    case I::last_m:
      st.ulo = st.issued_pos + 1;
      st.vlo = reply + 1;
      st.phase = P::normal;
      break;
    case I::first_amb:
      if (reply == st.ulo) {
        st.phase = P::kill_pending;
      } else {
        st.uhi = reply - 1;
        st.vhi = st.issued_pos - 1;
        st.level -= 1;
        st.phase = P::normal;
      }
      break;
  }
  st.issued = I::none;
}

// Maps a standard-coordinate move back to the arena's own coordinates.
IntMove unmap_move(const IntegerArena& a, IntMove mv) {
  if (a.orientation == Orientation::standard) return mv;
  int len = mv.on_u ? static_cast<int>(a.u.size()) : static_cast<int>(a.v.size());
  return {mv.on_u, len - 1 - mv.pos};
}

std::pair<int, int> map_pair(const IntegerArena& a, std::pair<int, int> p) {
  if (a.orientation == Orientation::standard) return p;
  return {static_cast<int>(a.u.size()) - 1 - p.first,
          static_cast<int>(a.v.size()) - 1 - p.second};
}

}  // namespace

IntMove spoiler_move(const IntGameState& state) {
  if (!validate_arena(state.arena)) fail("arena violates the endpoint rules");
  const int ulen = static_cast<int>(state.arena.u.size());
  const int vlen = static_cast<int>(state.arena.v.size());
  StrategyState st = init_state(state.arena);
  for (const auto& raw : state.history) {
    if (raw.first < 0 || raw.first >= ulen || raw.second < 0 ||
        raw.second >= vlen)
      fail("history position out of range");
    auto [x, y] = map_pair(state.arena, raw);
    IntMove mv = next_move(st);
    int expected = mv.on_u ? x : y;
    if (expected != mv.pos)
      fail("history does not follow the strategy");
    observe_reply(st, mv.on_u ? y : x);
  }
  return unmap_move(state.arena, next_move(st));
}

// ---------------------------------------------------------------------------

namespace {

struct Minimax {
  const IntegerArena& arena;
  std::map<std::pair<IntTokens, int>, bool> memo;

  bool spoiler_wins(IntTokens tokens, int depth) {
    if (depth == 0) return false;
    std::sort(tokens.begin(), tokens.end());
    auto key = std::make_pair(tokens, depth);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int ulen = static_cast<int>(arena.u.size());
    const int vlen = static_cast<int>(arena.v.size());
    bool win = false;
    for (int side = 0; side < 2 && !win; ++side) {
      int len = side == 0 ? ulen : vlen;
      int olen = side == 0 ? vlen : ulen;
      for (int pos = 0; pos < len && !win; ++pos) {
        bool all_bad = true;
        for (int r = 0; r < olen; ++r) {
          auto next = tokens;
          next.emplace_back(side == 0 ? pos : r, side == 0 ? r : pos);
          if (!referee_check(arena, next)) continue;
          if (!spoiler_wins(std::move(next), depth - 1)) {
            all_bad = false;
            break;
          }
        }
        if (all_bad) win = true;
      }
    }
    memo.emplace(std::move(key), win);
    return win;
  }
};

}  // namespace

IntGameResult solve_int_game(const IntegerArena& a, int max_rounds) {
  if (!validate_arena(a)) fail("arena violates the endpoint rules");
  if (max_rounds < 0) fail("max_rounds must be nonnegative");
  Minimax mm{a, {}};
  for (int r = 1; r <= max_rounds; ++r)
    if (mm.spoiler_wins({}, r)) return {true, r};
  return {false, max_rounds};
}

namespace {

struct VerifyWalk {
  const IntegerArena& arena;
  int round_limit;
  bool ok = true;
  int worst = 0;

  void walk(StrategyState st, IntTokens tokens) {
    if (!ok) return;
    IntMove mv;
    try {
      mv = next_move(st);
    } catch (const std::exception&) {
      ok = false;
      return;
    }
    IntMove real = unmap_move(arena, mv);
    int olen = real.on_u ? static_cast<int>(arena.v.size())
                         : static_cast<int>(arena.u.size());
    int used = static_cast<int>(tokens.size()) + 1;
    for (int r = 0; r < olen && ok; ++r) {
      auto next = tokens;
      if (real.on_u)
        next.emplace_back(real.pos, r);
      else
        next.emplace_back(r, real.pos);
      if (!referee_check(arena, next)) {
        worst = std::max(worst, used);
        continue;
      }
      if (used >= round_limit) {
        ok = false;  // Duplicator survived the whole budget
        return;
      }
      StrategyState st2 = st;
      auto mapped = map_pair(arena, next.back());
      observe_reply(st2, mv.on_u ? mapped.second : mapped.first);
      walk(std::move(st2), std::move(next));
    }
  }
};

}  // namespace

StrategyCheck verify_spoiler_strategy(const IntegerArena& a, int round_limit) {
  if (!validate_arena(a)) fail("arena violates the endpoint rules");
  if (round_limit < 1) fail("round_limit must be positive");
  VerifyWalk w{a, round_limit};
  w.walk(init_state(a), {});
  return {w.ok, w.ok ? w.worst : round_limit};
}

std::vector<IntegerArena> enumerate_arenas(int n, int max_u_len, int max_v_len,
                                           Orientation orientation) {
  if (n < 1) fail("n must be at least 1");
  std::vector<IntegerArena> out;
  for (int ulen = 1; ulen <= max_u_len; ++ulen) {
    std::vector<int> u(ulen);
    auto rec_u = [&](auto&& self, int i) -> void {
      if (i == ulen) {
        for (int vlen = 1; vlen <= max_v_len; ++vlen) {
          std::vector<int> v(vlen);
          v.front() = u.front();
          v.back() = u.back() + 1;
          if (vlen == 1 && u.front() != u.back() + 1) continue;
          auto rec_v = [&](auto&& vself, int j) -> void {
            if (j == vlen - 1 || (vlen == 1 && j >= vlen)) {
              IntegerArena a{n, u, v, Orientation::standard};
              if (orientation == Orientation::mirrored) {
                std::reverse(a.u.begin(), a.u.end());
                std::reverse(a.v.begin(), a.v.end());
                a.orientation = Orientation::mirrored;
              }
              out.push_back(std::move(a));
              return;
            }
            for (int val = 1; val <= n; ++val) {
              v[j] = val;
              vself(vself, j + 1);
            }
          };
          rec_v(rec_v, 1);
        }
        return;
      }
      int lo = 0, hi = n;
      if (i == 0) lo = std::max(lo, 1);
      if (i == ulen - 1) hi = std::min(hi, n - 1);
      for (int val = lo; val <= hi; ++val) {
        u[i] = val;
        self(self, i + 1);
      }
    };
    rec_u(rec_u, 0);
  }
  return out;
}

IntegerArena parse_arena(int n, const std::string& u_text,
                         const std::string& v_text, Orientation orientation) {
  IntegerArena a;
  a.n = n;
  a.orientation = orientation;
  std::istringstream us(u_text);
  int x;
  while (us >> x) a.u.push_back(x);
  if (!us.eof()) fail("u must be a sequence of integers");
  std::istringstream vs(v_text);
  std::string tok;
  while (vs >> tok) {
    auto slash = tok.find('/');
    if (slash == std::string::npos)
      fail("v letters look like upper/lower, got '" + tok + "'");
    int hi = std::stoi(tok.substr(0, slash));
    int lo = std::stoi(tok.substr(slash + 1));
    if (lo != hi - 1) fail("v letter '" + tok + "' is not of the form i/i-1");
    a.v.push_back(hi);
  }
  check_arena_shape(a);
  return a;
}

}  // namespace fopw
