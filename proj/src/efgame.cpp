#include "fopw/efgame.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fopw {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

using Pair = std::pair<int, int>;

void check_caps(const Word& u, const Word& v, int rounds, const EfCaps& caps) {
  require_same_alphabet(u, v);
  if (rounds < 0) fail("rounds must be nonnegative");
  if (rounds > caps.max_rounds) {
    std::ostringstream os;
    os << "rounds " << rounds << " exceeds max_rounds cap " << caps.max_rounds;
    fail(os.str());
  }
  int total = static_cast<int>(u.letters.size() + v.letters.size());
  if (total > caps.max_total_length) {
    std::ostringstream os;
    os << "total word length " << total << " exceeds max_total_length cap "
       << caps.max_total_length;
    fail(os.str());
  }
}

bool pair_consistent(const std::vector<Pair>& pairs, int ua, int vb,
                     const Word& u, const Word& v) {
  if (!u.alphabet->leq(u.letters[ua], v.letters[vb])) return false;
  for (const auto& [x, y] : pairs) {
    int dx = (ua > x) - (ua < x);
    int dy = (vb > y) - (vb < y);
    if (dx != dy) return false;
  }
  return true;
}

std::vector<int> replies_by_distance(int len, int anchor) {
  std::vector<int> out(len);
  for (int i = 0; i < len; ++i) out[i] = i;
  std::stable_sort(out.begin(), out.end(), [anchor](int a, int b) {
    return std::abs(a - anchor) < std::abs(b - anchor);
  });
  return out;
}

struct Solver {
  const Word& u;
  const Word& v;
  std::map<std::pair<std::vector<Pair>, int>, bool> memo;

  bool dup_wins(std::vector<Pair> pairs, int budget) {
    if (budget == 0) return true;
    std::sort(pairs.begin(), pairs.end());
    auto key = std::make_pair(pairs, budget);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool result = true;
    for (int side = 0; side < 2 && result; ++side) {
      const Word& w = side == 0 ? u : v;
      const Word& o = side == 0 ? v : u;
      for (int pos = 0; pos < static_cast<int>(w.letters.size()) && result;
           ++pos) {
        bool saved = false;
        for (int r : replies_by_distance(static_cast<int>(o.letters.size()), pos)) {
          int ua = side == 0 ? pos : r;
          int vb = side == 0 ? r : pos;
          if (!pair_consistent(pairs, ua, vb, u, v)) continue;
          auto next = pairs;
          next.emplace_back(ua, vb);
          if (dup_wins(std::move(next), budget - 1)) {
            saved = true;
            break;
          }
        }
        if (!saved) result = false;
      }
    }
    memo.emplace(std::move(key), result);
    return result;
  }
};

std::vector<Pair> settled_pairs(const GamePosition& p, size_t count) {
  std::vector<Pair> pairs;
  pairs.reserve(count);
  for (size_t i = 0; i < count; ++i) pairs.emplace_back(p.alpha[i], p.beta[i]);
  return pairs;
}

}  // namespace

bool position_valid(const GamePosition& p) {
  require_same_alphabet(p.u, p.v);
  if (p.alpha.size() != p.beta.size())
    fail("position_valid requires equally many tokens on both words");
  const int ulen = static_cast<int>(p.u.letters.size());
  const int vlen = static_cast<int>(p.v.letters.size());
  for (size_t i = 0; i < p.alpha.size(); ++i) {
    if (p.alpha[i] < 0 || p.alpha[i] >= ulen || p.beta[i] < 0 ||
        p.beta[i] >= vlen)
      fail("token position out of range");
    if (!p.u.alphabet->leq(p.u.letters[p.alpha[i]], p.v.letters[p.beta[i]]))
      return false;
  }
  for (size_t i = 0; i < p.alpha.size(); ++i)
    for (size_t j = i + 1; j < p.alpha.size(); ++j) {
      int dx = (p.alpha[i] > p.alpha[j]) - (p.alpha[i] < p.alpha[j]);
      int dy = (p.beta[i] > p.beta[j]) - (p.beta[i] < p.beta[j]);
      if (dx != dy) return false;
    }
  return true;
}

bool duplicator_wins(const Word& u, const Word& v, int rounds,
                     const EfCaps& caps) {
  check_caps(u, v, rounds, caps);
  Solver solver{u, v, {}};
  return solver.dup_wins({}, rounds);
}

std::optional<Move> best_move(const GamePosition& p, const EfCaps& caps) {
  check_caps(p.u, p.v, p.budget, caps);
  const int ulen = static_cast<int>(p.u.letters.size());
  const int vlen = static_cast<int>(p.v.letters.size());
  Solver solver{p.u, p.v, {}};

  if (p.alpha.size() == p.beta.size()) {
    if (p.budget <= 0) return std::nullopt;
    auto pairs = settled_pairs(p, p.alpha.size());
    for (int side = 0; side < 2; ++side) {
      int len = side == 0 ? ulen : vlen;
      int olen = side == 0 ? vlen : ulen;
      for (int pos = 0; pos < len; ++pos) {
        bool refuted = false;
        for (int r = 0; r < olen && !refuted; ++r) {
          int ua = side == 0 ? pos : r;
          int vb = side == 0 ? r : pos;
          if (!pair_consistent(pairs, ua, vb, p.u, p.v)) continue;
          auto next = pairs;
          next.emplace_back(ua, vb);
          if (solver.dup_wins(std::move(next), p.budget - 1)) refuted = true;
        }
        if (!refuted)
          return Move{side == 0 ? Move::Side::OnU : Move::Side::OnV, pos};
      }
    }
    return std::nullopt;
  }

  bool pending_on_u = p.alpha.size() == p.beta.size() + 1;
  if (!pending_on_u && p.beta.size() != p.alpha.size() + 1)
    fail("token counts differ by more than one");
  if (p.budget <= 0) fail("pending token with no rounds left");
  size_t settled = std::min(p.alpha.size(), p.beta.size());
  auto pairs = settled_pairs(p, settled);
  int pending = pending_on_u ? p.alpha.back() : p.beta.back();
  int olen = pending_on_u ? vlen : ulen;
  for (int r : replies_by_distance(olen, pending)) {
    int ua = pending_on_u ? pending : r;
    int vb = pending_on_u ? r : pending;
    if (!pair_consistent(pairs, ua, vb, p.u, p.v)) continue;
    auto next = pairs;
    next.emplace_back(ua, vb);
    if (solver.dup_wins(std::move(next), p.budget - 1))
      return Move{pending_on_u ? Move::Side::OnV : Move::Side::OnU, r};
  }
  return std::nullopt;
}

namespace {

bool verify_rec(GamePosition& p, int rounds_left,
                const DuplicatorStrategy& strategy) {
  if (rounds_left == 0) return true;
  const int ulen = static_cast<int>(p.u.letters.size());
  const int vlen = static_cast<int>(p.v.letters.size());
  for (int side = 0; side < 2; ++side) {
    int len = side == 0 ? ulen : vlen;
    int olen = side == 0 ? vlen : ulen;
    for (int pos = 0; pos < len; ++pos) {
      Move move{side == 0 ? Move::Side::OnU : Move::Side::OnV, pos};
      int reply = strategy(p, move);
      if (reply < 0 || reply >= olen) return false;
      int ua = side == 0 ? pos : reply;
      int vb = side == 0 ? reply : pos;
      p.alpha.push_back(ua);
      p.beta.push_back(vb);
      bool ok = position_valid(p) && verify_rec(p, rounds_left - 1, strategy);
      p.alpha.pop_back();
      p.beta.pop_back();
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace

bool verify_strategy(const Word& u, const Word& v, int rounds,
                     const DuplicatorStrategy& strategy) {
  require_same_alphabet(u, v);
  if (rounds < 0) fail("rounds must be nonnegative");
  GamePosition p{u, v, {}, {}, rounds};
  return verify_rec(p, rounds, strategy);
}

int doubling_duplicator_reply(const GamePosition& p, Move spoiler) {
  require_same_alphabet(p.u, p.v);
  if (p.u.letters.empty() || p.v.letters.empty())
    fail("the copying strategy needs nonempty words");
  if (p.alpha.size() != p.beta.size())
    fail("the copying strategy expects a settled position");
  const int ulen = static_cast<int>(p.u.letters.size());
  const int vlen = static_cast<int>(p.v.letters.size());
  bool on_u = spoiler.side == Move::Side::OnU;
  int wlen = on_u ? ulen : vlen;
  int olen = on_u ? vlen : ulen;
  if (spoiler.pos < 0 || spoiler.pos >= wlen) fail("move position out of range");

  std::vector<Pair> tokens = {{0, 0}, {wlen - 1, olen - 1}};
  for (size_t i = 0; i < p.alpha.size(); ++i)
    tokens.emplace_back(on_u ? p.alpha[i] : p.beta[i],
                        on_u ? p.beta[i] : p.alpha[i]);

  Pair best = tokens[0];
  for (const auto& t : tokens) {
    int d = std::abs(spoiler.pos - t.first);
    int bd = std::abs(spoiler.pos - best.first);
    if (d < bd || (d == bd && t.first < best.first)) best = t;
  }
  int reply = best.second + (spoiler.pos - best.first);
  return std::clamp(reply, 0, olen - 1);
}

Move bisect_spoiler_move(const GamePosition& p) {
  require_same_alphabet(p.u, p.v);
  if (p.alpha.size() != p.beta.size())
    fail("the demo Spoiler expects a settled position");
  const int ulen = static_cast<int>(p.u.letters.size());
  const int vlen = static_cast<int>(p.v.letters.size());
  Move best{Move::Side::OnU, 0};
  int best_dist = -1;
  for (int side = 0; side < 2; ++side) {
    int len = side == 0 ? ulen : vlen;
    const auto& placed = side == 0 ? p.alpha : p.beta;
    for (int pos = 0; pos < len; ++pos) {
      int dist = std::min(pos, len - 1 - pos);
      for (int t : placed) dist = std::min(dist, std::abs(pos - t));
      if (dist > best_dist) {
        best_dist = dist;
        best = Move{side == 0 ? Move::Side::OnU : Move::Side::OnV, pos};
      }
    }
  }
  return best;
}

namespace {

std::vector<std::vector<Word>> group_by_length(std::vector<Word> words,
                                               int maxlen) {
  std::vector<std::vector<Word>> out(maxlen + 1);
  for (auto& w : words) out[w.letters.size()].push_back(std::move(w));
  return out;
}

bool mutual_domination(const Word& u, const Word& v) {
  const auto& a = u.alphabet;
  std::vector<LetterId> su(u.letters.begin(), u.letters.end());
  std::vector<LetterId> sv(v.letters.begin(), v.letters.end());
  std::sort(su.begin(), su.end());
  su.erase(std::unique(su.begin(), su.end()), su.end());
  std::sort(sv.begin(), sv.end());
  sv.erase(std::unique(sv.begin(), sv.end()), sv.end());
  for (LetterId x : su) {
    bool ok = false;
    for (LetterId y : sv)
      if (a->leq(x, y)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  for (LetterId y : sv) {
    bool ok = false;
    for (LetterId x : su)
      if (a->leq(x, y)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

}  // namespace

std::optional<std::pair<Word, Word>> witness_search(const Nfa& lang, int rounds,
                                                    int maxlen,
                                                    const EfCaps& caps,
                                                    int maxlen_cap) {
  if (rounds < 0) fail("rounds must be nonnegative");
  auto members = group_by_length(enumerate_language(lang, maxlen, maxlen_cap),
                                 maxlen);
  Nfa outside = complement(determinize(lang)).to_nfa();
  auto nonmembers = group_by_length(
      enumerate_language(outside, maxlen, maxlen_cap), maxlen);

  for (int total = 0; total <= 2 * maxlen; ++total) {
    for (int lu = std::max(0, total - maxlen); lu <= std::min(maxlen, total);
         ++lu) {
      int lv = total - lu;
      for (const Word& u : members[lu])
        for (const Word& v : nonmembers[lv]) {
          if (rounds >= 1 && !mutual_domination(u, v)) continue;
          if (duplicator_wins(u, v, rounds, caps)) return std::make_pair(u, v);
        }
    }
  }
  return std::nullopt;
}

}  // namespace fopw
