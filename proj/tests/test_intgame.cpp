#include <string>
#include <vector>

#include "doctest.h"
#include "fopw/intgame.hpp"
#include "fopw/reduction.hpp"

using namespace fopw;

namespace {

IntegerArena arena(int n, const std::string& u, const std::string& v,
                   Orientation o = Orientation::standard) {
  return parse_arena(n, u, v, o);
}

int ceil_log2(int x) {
  int k = 0;
  while ((1 << k) < x) ++k;
  return k;
}

std::string data_path(const std::string& name) {
  return std::string(FOPW_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("arena validation checks the endpoint conventions") {
  CHECK(validate_arena(arena(1, "1 0", "1/0 1/0")));
  CHECK(validate_arena(arena(1, "1 0", "1/0")));
  CHECK(validate_arena(arena(2, "2 1 0", "2/1 1/0")));
  CHECK(validate_arena(arena(2, "1 0", "1/0")));
  CHECK_FALSE(validate_arena(arena(1, "0 1", "1/0 1/0")));
  CHECK_FALSE(validate_arena(arena(2, "2 1 0", "2/1 2/1")));

  CHECK(validate_arena(arena(1, "0 1", "1/0 1/0", Orientation::mirrored)));
  CHECK(validate_arena(arena(2, "0 1 2", "1/0 2/1", Orientation::mirrored)));
  CHECK_FALSE(validate_arena(arena(1, "1 0", "1/0", Orientation::mirrored)));
}

TEST_CASE("malformed arenas are errors rather than invalid") {
  CHECK_THROWS(parse_arena(1, "1 0", "2/0", Orientation::standard));
  CHECK_THROWS(parse_arena(1, "x", "1/0", Orientation::standard));
  CHECK_THROWS(parse_arena(1, "1 0", "1-0", Orientation::standard));
  CHECK_THROWS(validate_arena(IntegerArena{0, {0}, {1}, Orientation::standard}));
  CHECK_THROWS(validate_arena(IntegerArena{1, {}, {1}, Orientation::standard}));
  CHECK_THROWS(validate_arena(IntegerArena{1, {1, 0}, {}, Orientation::standard}));
  CHECK_THROWS(validate_arena(IntegerArena{1, {2, 0}, {1}, Orientation::standard}));
  CHECK_THROWS(validate_arena(IntegerArena{1, {1, 0}, {0}, Orientation::standard}));
}

TEST_CASE("the referee accepts matching tokens and rejects mixed components") {
  IntegerArena a = arena(3, "3 2 1", "3/2 2/1");
  CHECK(referee_check(a, {}));
  CHECK(referee_check(a, {{0, 0}, {1, 1}}));

  IntegerArena b = arena(3, "3 1 0", "3/2 2/1 1/0");
  CHECK(referee_check(b, {{0, 0}}));
  CHECK_FALSE(referee_check(b, {{0, 0}, {1, 1}}));
  CHECK_FALSE(referee_check(b, {{2, 0}}));
  CHECK_FALSE(referee_check(b, {{0, 0}, {2, 1}}));

  IntegerArena c = arena(2, "2 1", "2/1 2/1");
  CHECK(referee_check(c, {{0, 0}}));

  CHECK_FALSE(referee_check(a, {{0, 1}, {1, 0}}));
}

TEST_CASE("the inductive spoiler opens on the rightmost top letter") {
  {
    IntGameState s{arena(1, "1 0", "1/0 1/0"), {}};
    CHECK(spoiler_move(s) == IntMove{true, 0});
    s.history = {{0, 0}};
    CHECK(spoiler_move(s) == IntMove{true, 1});
    s.history = {{0, 1}};
    CHECK(spoiler_move(s) == IntMove{true, 1});
  }
  {
    IntGameState s{arena(2, "2 2 1 0", "2/1 1/0"), {}};
    CHECK(spoiler_move(s) == IntMove{true, 1});
  }
  {
    IntGameState s{arena(2, "1 0", "1/0"), {}};
    CHECK(spoiler_move(s) == IntMove{true, 0});
  }
}

TEST_CASE("histories that ignore the strategy are rejected") {
  IntGameState s{arena(1, "1 0", "1/0"), {{1, 0}}};
  CHECK_THROWS(spoiler_move(s));
  IntGameState t{arena(1, "1 0", "1/0"), {{0, 5}}};
  CHECK_THROWS(spoiler_move(t));
}

TEST_CASE("the smallest arena falls in exactly two rounds") {
  auto r = solve_int_game(arena(1, "1 0", "1/0"), 4);
  CHECK(r.spoiler_wins);
  CHECK(r.rounds == 2);

  auto r2 = solve_int_game(arena(1, "1 0", "1/0 1/0"), 2);
  CHECK(r2.spoiler_wins);
  CHECK(r2.rounds == 2);

  auto chk = verify_spoiler_strategy(arena(1, "1 0", "1/0"), 2);
  CHECK(chk.ok);
  CHECK(chk.worst_rounds <= 2);
}

TEST_CASE("arena enumeration matches a direct count") {
  auto std1 = enumerate_arenas(1, 4, 4, Orientation::standard);
  CHECK(std1.size() == 28);
  auto mir1 = enumerate_arenas(1, 4, 4, Orientation::mirrored);
  CHECK(mir1.size() == 28);

  // u must start with 1, end with 0, interior free over {0,1}:
  // lengths 2..4 give 1 + 2 + 4 choices; v is any "1/0" run of length 1..4.
  int expected_u = 1 + 2 + 4;
  int expected_v = 4;
  CHECK(static_cast<int>(std1.size()) == expected_u * expected_v);

  for (const auto& a : std1) CHECK(validate_arena(a));
  for (const auto& a : mir1) CHECK(validate_arena(a));
}

TEST_CASE("spoiler wins every small arena within two rounds per level") {
  for (auto o : {Orientation::standard, Orientation::mirrored})
    for (const auto& a : enumerate_arenas(1, 4, 4, o)) {
      auto r = solve_int_game(a, 2);
      CHECK(r.spoiler_wins);
      CHECK(r.rounds <= 2);
      auto chk = verify_spoiler_strategy(a, 2);
      CHECK(chk.ok);
      CHECK(chk.worst_rounds <= 2);
    }
}

TEST_CASE("mirrored arenas behave like their reversals") {
  for (const auto& a : enumerate_arenas(1, 3, 3, Orientation::standard)) {
    IntegerArena m;
    m.n = a.n;
    m.u.assign(a.u.rbegin(), a.u.rend());
    m.v.assign(a.v.rbegin(), a.v.rend());
    m.orientation = Orientation::mirrored;
    CHECK(validate_arena(m));
    auto ra = solve_int_game(a, 2);
    auto rm = solve_int_game(m, 2);
    CHECK(ra.spoiler_wins == rm.spoiler_wins);
    CHECK(ra.rounds == rm.rounds);
  }
}

TEST_CASE("arenas without the top letter still fall within the budget") {
  IntegerArena a = arena(2, "1 0", "1/0");
  auto r = solve_int_game(a, 4);
  CHECK(r.spoiler_wins);
  CHECK(r.rounds <= 4);
  CHECK(verify_spoiler_strategy(a, 4).ok);
}

TEST_CASE("block heights of a merged instance form a falling arena") {
  ReductionContext flip(load_tm_file(data_path("flip3.tm")));
  Word start_word = parse_word(flip.alphabet(), "1_d3 [p1.0] 0^d1 0 0 0");
  auto start = as_configuration(flip, start_word);
  REQUIRE(start.has_value());

  std::vector<ConfigWord> run{*start};
  for (int i = 0; i < 3; ++i) {
    auto next = tm_step(flip, run.back());
    REQUIRE(next.has_value());
    run.push_back(*next);
  }

  std::vector<int> heights;
  for (const auto& c : run) {
    auto h = height(flip, c);
    REQUIRE_FALSE(h.overflow);
    heights.push_back(h.value);
  }
  CHECK(heights == std::vector<int>{4, 3, 2, 1});

  // u keeps every block height; v drops the last block like the merged word
  // drops one configuration, so its final letter <2/1> tops u's final 1.
  IntegerArena a;
  a.n = heights.front();
  a.u = heights;
  a.v.assign(heights.begin(), heights.end() - 1);
  a.orientation = Orientation::standard;
  CHECK(validate_arena(a));

  auto r = solve_int_game(a, 2 * a.n);
  CHECK(r.spoiler_wins);
  CHECK(r.rounds <= 2 * a.n);

  int f_of_n = 2 + 2 * a.n + ceil_log2(a.n) + 5;
  CHECK(r.rounds + 2 + ceil_log2(a.n) + 5 <= f_of_n);
}
