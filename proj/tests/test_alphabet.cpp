#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "fopw/alphabet.hpp"

using namespace fopw;

namespace {

AlphabetRef chain_abc() {
  return OrderedAlphabet::make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
}

// Set of predicate names in a canonical powerset letter name like "{a,c}".
std::vector<std::string> braces_to_set(const std::string& name) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : name) {
    if (c == '{' ) continue;
    if (c == ',' || c == '}') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
      continue;
    }
    cur += c;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool subset(const std::vector<std::string>& s, const std::vector<std::string>& t) {
  return std::includes(t.begin(), t.end(), s.begin(), s.end());
}

}  // namespace

TEST_CASE("order closes reflexively and transitively") {
  auto a = chain_abc();
  CHECK(a->leq(a->id("a"), a->id("a")));
  CHECK(a->leq(a->id("a"), a->id("b")));
  CHECK(a->leq(a->id("b"), a->id("c")));
  CHECK(a->leq(a->id("a"), a->id("c")));
  CHECK_FALSE(a->leq(a->id("c"), a->id("a")));
  CHECK_FALSE(a->trivial_order());
}

TEST_CASE("cyclic order input is rejected") {
  CHECK_THROWS(OrderedAlphabet::make({"a", "b"}, {{"a", "b"}, {"b", "a"}}));
  CHECK_THROWS(
      OrderedAlphabet::make({"a", "b", "c"},
                            {{"a", "b"}, {"b", "c"}, {"c", "a"}}));
}

TEST_CASE("duplicate and unknown letters are rejected") {
  CHECK_THROWS(OrderedAlphabet::make({"a", "a"}, {}));
  CHECK_THROWS(OrderedAlphabet::make({"a"}, {{"a", "x"}}));
  auto a = chain_abc();
  CHECK_THROWS(a->id("x"));
  CHECK_FALSE(a->find("x").has_value());
  CHECK(a->find("b").has_value());
}

TEST_CASE("powerset alphabet is ordered by inclusion") {
  auto p = OrderedAlphabet::powerset({"a", "b"});
  REQUIRE(p->size() == 4);
  CHECK(p->is_powerset());
  CHECK(p->find("{}").has_value());
  CHECK(p->find("{a}").has_value());
  CHECK(p->find("{b}").has_value());
  CHECK(p->find("{a,b}").has_value());

  for (LetterId x = 0; x < p->size(); ++x)
    for (LetterId y = 0; y < p->size(); ++y) {
      bool expect = subset(braces_to_set(p->name(x)), braces_to_set(p->name(y)));
      CHECK(p->leq(x, y) == expect);
    }
}

TEST_CASE("powerset names sort their predicates") {
  auto p = OrderedAlphabet::powerset({"c", "a"});
  CHECK(p->find("{a,c}").has_value());
  CHECK_FALSE(p->find("{c,a}").has_value());
  REQUIRE(p->predicates().size() == 2);
  CHECK(p->predicates()[0] == "a");
  CHECK(p->predicates()[1] == "c");
}

TEST_CASE("singleton letters and predicate membership") {
  auto p = OrderedAlphabet::powerset({"a", "b", "c"});
  REQUIRE(p->size() == 8);
  auto sa = p->singleton_letter("a");
  REQUIRE(sa.has_value());
  CHECK(p->name(*sa) == "{a}");
  CHECK(p->letter_contains(p->id("{a,c}"), "a"));
  CHECK(p->letter_contains(p->id("{a,c}"), "c"));
  CHECK_FALSE(p->letter_contains(p->id("{a,c}"), "b"));
  CHECK_FALSE(p->singleton_letter("x").has_value());

  auto plain = chain_abc();
  CHECK_FALSE(plain->is_powerset());
  CHECK_FALSE(plain->singleton_letter("a").has_value());
}

TEST_CASE("up-closure of a letter lists dominating letters by name") {
  auto a = chain_abc();
  auto up = a->up_closure(a->id("a"));
  REQUIRE(up.size() == 3);
  CHECK(a->name(up[0]) == "a");
  CHECK(a->name(up[1]) == "b");
  CHECK(a->name(up[2]) == "c");
  CHECK(a->up_closure(a->id("c")).size() == 1);
}

TEST_CASE("word order is componentwise on equal lengths") {
  auto a = chain_abc();
  Word u = parse_word(a, "a b");
  Word v = parse_word(a, "b c");
  Word w = parse_word(a, "b a");
  CHECK(leq_word(u, u));
  CHECK(leq_word(u, v));
  CHECK_FALSE(leq_word(v, u));
  CHECK_FALSE(leq_word(u, w));
  CHECK_FALSE(leq_word(u, parse_word(a, "a b a")));
  CHECK(leq_word(parse_word(a, ""), parse_word(a, "")));
}

TEST_CASE("words from different alphabet objects do not mix") {
  auto a1 = chain_abc();
  auto a2 = chain_abc();
  Word u{a1, {0}};
  Word v{a2, {0}};
  CHECK_THROWS(require_same_alphabet(u, v));
  CHECK_THROWS(leq_word(u, v));
}

TEST_CASE("lexicographic comparison uses letter names") {
  auto a = OrderedAlphabet::make({"b", "a"}, {});
  CHECK(a->trivial_order());
  Word ab = parse_word(a, "a b");
  Word ba = parse_word(a, "b a");
  CHECK(lex_less(ab, ba));
  CHECK_FALSE(lex_less(ba, ab));
  CHECK_FALSE(lex_less(ab, ab));
  CHECK(a->lex_rank(a->id("a")) < a->lex_rank(a->id("b")));
  REQUIRE(a->lex_order().size() == 2);
  CHECK(a->name(a->lex_order()[0]) == "a");
}

TEST_CASE("alphabet text round trips") {
  std::string text =
      "# comment line\n"
      "letters: a b c\n"
      "order: a<b\n"
      "order: b < c\n";
  auto a = parse_alphabet_text(text);
  CHECK(a->size() == 3);
  CHECK(a->leq(a->id("a"), a->id("c")));
  auto b = parse_alphabet_text(alphabet_to_text(*a));
  REQUIRE(b->size() == a->size());
  for (LetterId x = 0; x < a->size(); ++x) {
    CHECK(b->name(x) == a->name(x));
    for (LetterId y = 0; y < a->size(); ++y)
      CHECK(b->leq(x, y) == a->leq(x, y));
  }
}

TEST_CASE("powerset alphabet text round trips") {
  auto a = parse_alphabet_text("predicates: b a\n");
  CHECK(a->is_powerset());
  CHECK(a->size() == 4);
  auto b = parse_alphabet_text(alphabet_to_text(*a));
  CHECK(b->is_powerset());
  CHECK(b->size() == 4);
  CHECK(b->find("{a,b}").has_value());
}

TEST_CASE("word text round trips and the empty word works") {
  auto a = chain_abc();
  Word w = parse_word(a, "  a   c b ");
  CHECK(w.size() == 3);
  CHECK(word_to_text(w) == "a c b");
  CHECK(parse_word(a, word_to_text(w)) == w);
  Word e = parse_word(a, "   ");
  CHECK(e.empty());
  CHECK(word_to_text(e).empty());
  CHECK_THROWS(parse_word(a, "a x"));
}

TEST_CASE("malformed alphabet files are rejected") {
  CHECK_THROWS(parse_alphabet_text("order: a<b\n"));
  CHECK_THROWS(parse_alphabet_text("letters: a\norder: a<\n"));
  CHECK_THROWS(parse_alphabet_text("letters:\n"));
  CHECK_THROWS(parse_alphabet_text("letters: a b\npredicates: a\n"));
}
