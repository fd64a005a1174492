#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "fopw/alphabet.hpp"
#include "fopw/logic.hpp"
#include "test_util.hpp"

using namespace fopw;
using testutil::all_words;
using testutil::ordered_pairs;
using testutil::word_texts;

namespace {

// Letters a, b, c with a <= b the only nontrivial pair.
AlphabetRef abc_partial() {
  return OrderedAlphabet::make({"a", "b", "c"}, {{"a", "b"}});
}

AlphabetRef abc_trivial() {
  return OrderedAlphabet::make({"a", "b", "c"}, {});
}

Formula atom(const AlphabetRef& a, const std::string& letter,
             const std::string& var) {
  return Formula::atom(a, a->id(letter), var);
}

// Random closed FO formula with negation, for exercising the translation.
Formula random_fo(const AlphabetRef& a, std::mt19937_64& rng, int depth,
                  std::vector<std::string> bound) {
  if (depth == 0 || bound.empty()) {
    if (bound.empty() || rng() % 4 == 0) {
      std::string var = "v" + std::to_string(bound.size());
      bound.push_back(var);
      return Formula::exists(var, random_fo(a, rng, depth, bound));
    }
    auto pick = [&] { return bound[rng() % bound.size()]; };
    switch (rng() % 4) {
      case 0: return Formula::atom(a, static_cast<LetterId>(rng() % a->size()), pick());
      case 1: return Formula::le(a, pick(), pick());
      case 2: return Formula::lt(a, pick(), pick());
      default: return rng() % 2 ? Formula::truth(a) : Formula::falsity(a);
    }
  }
  switch (rng() % 5) {
    case 0: return Formula::negation(random_fo(a, rng, depth - 1, bound));
    case 1:
      return Formula::conj(random_fo(a, rng, depth - 1, bound),
                           random_fo(a, rng, depth - 1, bound));
    case 2:
      return Formula::disj(random_fo(a, rng, depth - 1, bound),
                           random_fo(a, rng, depth - 1, bound));
    default: {
      std::string var = "v" + std::to_string(bound.size());
      bound.push_back(var);
      auto body = random_fo(a, rng, depth - 1, bound);
      return rng() % 2 ? Formula::exists(var, std::move(body))
                       : Formula::forall(var, std::move(body));
    }
  }
}

}  // namespace

TEST_CASE("parser builds the expected trees") {
  auto a = abc_partial();

  Formula f = parse_formula(a, "A x. a(x)");
  CHECK(f.kind() == Formula::Kind::Forall);
  CHECK(f.var1() == "x");
  CHECK(f.child().kind() == Formula::Kind::Atom);
  CHECK(f.child().atom_var() == "x");
  CHECK(a->name(f.child().atom_letter()) == "a");

  Formula g = parse_formula(a, "E x. E y. x <= y");
  CHECK(g == Formula::exists("x", Formula::exists("y", Formula::le(a, "x", "y"))));

  CHECK(parse_formula(a, "true").kind() == Formula::Kind::True);
  CHECK(parse_formula(a, "false").kind() == Formula::Kind::False);
}

TEST_CASE("negation is rejected in the positive dialect only") {
  auto a = abc_partial();
  CHECK_THROWS(parse_formula(a, "E x. !a(x)"));
  CHECK_THROWS(parse_formula(a, "E x. !a(x)", Dialect::foplus));
  Formula f = parse_formula(a, "E x. !a(x)", Dialect::fo);
  CHECK(f.child().kind() == Formula::Kind::Not);
  CHECK(f.uses_negation());
}

TEST_CASE("conjunction binds tighter than disjunction") {
  auto a = abc_partial();
  Formula f = parse_formula(a, "E x. a(x) | b(x) & c(x)");
  Formula expect = Formula::exists(
      "x", Formula::disj(atom(a, "a", "x"),
                         Formula::conj(atom(a, "b", "x"), atom(a, "c", "x"))));
  CHECK(f == expect);

  Formula g = parse_formula(a, "E x. (a(x) | b(x)) & c(x)");
  CHECK(g.child().kind() == Formula::Kind::And);

  Formula h = parse_formula(a, "E x. !a(x) & b(x)", Dialect::fo);
  CHECK(h.child().kind() == Formula::Kind::And);
  CHECK(h.child().child(0).kind() == Formula::Kind::Not);
}

TEST_CASE("quantifier scope extends maximally to the right") {
  auto a = abc_partial();
  Formula f = parse_formula(a, "E x. a(x) | b(x)");
  CHECK(f.kind() == Formula::Kind::Exists);
  CHECK(f.child().kind() == Formula::Kind::Or);
  Formula g = parse_formula(a, "(E x. a(x)) | b(y)");
  CHECK(g.kind() == Formula::Kind::Or);
}

TEST_CASE("angle-bracket letter names do not clash with strict comparison") {
  auto a = OrderedAlphabet::make({"<a/b>", "c"}, {});
  Formula f = parse_formula(a, "E x. <a/b>(x)");
  CHECK(a->name(f.child().atom_letter()) == "<a/b>");
  Formula g = parse_formula(a, "E x. E y. x < y & <a/b>(x)");
  CHECK(g.child().child().kind() == Formula::Kind::And);
  CHECK(g.child().child().child(0).kind() == Formula::Kind::Lt);
  CHECK(parse_formula(a, print_formula(f)) == f);
}

TEST_CASE("parse errors carry an offset") {
  auto a = abc_partial();
  CHECK_THROWS(parse_formula(a, "E x. d(x)"));
  CHECK_THROWS(parse_formula(a, "E x. a(x) |"));
  CHECK_THROWS(parse_formula(a, "E x a(x)"));
  CHECK_THROWS(parse_formula(a, ""));
  try {
    parse_formula(a, "E x. !a(x)");
    FAIL("negation accepted");
  } catch (const std::exception& e) {
    std::string msg = e.what();
    CHECK(msg.find("offset") != std::string::npos);
    CHECK(msg.find("negation") != std::string::npos);
  }
}

TEST_CASE("quantifier rank counts nested quantifiers") {
  auto a = abc_partial();
  Formula atom_only = atom(a, "a", "x");
  CHECK(quantifier_rank(atom_only) == 0);
  CHECK(quantifier_rank(parse_formula(a, "E x. A y. x <= y")) == 2);
  CHECK(quantifier_rank(
            parse_formula(a, "(E x. a(x)) & (E x. E y. x < y)")) == 2);
}

TEST_CASE("evaluation respects the letter order") {
  auto a = abc_partial();
  CHECK(evaluate(parse_formula(a, "A x. a(x)"), parse_word(a, "a b")));
  CHECK_FALSE(evaluate(parse_formula(a, "E x. b(x)"), parse_word(a, "a c a")));
  CHECK(evaluate(parse_formula(a, "E x. b(x)"), parse_word(a, "a b a")));
  CHECK(evaluate(parse_formula(a, "A x. b(x)"), parse_word(a, "")));
  CHECK_FALSE(evaluate(parse_formula(a, "E x. b(x)"), parse_word(a, "")));
}

TEST_CASE("powerset atoms test predicate membership") {
  auto p = OrderedAlphabet::powerset({"a", "b"});
  Formula f = parse_formula(p, "E x. a(x)");
  CHECK(evaluate(f, parse_word(p, "{a,b}")));
  CHECK(evaluate(f, parse_word(p, "{b} {a}")));
  CHECK_FALSE(evaluate(f, parse_word(p, "{b}")));
}

TEST_CASE("valuations bind free variables") {
  auto a = abc_partial();
  Formula f = atom(a, "b", "x");
  Word w = parse_word(a, "a b");
  CHECK(evaluate(f, w, {{"x", 1}}));
  CHECK_FALSE(evaluate(f, w, {{"x", 0}}));
  CHECK_THROWS(evaluate(f, w));
  CHECK_THROWS(evaluate(f, w, {{"x", 5}}));
  CHECK(f.free_variables() == std::vector<std::string>{"x"});
}

TEST_CASE("shadowed variables use the inner binding") {
  auto a = abc_partial();
  Formula f = parse_formula(a, "E x. c(x) & E x. a(x)");
  CHECK(evaluate(f, parse_word(a, "c a")));
  CHECK_FALSE(evaluate(f, parse_word(a, "c c")));
}

TEST_CASE("defined language enumerates satisfying words") {
  auto a = abc_partial();
  CHECK(word_texts(defined_language(parse_formula(a, "E x. b(x)"), 1)) ==
        std::vector<std::string>{"b"});

  auto p = OrderedAlphabet::powerset({"a", "b"});
  CHECK(word_texts(defined_language(parse_formula(p, "E x. a(x) & b(x)"), 1)) ==
        std::vector<std::string>{"{a,b}"});

  CHECK(word_texts(defined_language(parse_formula(a, "A x. x < x"), 2)) ==
        std::vector<std::string>{""});

  CHECK_THROWS(defined_language(atom(a, "a", "x"), 2));
  try {
    defined_language(parse_formula(a, "E x. b(x)"), 13);
    FAIL("cap not enforced");
  } catch (const std::exception& e) {
    CHECK(std::string(e.what()).find("cap") != std::string::npos);
  }
}

TEST_CASE("defined language agrees with direct evaluation") {
  auto a = abc_partial();
  Formula f = parse_formula(a, "A x. a(x) | E y. x < y & c(y)");
  auto lang = defined_language(f, 3);
  size_t seen = 0;
  for (const Word& w : all_words(a, 3)) {
    bool in = std::find(lang.begin(), lang.end(), w) != lang.end();
    CHECK(in == evaluate(f, w));
    seen += in;
  }
  CHECK(seen == lang.size());
}

TEST_CASE("negation translation on the three running examples") {
  auto a = abc_trivial();
  Formula f1 = parse_formula(a, "E x. !a(x)", Dialect::fo);
  CHECK(print_formula(fo_to_foplus_trivial_order(f1)) == "E x. b(x) | c(x)");

  Formula f2 = parse_formula(a, "E x. E y. !(x <= y)", Dialect::fo);
  CHECK(print_formula(fo_to_foplus_trivial_order(f2)) == "E x. E y. y<x");

  Formula f3 = parse_formula(a, "E x. E y. !(x < y)", Dialect::fo);
  CHECK(print_formula(fo_to_foplus_trivial_order(f3)) == "E x. E y. y<=x");

  Formula f4 = parse_formula(a, "E x. !!a(x)", Dialect::fo);
  CHECK(print_formula(fo_to_foplus_trivial_order(f4)) == "E x. a(x)");
}

TEST_CASE("negation translation requires a trivial order") {
  auto a = abc_partial();
  Formula f = parse_formula(a, "E x. !a(x)", Dialect::fo);
  CHECK_THROWS(fo_to_foplus_trivial_order(f));
}

TEST_CASE("negation translation preserves the language and the rank") {
  auto a = abc_trivial();
  std::mt19937_64 rng(97);
  for (int i = 0; i < 40; ++i) {
    Formula f = random_fo(a, rng, 3, {});
    Formula g = fo_to_foplus_trivial_order(f);
    CHECK_FALSE(g.uses_negation());
    CHECK(quantifier_rank(g) == quantifier_rank(f));
    CHECK(word_texts(defined_language(g, 4)) ==
          word_texts(defined_language(f, 4)));
  }
}

TEST_CASE("printing and parsing are inverse on sampled formulas") {
  auto a = abc_partial();
  auto p = OrderedAlphabet::powerset({"a", "b"});
  for (uint64_t seed = 0; seed < 40; ++seed)
    for (int rank = 0; rank <= 3; ++rank) {
      for (const auto& alph : {a, p}) {
        Formula f = sample_formula(alph, rank, seed);
        CHECK(parse_formula(alph, print_formula(f)) == f);
        CHECK(quantifier_rank(f) <= rank);
        CHECK_FALSE(f.uses_negation());
        CHECK(f.free_variables().empty());
      }
    }
}

TEST_CASE("formula sampling is deterministic in the seed") {
  auto a = abc_partial();
  CHECK(sample_formula(a, 1, 7) == sample_formula(a, 1, 7));
  CHECK(sample_formula(a, 2, 123) == sample_formula(a, 2, 123));
  bool any_differ = false;
  for (uint64_t seed = 8; seed < 16 && !any_differ; ++seed)
    any_differ = !(sample_formula(a, 1, seed) == sample_formula(a, 1, 7));
  CHECK(any_differ);
}

TEST_CASE("rank zero samples are truth constants") {
  auto a = abc_partial();
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Formula f = sample_formula(a, 0, seed);
    CHECK(quantifier_rank(f) == 0);
    bool value = evaluate(f, parse_word(a, ""));
    CHECK(value == evaluate(f, parse_word(a, "c")));
  }
  CHECK_THROWS(sample_formula(a, 4, 0));
  CHECK(quantifier_rank(sample_formula(a, 4, 0, 5)) <= 4);
}

TEST_CASE("positive formulas are monotone under the word order") {
  auto a = abc_partial();
  auto p = OrderedAlphabet::powerset({"a", "b"});
  auto pairs_a = ordered_pairs(a, 3);
  auto pairs_p = ordered_pairs(p, 2);
  for (uint64_t seed = 0; seed < 50; ++seed) {
    Formula f = sample_formula(a, 2, seed);
    for (const auto& [u, v] : pairs_a)
      if (evaluate(f, u)) CHECK(evaluate(f, v));
    Formula g = sample_formula(p, 2, seed);
    for (const auto& [u, v] : pairs_p)
      if (evaluate(g, u)) CHECK(evaluate(g, v));
  }
}
