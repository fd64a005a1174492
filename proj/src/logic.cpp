#include "fopw/logic.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fopw {

struct Formula::Node {
  Kind kind;
  AlphabetRef alphabet;
  LetterId letter = -1;
  std::string a, b;  // atom: a = var; Le/Lt: a, b; quantifier: a = var
  Formula left, right;
};

namespace {

Formula make_node(Formula::Node n);

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

void require_alphabet(const AlphabetRef& a) {
  if (!a) fail("formula requires an alphabet");
}

}  // namespace

struct NodeAccess {
  static Formula wrap(std::shared_ptr<const Formula::Node> n) {
    Formula f;
    f.node_ = std::move(n);
    return f;
  }
  static const Formula::Node& get(const Formula& f) {
    if (!f.node_) fail("empty formula");
    return *f.node_;
  }
};

namespace {

Formula make_node(Formula::Node n) {
  return NodeAccess::wrap(std::make_shared<const Formula::Node>(std::move(n)));
}

const Formula::Node& node(const Formula& f) { return NodeAccess::get(f); }

}  // namespace

Formula Formula::truth(AlphabetRef a) {
  require_alphabet(a);
  return make_node({Kind::True, std::move(a), -1, "", "", {}, {}});
}

Formula Formula::falsity(AlphabetRef a) {
  require_alphabet(a);
  return make_node({Kind::False, std::move(a), -1, "", "", {}, {}});
}

Formula Formula::atom(AlphabetRef a, LetterId letter, std::string var) {
  require_alphabet(a);
  if (letter < 0 || letter >= static_cast<LetterId>(a->size()))
    fail("atom letter out of range");
  if (var.empty()) fail("atom variable name is empty");
  return make_node({Kind::Atom, std::move(a), letter, std::move(var), "", {}, {}});
}

Formula Formula::le(AlphabetRef a, std::string x, std::string y) {
  require_alphabet(a);
  return make_node({Kind::Le, std::move(a), -1, std::move(x), std::move(y), {}, {}});
}

Formula Formula::lt(AlphabetRef a, std::string x, std::string y) {
  require_alphabet(a);
  return make_node({Kind::Lt, std::move(a), -1, std::move(x), std::move(y), {}, {}});
}

Formula Formula::negation(Formula f) {
  auto a = f.alphabet();
  return make_node({Kind::Not, a, -1, "", "", std::move(f), {}});
}

Formula Formula::conj(Formula f, Formula g) {
  auto a = f.alphabet();
  if (a != g.alphabet()) fail("conjunction mixes alphabets");
  return make_node({Kind::And, a, -1, "", "", std::move(f), std::move(g)});
}

Formula Formula::disj(Formula f, Formula g) {
  auto a = f.alphabet();
  if (a != g.alphabet()) fail("disjunction mixes alphabets");
  return make_node({Kind::Or, a, -1, "", "", std::move(f), std::move(g)});
}

Formula Formula::exists(std::string var, Formula f) {
  if (var.empty()) fail("quantifier variable name is empty");
  auto a = f.alphabet();
  return make_node({Kind::Exists, a, -1, std::move(var), "", std::move(f), {}});
}

Formula Formula::forall(std::string var, Formula f) {
  if (var.empty()) fail("quantifier variable name is empty");
  auto a = f.alphabet();
  return make_node({Kind::Forall, a, -1, std::move(var), "", std::move(f), {}});
}

Formula::Kind Formula::kind() const { return node(*this).kind; }

const AlphabetRef& Formula::alphabet() const { return node(*this).alphabet; }

LetterId Formula::atom_letter() const {
  const auto& n = node(*this);
  if (n.kind != Kind::Atom) fail("not an atom");
  return n.letter;
}

const std::string& Formula::atom_var() const {
  const auto& n = node(*this);
  if (n.kind != Kind::Atom) fail("not an atom");
  return n.a;
}

const std::string& Formula::var1() const {
  const auto& n = node(*this);
  switch (n.kind) {
    case Kind::Le:
    case Kind::Lt:
    case Kind::Exists:
    case Kind::Forall:
      return n.a;
    default:
      fail("formula kind has no variable");
  }
}

const std::string& Formula::var2() const {
  const auto& n = node(*this);
  if (n.kind != Kind::Le && n.kind != Kind::Lt) fail("not a comparison");
  return n.b;
}

const Formula& Formula::child(size_t i) const {
  const auto& n = node(*this);
  switch (n.kind) {
    case Kind::Not:
    case Kind::Exists:
    case Kind::Forall:
      if (i != 0) fail("child index out of range");
      return n.left;
    case Kind::And:
    case Kind::Or:
      if (i > 1) fail("child index out of range");
      return i == 0 ? n.left : n.right;
    default:
      fail("formula kind has no children");
  }
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  const auto& x = *node_;
  const auto& y = *other.node_;
  if (x.kind != y.kind || x.alphabet != y.alphabet) return false;
  if (x.letter != y.letter || x.a != y.a || x.b != y.b) return false;
  if (x.left.valid() != y.left.valid() || x.right.valid() != y.right.valid())
    return false;
  if (x.left.valid() && !(x.left == y.left)) return false;
  if (x.right.valid() && !(x.right == y.right)) return false;
  return true;
}

bool Formula::uses_negation() const {
  const auto& n = node(*this);
  if (n.kind == Kind::Not) return true;
  if (n.left.valid() && n.left.uses_negation()) return true;
  if (n.right.valid() && n.right.uses_negation()) return true;
  return false;
}

namespace {

void collect_free(const Formula& f, std::vector<std::string>& bound,
                  std::set<std::string>& out) {
  const auto k = f.kind();
  using K = Formula::Kind;
  switch (k) {
    case K::True:
    case K::False:
      return;
    case K::Atom: {
      const auto& v = f.atom_var();
      if (std::find(bound.begin(), bound.end(), v) == bound.end()) out.insert(v);
      return;
    }
    case K::Le:
    case K::Lt: {
      for (const auto* v : {&f.var1(), &f.var2()})
        if (std::find(bound.begin(), bound.end(), *v) == bound.end())
          out.insert(*v);
      return;
    }
    case K::Not:
      collect_free(f.child(), bound, out);
      return;
    case K::And:
    case K::Or:
      collect_free(f.child(0), bound, out);
      collect_free(f.child(1), bound, out);
      return;
    case K::Exists:
    case K::Forall:
      bound.push_back(f.var1());
      collect_free(f.child(), bound, out);
      bound.pop_back();
      return;
  }
}

}  // namespace

std::vector<std::string> Formula::free_variables() const {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free(*this, bound, out);
  return {out.begin(), out.end()};
}

int quantifier_rank(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True:
    case K::False:
    case K::Atom:
    case K::Le:
    case K::Lt:
      return 0;
    case K::Not:
      return quantifier_rank(f.child());
    case K::And:
    case K::Or:
      return std::max(quantifier_rank(f.child(0)), quantifier_rank(f.child(1)));
    case K::Exists:
    case K::Forall:
      return 1 + quantifier_rank(f.child());
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Token {
  enum class Type { Name, LetterName, LParen, RParen, Dot, AndOp, OrOp, NotOp,
                    LeOp, LtOp, End };
  Type type;
  std::string text;
  size_t pos;
};

[[noreturn]] void parse_fail(size_t pos, const std::string& msg) {
  std::ostringstream os;
  os << "formula parse error at offset " << pos << ": " << msg;
  throw std::runtime_error(os.str());
}

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  const size_t n = s.size();
  while (i < n) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    size_t start = i;
    switch (c) {
      case '(': out.push_back({Token::Type::LParen, "(", start}); ++i; continue;
      case ')': out.push_back({Token::Type::RParen, ")", start}); ++i; continue;
      case '.': out.push_back({Token::Type::Dot, ".", start}); ++i; continue;
      case '&': out.push_back({Token::Type::AndOp, "&", start}); ++i; continue;
      case '|': out.push_back({Token::Type::OrOp, "|", start}); ++i; continue;
      case '!': out.push_back({Token::Type::NotOp, "!", start}); ++i; continue;
      case '#': out.push_back({Token::Type::LetterName, "#", start}); ++i; continue;
      case '{':
      case '[': {
        char close = (c == '{') ? '}' : ']';
        size_t j = s.find(close, i);
        if (j == std::string::npos) parse_fail(start, "unterminated letter name");
        out.push_back({Token::Type::LetterName, s.substr(i, j - i + 1), start});
        i = j + 1;
        continue;
      }
      case '<': {
        if (i + 1 < n && s[i + 1] == '=') {
          out.push_back({Token::Type::LeOp, "<=", start});
          i += 2;
          continue;
        }
        // An angle-bracket letter name must close before any whitespace and
        // contain '/'; everything else is the strict order.
        size_t j = i + 1;
        bool slash = false;
        while (j < n && s[j] != '>' &&
               !std::isspace(static_cast<unsigned char>(s[j]))) {
          if (s[j] == '/') slash = true;
          ++j;
        }
        if (j < n && s[j] == '>' && slash) {
          out.push_back({Token::Type::LetterName, s.substr(i, j - i + 1), start});
          i = j + 1;
        } else {
          out.push_back({Token::Type::LtOp, "<", start});
          ++i;
        }
        continue;
      }
      default: break;
    }
    if (name_char(c)) {
      size_t j = i;
      while (j < n && name_char(s[j])) ++j;
      out.push_back({Token::Type::Name, s.substr(i, j - i), start});
      i = j;
      continue;
    }
    parse_fail(start, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Token::Type::End, "", n});
  return out;
}

class Parser {
 public:
  Parser(AlphabetRef alphabet, const std::string& text, Dialect dialect)
      : alphabet_(std::move(alphabet)), tokens_(lex(text)), dialect_(dialect) {}

  Formula run() {
    Formula f = parse_or();
    if (peek().type != Token::Type::End)
      parse_fail(peek().pos, "unexpected trailing input");
    return f;
  }

 private:
  const Token& peek(size_t ahead = 0) const {
    size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  Token take() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }

  Formula parse_or() {
    Formula f = parse_and();
    while (peek().type == Token::Type::OrOp) {
      take();
      f = Formula::disj(std::move(f), parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (peek().type == Token::Type::AndOp) {
      take();
      f = Formula::conj(std::move(f), parse_unary());
    }
    return f;
  }

  bool at_quantifier() const {
    const Token& t = peek();
    if (t.type != Token::Type::Name || (t.text != "E" && t.text != "A"))
      return false;
    return peek(1).type == Token::Type::Name &&
           peek(2).type == Token::Type::Dot;
  }

  Formula parse_unary() {
    const Token& t = peek();
    if (t.type == Token::Type::NotOp) {
      if (dialect_ == Dialect::foplus)
        parse_fail(t.pos, "negation is not allowed in the positive fragment");
      take();
      return Formula::negation(parse_unary());
    }
    if (at_quantifier()) {
      Token q = take();
      Token var = take();
      take();  // '.'
      Formula body = parse_or();
      return q.text == "E" ? Formula::exists(var.text, std::move(body))
                           : Formula::forall(var.text, std::move(body));
    }
    return parse_primary();
  }

  LetterId resolve_letter(const Token& t) const {
    if (auto l = alphabet_->find(t.text)) return *l;
    if (auto l = alphabet_->singleton_letter(t.text)) return *l;
    parse_fail(t.pos, "unknown letter or predicate '" + t.text + "'");
  }

  Formula parse_atom_tail(const Token& name) {
    if (take().type != Token::Type::LParen)
      parse_fail(name.pos, "expected '(' after letter name");
    Token var = take();
    if (var.type != Token::Type::Name)
      parse_fail(var.pos, "expected a variable name");
    Token close = take();
    if (close.type != Token::Type::RParen)
      parse_fail(close.pos, "expected ')'");
    return Formula::atom(alphabet_, resolve_letter(name), var.text);
  }

  Formula parse_primary() {
    Token t = take();
    switch (t.type) {
      case Token::Type::LParen: {
        Formula f = parse_or();
        Token close = take();
        if (close.type != Token::Type::RParen)
          parse_fail(close.pos, "expected ')'");
        return f;
      }
      case Token::Type::LetterName:
        return parse_atom_tail(t);
      case Token::Type::Name: {
        if (t.text == "true") return Formula::truth(alphabet_);
        if (t.text == "false") return Formula::falsity(alphabet_);
        if (peek().type == Token::Type::LParen) return parse_atom_tail(t);
        if (peek().type == Token::Type::LeOp ||
            peek().type == Token::Type::LtOp) {
          Token op = take();
          Token rhs = take();
          if (rhs.type != Token::Type::Name)
            parse_fail(rhs.pos, "expected a variable name");
          return op.type == Token::Type::LeOp
                     ? Formula::le(alphabet_, t.text, rhs.text)
                     : Formula::lt(alphabet_, t.text, rhs.text);
        }
        parse_fail(t.pos, "expected '(', '<=' or '<' after '" + t.text + "'");
      }
      default:
        parse_fail(t.pos, "expected a formula");
    }
  }

  AlphabetRef alphabet_;
  std::vector<Token> tokens_;
  Dialect dialect_;
  size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(const AlphabetRef& alphabet, const std::string& text,
                      Dialect dialect) {
  require_alphabet(alphabet);
  return Parser(alphabet, text, dialect).run();
}

// ---------------------------------------------------------------------------
// Printer

namespace {

bool is_quantifier(const Formula& f) {
  return f.kind() == Formula::Kind::Exists || f.kind() == Formula::Kind::Forall;
}

// last: whether f is the rightmost operand of its chain, so an unparenthesized
// quantifier would reparse with the same scope.
void print_rec(const Formula& f, int parent_prec, bool last, std::ostream& os);

// precedence: or = 0, and = 1, unary = 2
// The parser folds chains to the left, so the left operand may continue the
// chain bare while a same-kind right operand needs parentheses.
void print_chain(const Formula& f, int prec, bool last, std::ostream& os) {
  const char* op = prec == 0 ? " | " : " & ";
  print_rec(f.child(0), prec, false, os);
  os << op;
  print_rec(f.child(1), prec + 1, last, os);
}

void print_rec(const Formula& f, int parent_prec, bool last, std::ostream& os) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True: os << "true"; return;
    case K::False: os << "false"; return;
    case K::Atom:
      os << f.alphabet()->name(f.atom_letter()) << "(" << f.atom_var() << ")";
      return;
    case K::Le: os << f.var1() << "<=" << f.var2(); return;
    case K::Lt: os << f.var1() << "<" << f.var2(); return;
    case K::Not: {
      os << "!";
      const Formula& c = f.child();
      bool paren = c.kind() == K::And || c.kind() == K::Or;
      if (paren) os << "(";
      print_rec(c, 2, paren ? true : last, os);
      if (paren) os << ")";
      return;
    }
    case K::And:
    case K::Or: {
      int prec = f.kind() == K::And ? 1 : 0;
      bool paren = prec < parent_prec;
      if (paren) os << "(";
      print_chain(f, prec, paren ? true : last, os);
      if (paren) os << ")";
      return;
    }
    case K::Exists:
    case K::Forall: {
      bool paren = !last;
      if (paren) os << "(";
      os << (f.kind() == K::Exists ? "E " : "A ") << f.var1() << ". ";
      print_rec(f.child(), 0, true, os);
      if (paren) os << ")";
      return;
    }
  }
}

}  // namespace

std::string print_formula(const Formula& f) {
  std::ostringstream os;
  print_rec(f, 0, true, os);
  return os.str();
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

struct Binding {
  std::string name;
  size_t pos;
};

bool eval_rec(const Formula& f, const Word& w, std::vector<Binding>& env) {
  using K = Formula::Kind;
  auto lookup = [&](const std::string& v) -> size_t {
    for (auto it = env.rbegin(); it != env.rend(); ++it)
      if (it->name == v) return it->pos;
    fail("unbound variable '" + v + "'");
  };
  switch (f.kind()) {
    case K::True: return true;
    case K::False: return false;
    case K::Atom: {
      size_t p = lookup(f.atom_var());
      return w.alphabet->leq(f.atom_letter(), w.letters[p]);
    }
    case K::Le: return lookup(f.var1()) <= lookup(f.var2());
    case K::Lt: return lookup(f.var1()) < lookup(f.var2());
    case K::Not: return !eval_rec(f.child(), w, env);
    case K::And: return eval_rec(f.child(0), w, env) && eval_rec(f.child(1), w, env);
    case K::Or: return eval_rec(f.child(0), w, env) || eval_rec(f.child(1), w, env);
    case K::Exists: {
      for (size_t p = 0; p < w.letters.size(); ++p) {
        env.push_back({f.var1(), p});
        bool ok = eval_rec(f.child(), w, env);
        env.pop_back();
        if (ok) return true;
      }
      return false;
    }
    case K::Forall: {
      for (size_t p = 0; p < w.letters.size(); ++p) {
        env.push_back({f.var1(), p});
        bool ok = eval_rec(f.child(), w, env);
        env.pop_back();
        if (!ok) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

bool evaluate(const Formula& f, const Word& w,
              const std::map<std::string, size_t>& valuation) {
  if (f.alphabet() != w.alphabet) fail("formula and word use different alphabets");
  std::vector<Binding> env;
  for (const auto& [name, pos] : valuation) {
    if (pos >= w.letters.size())
      fail("valuation position out of range for variable '" + name + "'");
    env.push_back({name, pos});
  }
  return eval_rec(f, w, env);
}

std::vector<Word> defined_language(const Formula& f, int maxlen, int maxlen_cap) {
  if (!f.free_variables().empty())
    fail("defined_language requires a closed formula");
  if (maxlen < 0) fail("maxlen must be nonnegative");
  if (maxlen > maxlen_cap) {
    std::ostringstream os;
    os << "defined_language: maxlen " << maxlen << " exceeds cap " << maxlen_cap;
    fail(os.str());
  }
  const auto& a = f.alphabet();
  const auto& order = a->lex_order();
  std::vector<Word> out;
  Word w{a, {}};
  for (int len = 0; len <= maxlen; ++len) {
    w.letters.assign(len, 0);
    std::vector<int> idx(len, 0);
    for (int i = 0; i < len; ++i) w.letters[i] = order[0];
    while (true) {
      if (evaluate(f, w)) out.push_back(w);
      int i = len - 1;
      while (i >= 0 && idx[i] == static_cast<int>(order.size()) - 1) {
        idx[i] = 0;
        w.letters[i] = order[0];
        --i;
      }
      if (i < 0) break;
      ++idx[i];
      w.letters[i] = order[idx[i]];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Negation elimination over trivially ordered alphabets

namespace {

Formula positive(const Formula& f);

Formula negative(const Formula& f) {
  using K = Formula::Kind;
  const auto& a = f.alphabet();
  switch (f.kind()) {
    case K::True: return Formula::falsity(a);
    case K::False: return Formula::truth(a);
    case K::Atom: {
      // Under a trivial order, "not a(x)" means some other letter sits at x.
      Formula out;
      for (LetterId l : a->lex_order()) {
        if (l == f.atom_letter()) continue;
        Formula at = Formula::atom(a, l, f.atom_var());
        out = out.valid() ? Formula::disj(std::move(out), std::move(at))
                          : std::move(at);
      }
      return out.valid() ? out : Formula::falsity(a);
    }
    case K::Le: return Formula::lt(a, f.var2(), f.var1());
    case K::Lt: return Formula::le(a, f.var2(), f.var1());
    case K::Not: return positive(f.child());
    case K::And: return Formula::disj(negative(f.child(0)), negative(f.child(1)));
    case K::Or: return Formula::conj(negative(f.child(0)), negative(f.child(1)));
    case K::Exists: return Formula::forall(f.var1(), negative(f.child()));
    case K::Forall: return Formula::exists(f.var1(), negative(f.child()));
  }
  fail("unreachable");
}

Formula positive(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True:
    case K::False:
    case K::Atom:
    case K::Le:
    case K::Lt:
      return f;
    case K::Not: return negative(f.child());
    case K::And: return Formula::conj(positive(f.child(0)), positive(f.child(1)));
    case K::Or: return Formula::disj(positive(f.child(0)), positive(f.child(1)));
    case K::Exists: return Formula::exists(f.var1(), positive(f.child()));
    case K::Forall: return Formula::forall(f.var1(), positive(f.child()));
  }
  fail("unreachable");
}

}  // namespace

Formula fo_to_foplus_trivial_order(const Formula& f) {
  if (!f.alphabet()->trivial_order())
    fail("negation elimination requires a trivially ordered alphabet");
  return positive(f);
}

// ---------------------------------------------------------------------------
// Sampling

namespace {

Formula sample_rec(const AlphabetRef& a, int budget, int depth,
                   std::vector<std::string>& scope, int& next_var,
                   std::mt19937_64& rng) {
  auto pick = [&rng](int n) { return static_cast<int>(rng() % n); };

  enum { Const, AtomKind, Compare, Quant, Binary };
  std::vector<int> choices = {Const};
  if (!scope.empty()) {
    choices.push_back(AtomKind);
    choices.push_back(AtomKind);
    choices.push_back(Compare);
  }
  if (budget > 0) {
    choices.push_back(Quant);
    choices.push_back(Quant);
    choices.push_back(Quant);
  }
  if (depth < 3) {
    choices.push_back(Binary);
    choices.push_back(Binary);
  }

  switch (choices[pick(static_cast<int>(choices.size()))]) {
    case Const:
      return pick(2) ? Formula::truth(a) : Formula::falsity(a);
    case AtomKind: {
      const auto& order = a->lex_order();
      LetterId l = order[pick(static_cast<int>(order.size()))];
      const std::string& v = scope[pick(static_cast<int>(scope.size()))];
      return Formula::atom(a, l, v);
    }
    case Compare: {
      const std::string& x = scope[pick(static_cast<int>(scope.size()))];
      const std::string& y = scope[pick(static_cast<int>(scope.size()))];
      return pick(2) ? Formula::le(a, x, y) : Formula::lt(a, x, y);
    }
    case Quant: {
      std::string v = "x" + std::to_string(next_var++);
      scope.push_back(v);
      Formula body = sample_rec(a, budget - 1, depth + 1, scope, next_var, rng);
      scope.pop_back();
      return pick(2) ? Formula::exists(v, std::move(body))
                     : Formula::forall(v, std::move(body));
    }
    default: {
      Formula lhs = sample_rec(a, budget, depth + 1, scope, next_var, rng);
      Formula rhs = sample_rec(a, budget, depth + 1, scope, next_var, rng);
      return pick(2) ? Formula::conj(std::move(lhs), std::move(rhs))
                     : Formula::disj(std::move(lhs), std::move(rhs));
    }
  }
}

}  // namespace

Formula sample_formula(const AlphabetRef& alphabet, int rank, uint64_t seed,
                       int rank_cap) {
  require_alphabet(alphabet);
  if (rank < 0) fail("rank must be nonnegative");
  if (rank > rank_cap) {
    std::ostringstream os;
    os << "sample_formula: rank " << rank << " exceeds cap " << rank_cap;
    fail(os.str());
  }
  std::mt19937_64 rng(seed);
  std::vector<std::string> scope;
  int next_var = 0;
  return sample_rec(alphabet, rank, 0, scope, next_var, rng);
}

}  // namespace fopw
