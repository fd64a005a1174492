#include "fopw/alphabet.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace fopw {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

void OrderedAlphabet::finish() {
  const int n = size();
  // reflexive-transitive closure (Floyd-Warshall; alphabets are small)
  for (int i = 0; i < n; ++i) leq_[i * n + i] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq_[i * n + k])
        for (int j = 0; j < n; ++j)
          if (leq_[k * n + j]) leq_[i * n + j] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (leq_[i * n + j] && leq_[j * n + i])
        throw std::runtime_error("alphabet order is not antisymmetric: " + names_[i] +
                                 " and " + names_[j] + " are equivalent");
  lex_order_.resize(n);
  std::iota(lex_order_.begin(), lex_order_.end(), 0);
  std::sort(lex_order_.begin(), lex_order_.end(),
            [&](LetterId a, LetterId b) { return names_[a] < names_[b]; });
  lex_rank_.resize(n);
  for (int r = 0; r < n; ++r) lex_rank_[lex_order_[r]] = r;
}

AlphabetRef OrderedAlphabet::make(
    const std::vector<std::string>& letters,
    const std::vector<std::pair<std::string, std::string>>& order) {
  if (letters.empty()) throw std::runtime_error("alphabet must have at least one letter");
  auto a = std::shared_ptr<OrderedAlphabet>(new OrderedAlphabet());
  for (const auto& name : letters) {
    if (name.empty()) throw std::runtime_error("empty letter name");
    if (std::find(a->names_.begin(), a->names_.end(), name) != a->names_.end())
      throw std::runtime_error("duplicate letter name: " + name);
    a->names_.push_back(name);
  }
  const int n = a->size();
  a->leq_.assign(n * n, 0);
  for (const auto& [lo, hi] : order) {
    auto i = a->find(lo), j = a->find(hi);
    if (!i) throw std::runtime_error("order pair uses unknown letter: " + lo);
    if (!j) throw std::runtime_error("order pair uses unknown letter: " + hi);
    a->leq_[*i * n + *j] = 1;
  }
  a->finish();
  return a;
}

AlphabetRef OrderedAlphabet::powerset(const std::vector<std::string>& predicates) {
  std::vector<std::string> preds = predicates;
  std::sort(preds.begin(), preds.end());
  if (std::adjacent_find(preds.begin(), preds.end()) != preds.end())
    throw std::runtime_error("duplicate predicate name");
  for (const auto& p : preds)
    if (p.empty()) throw std::runtime_error("empty predicate name");
  if (preds.size() > 16) throw std::runtime_error("too many predicates for a powerset alphabet");

  auto a = std::shared_ptr<OrderedAlphabet>(new OrderedAlphabet());
  a->is_powerset_ = true;
  a->predicates_ = preds;
  const size_t k = preds.size();
  const size_t count = size_t{1} << k;
  for (size_t mask = 0; mask < count; ++mask) {
    std::string name = "{";
    std::vector<std::string> members;
    for (size_t b = 0; b < k; ++b)
      if (mask & (size_t{1} << b)) members.push_back(preds[b]);
    for (size_t i = 0; i < members.size(); ++i) {
      if (i) name += ",";
      name += members[i];
    }
    name += "}";
    a->names_.push_back(name);
    a->letter_predicates_.push_back(members);
  }
  const int n = a->size();
  a->leq_.assign(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((i & j) == i) a->leq_[i * n + j] = 1;  // subset inclusion on masks
  a->finish();
  return a;
}

LetterId OrderedAlphabet::id(const std::string& name) const {
  auto r = find(name);
  if (!r) throw std::runtime_error("unknown letter: " + name);
  return *r;
}

std::optional<LetterId> OrderedAlphabet::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<LetterId>(it - names_.begin());
}

std::vector<LetterId> OrderedAlphabet::up_closure(LetterId a) const {
  std::vector<LetterId> out;
  for (LetterId b : lex_order_)
    if (leq(a, b)) out.push_back(b);
  return out;
}

bool OrderedAlphabet::trivial_order() const {
  const int n = size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq_[i * n + j]) return false;
  return true;
}

std::optional<LetterId> OrderedAlphabet::singleton_letter(const std::string& predicate) const {
  if (!is_powerset_) return std::nullopt;
  auto it = std::find(predicates_.begin(), predicates_.end(), predicate);
  if (it == predicates_.end()) return std::nullopt;
  return LetterId{1} << (it - predicates_.begin());
}

bool OrderedAlphabet::letter_contains(LetterId a, const std::string& predicate) const {
  const auto& ps = letter_predicates_.at(a);
  return std::find(ps.begin(), ps.end(), predicate) != ps.end();
}

bool Word::operator==(const Word& other) const {
  return alphabet.get() == other.alphabet.get() && letters == other.letters;
}

void require_same_alphabet(const Word& u, const Word& v) {
  if (u.alphabet.get() != v.alphabet.get())
    throw std::runtime_error("words use different alphabets");
}

bool leq_word(const Word& u, const Word& v) {
  require_same_alphabet(u, v);
  if (u.size() != v.size()) return false;
  for (size_t i = 0; i < u.size(); ++i)
    if (!u.alphabet->leq(u[i], v[i])) return false;
  return true;
}

bool lex_less(const Word& u, const Word& v) {
  require_same_alphabet(u, v);
  const auto& a = *u.alphabet;
  for (size_t i = 0; i < std::min(u.size(), v.size()); ++i) {
    if (u[i] == v[i]) continue;
    return a.lex_rank(u[i]) < a.lex_rank(v[i]);
  }
  return u.size() < v.size();
}

AlphabetRef parse_alphabet_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> letters, predicates;
  std::vector<std::pair<std::string, std::string>> order;
  bool saw_letters = false, saw_predicates = false;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("letters:", 0) == 0) {
      saw_letters = true;
      auto names = split_ws(line.substr(8));
      letters.insert(letters.end(), names.begin(), names.end());
    } else if (line.rfind("predicates:", 0) == 0) {
      saw_predicates = true;
      auto names = split_ws(line.substr(11));
      predicates.insert(predicates.end(), names.begin(), names.end());
    } else if (line.rfind("order:", 0) == 0) {
      std::string rest = trim(line.substr(6));
      // letter names never contain '<' except ambiguous "<x/y>" names,
      // which always start with it; split at the first '<' that leaves a
      // nonempty left side.
      size_t pos = rest.find(" < ");
      std::string lo, hi;
      if (pos != std::string::npos) {
        lo = trim(rest.substr(0, pos));
        hi = trim(rest.substr(pos + 3));
      } else {
        pos = rest.find('<', 1);
        if (pos == std::string::npos)
          throw std::runtime_error("malformed order line: " + line);
        lo = trim(rest.substr(0, pos));
        hi = trim(rest.substr(pos + 1));
      }
      if (lo.empty() || hi.empty())
        throw std::runtime_error("malformed order line: " + line);
      order.emplace_back(lo, hi);
    } else {
      throw std::runtime_error("unrecognized alphabet line: " + line);
    }
  }
  if (saw_letters && saw_predicates)
    throw std::runtime_error("alphabet file mixes 'letters:' and 'predicates:'");
  if (saw_predicates) {
    if (!order.empty())
      throw std::runtime_error("powerset alphabets take no 'order:' lines");
    return OrderedAlphabet::powerset(predicates);
  }
  if (!saw_letters) throw std::runtime_error("alphabet file has no 'letters:' line");
  return OrderedAlphabet::make(letters, order);
}

std::string alphabet_to_text(const OrderedAlphabet& a) {
  std::ostringstream out;
  if (a.is_powerset()) {
    out << "predicates:";
    for (const auto& p : a.predicates()) out << " " << p;
    out << "\n";
    return out.str();
  }
  out << "letters:";
  for (LetterId l : a.lex_order()) out << " " << a.name(l);
  out << "\n";
  for (LetterId l : a.lex_order())
    for (LetterId m : a.up_closure(l))
      if (m != l) out << "order: " << a.name(l) << " < " << a.name(m) << "\n";
  return out.str();
}

AlphabetRef load_alphabet_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open alphabet file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_alphabet_text(buf.str());
}

Word parse_word(const AlphabetRef& alphabet, const std::string& text) {
  Word w{alphabet, {}};
  for (const auto& tok : split_ws(text)) w.letters.push_back(alphabet->id(tok));
  return w;
}

std::string word_to_text(const Word& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += w.alphabet->name(w[i]);
  }
  return out;
}

}  // namespace fopw
