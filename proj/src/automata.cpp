#include "fopw/automata.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fopw {

namespace {

// targets[state][letter] -> sorted target list
std::vector<std::vector<std::vector<int>>> adjacency(const Nfa& a) {
  std::vector<std::vector<std::vector<int>>> adj(
      a.num_states, std::vector<std::vector<int>>(a.alphabet->size()));
  for (const auto& t : a.transitions) adj[t.from][t.letter].push_back(t.to);
  for (auto& per_state : adj)
    for (auto& v : per_state) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
  return adj;
}

std::vector<int> step(const std::vector<std::vector<std::vector<int>>>& adj,
                      const std::vector<int>& states, LetterId letter) {
  std::set<int> out;
  for (int q : states) out.insert(adj[q][letter].begin(), adj[q][letter].end());
  return {out.begin(), out.end()};
}

bool intersects(const std::vector<int>& sorted_states, const std::vector<int>& sorted_other) {
  auto i = sorted_states.begin();
  auto j = sorted_other.begin();
  while (i != sorted_states.end() && j != sorted_other.end()) {
    if (*i == *j) return true;
    (*i < *j) ? ++i : ++j;
  }
  return false;
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void check_word_alphabet(const Nfa& a, const Word& w) {
  if (a.alphabet.get() != w.alphabet.get())
    throw std::runtime_error("word and automaton use different alphabets");
}

}  // namespace

bool Nfa::accepts(const Word& w) const {
  check_word_alphabet(*this, w);
  auto adj = adjacency(*this);
  std::vector<int> cur = sorted_unique(initial);
  const std::vector<int> fin = sorted_unique(final);
  for (LetterId l : w.letters) {
    cur = step(adj, cur, l);
    if (cur.empty()) return false;
  }
  return intersects(cur, fin);
}

bool Dfa::accepts(const Word& w) const {
  if (alphabet.get() != w.alphabet.get())
    throw std::runtime_error("word and automaton use different alphabets");
  int q = initial;
  for (LetterId l : w.letters) q = delta[q][l];
  return final[q];
}

Nfa Dfa::to_nfa() const {
  Nfa a;
  a.alphabet = alphabet;
  a.num_states = num_states;
  a.initial = {initial};
  for (int q = 0; q < num_states; ++q)
    if (final[q]) a.final.push_back(q);
  for (int q = 0; q < num_states; ++q)
    for (LetterId l = 0; l < alphabet->size(); ++l)
      a.transitions.push_back({q, l, delta[q][l]});
  return a;
}

Nfa nfa_closure(const Nfa& a) {
  Nfa out;
  out.alphabet = a.alphabet;
  out.num_states = a.num_states;
  out.initial = a.initial;
  out.final = a.final;
  std::set<std::tuple<int, LetterId, int>> seen;
  for (const auto& t : a.transitions)
    for (LetterId b : a.alphabet->up_closure(t.letter))
      if (seen.insert({t.from, b, t.to}).second)
        out.transitions.push_back({t.from, b, t.to});
  return out;
}

Dfa determinize(const Nfa& a) {
  auto adj = adjacency(a);
  const std::vector<int> fin = sorted_unique(a.final);
  Dfa d;
  d.alphabet = a.alphabet;
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> subsets;
  auto intern = [&](const std::vector<int>& s) {
    auto [it, fresh] = index.try_emplace(s, static_cast<int>(subsets.size()));
    if (fresh) subsets.push_back(s);
    return it->second;
  };
  d.initial = intern(sorted_unique(a.initial));
  for (size_t i = 0; i < subsets.size(); ++i) {
    d.delta.emplace_back(a.alphabet->size());
    d.final.push_back(intersects(subsets[i], fin));
    for (LetterId l = 0; l < a.alphabet->size(); ++l) {
      auto next = step(adj, subsets[i], l);
      d.delta[i][l] = intern(next);
    }
  }
  d.num_states = static_cast<int>(subsets.size());
  return d;
}

Dfa minimize(const Dfa& d) {
  const int n = d.num_states;
  const int sigma = d.alphabet->size();
  // restrict to reachable states
  std::vector<int> idx(n, -1);
  std::vector<int> order;
  idx[d.initial] = 0;
  order.push_back(d.initial);
  for (size_t i = 0; i < order.size(); ++i)
    for (LetterId l = 0; l < sigma; ++l) {
      int t = d.delta[order[i]][l];
      if (idx[t] < 0) {
        idx[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  const int m = static_cast<int>(order.size());
  std::vector<int> cls(m);
  for (int q = 0; q < m; ++q) cls[q] = d.final[order[q]] ? 1 : 0;
  for (;;) {
    std::map<std::vector<int>, int> sig_index;
    std::vector<int> next(m);
    for (int q = 0; q < m; ++q) {
      std::vector<int> sig{cls[q]};
      for (LetterId l = 0; l < sigma; ++l) sig.push_back(cls[idx[d.delta[order[q]][l]]]);
      auto [it, fresh] = sig_index.try_emplace(sig, static_cast<int>(sig_index.size()));
      (void)fresh;
      next[q] = it->second;
    }
    if (next == cls) break;
    cls = next;
  }
  int classes = *std::max_element(cls.begin(), cls.end()) + 1;
  Dfa out;
  out.alphabet = d.alphabet;
  out.num_states = classes;
  out.initial = cls[0];
  out.final.assign(classes, 0);
  out.delta.assign(classes, std::vector<int>(sigma, 0));
  for (int q = 0; q < m; ++q) {
    out.final[cls[q]] = d.final[order[q]];
    for (LetterId l = 0; l < sigma; ++l) out.delta[cls[q]][l] = cls[idx[d.delta[order[q]][l]]];
  }
  return out;
}

Dfa complement(const Dfa& d) {
  Dfa out = d;
  for (auto& f : out.final) f = !f;
  return out;
}

bool is_empty(const Nfa& a) {
  auto reach = reachable_states(a);
  for (int f : a.final)
    if (reach[f]) return false;
  return true;
}

std::vector<char> reachable_states(const Nfa& a) {
  std::vector<char> seen(a.num_states, 0);
  std::deque<int> todo(a.initial.begin(), a.initial.end());
  for (int q : a.initial) seen[q] = 1;
  while (!todo.empty()) {
    int q = todo.front();
    todo.pop_front();
    for (const auto& t : a.transitions)
      if (t.from == q && !seen[t.to]) {
        seen[t.to] = 1;
        todo.push_back(t.to);
      }
  }
  return seen;
}

std::vector<char> coreachable_states(const Nfa& a) {
  std::vector<char> seen(a.num_states, 0);
  std::deque<int> todo(a.final.begin(), a.final.end());
  for (int q : a.final) seen[q] = 1;
  while (!todo.empty()) {
    int q = todo.front();
    todo.pop_front();
    for (const auto& t : a.transitions)
      if (t.to == q && !seen[t.from]) {
        seen[t.from] = 1;
        todo.push_back(t.from);
      }
  }
  return seen;
}

InclusionResult language_included(const Nfa& a, const Nfa& b) {
  if (a.alphabet.get() != b.alphabet.get())
    throw std::runtime_error("automata use different alphabets");
  const auto& alph = *a.alphabet;
  auto adj = adjacency(a);
  const std::vector<int> fin_a = sorted_unique(a.final);
  Dfa db = determinize(b);

  struct NodeInfo {
    int parent;
    LetterId letter;
  };
  std::map<std::pair<std::vector<int>, int>, int> seen;
  std::vector<std::pair<std::vector<int>, int>> nodes;
  std::vector<NodeInfo> info;
  auto push = [&](std::pair<std::vector<int>, int> key, int parent, LetterId l) {
    if (seen.count(key)) return;
    seen.emplace(key, static_cast<int>(nodes.size()));
    nodes.push_back(std::move(key));
    info.push_back({parent, l});
  };
  push({sorted_unique(a.initial), db.initial}, -1, -1);
  for (size_t i = 0; i < nodes.size(); ++i) {
    // push below grows nodes, so take the key by value
    const auto [sa, qb] = nodes[i];
    if (intersects(sa, fin_a) && !db.final[qb]) {
      Word w{a.alphabet, {}};
      for (int j = static_cast<int>(i); info[j].parent >= 0; j = info[j].parent)
        w.letters.push_back(info[j].letter);
      std::reverse(w.letters.begin(), w.letters.end());
      return {false, w};
    }
    for (LetterId l : alph.lex_order()) {
      auto sa2 = step(adj, sa, l);
      if (sa2.empty()) continue;  // nothing acceptable remains on the left
      push({std::move(sa2), db.delta[qb][l]}, static_cast<int>(i), l);
    }
  }
  return {true, std::nullopt};
}

bool language_equal(const Nfa& a, const Nfa& b) {
  return language_included(a, b).included && language_included(b, a).included;
}

MonotoneResult is_monotone(const Nfa& a) {
  auto inc = language_included(nfa_closure(a), a);
  if (inc.included) return {true, std::nullopt};
  const Word& v = *inc.counterexample;
  // lexicographically least accepted u <= v
  auto adj = adjacency(a);
  const auto& alph = *a.alphabet;
  const size_t len = v.size();
  std::vector<std::vector<char>> feasible(len + 1, std::vector<char>(a.num_states, 0));
  for (int f : a.final) feasible[len][f] = 1;
  for (size_t i = len; i-- > 0;) {
    for (const auto& t : a.transitions)
      if (alph.leq(t.letter, v[i]) && feasible[i + 1][t.to]) feasible[i][t.from] = 1;
  }
  Word u{a.alphabet, {}};
  std::vector<int> cur;
  for (int q : sorted_unique(a.initial))
    if (feasible[0][q]) cur.push_back(q);
  for (size_t i = 0; i < len; ++i) {
    bool advanced = false;
    for (LetterId c : alph.lex_order()) {
      if (!alph.leq(c, v[i])) continue;
      auto next = step(adj, cur, c);
      std::vector<int> good;
      for (int q : next)
        if (feasible[i + 1][q]) good.push_back(q);
      if (good.empty()) continue;
      u.letters.push_back(c);
      cur = std::move(good);
      advanced = true;
      break;
    }
    if (!advanced) throw std::logic_error("dominated witness extraction failed");
  }
  return {false, std::make_pair(std::move(u), v)};
}

Nfa hardness_instance(const Nfa& a) {
  const auto& alph = *a.alphabet;
  std::vector<std::string> names;
  for (LetterId l = 0; l < alph.size(); ++l) {
    if (alph.name(l) == "a" || alph.name(l) == "b")
      throw std::runtime_error("alphabet already uses the fresh letter name '" + alph.name(l) +
                               "'");
    names.push_back(alph.name(l));
  }
  names.push_back("a");
  names.push_back("b");
  auto ext = OrderedAlphabet::make(names, {{"a", "b"}});

  Nfa out;
  out.alphabet = ext;
  out.num_states = a.num_states + 2;
  const int s = 0, t = 1;
  out.initial = {s};
  out.final = {t};
  auto ext_id = [&](LetterId orig) { return ext->id(alph.name(orig)); };
  out.transitions.push_back({s, ext->id("a"), t});
  for (LetterId l = 0; l < alph.size(); ++l) out.transitions.push_back({t, ext_id(l), t});
  for (int q : a.initial) out.transitions.push_back({s, ext->id("b"), q + 2});
  for (const auto& tr : a.transitions)
    out.transitions.push_back({tr.from + 2, ext_id(tr.letter), tr.to + 2});
  for (int f : a.final) out.final.push_back(f + 2);
  return out;
}

TransitionMonoid transition_monoid(const Dfa& d) {
  const int n = d.num_states;
  const auto& alph = *d.alphabet;
  TransitionMonoid m;
  m.alphabet = d.alphabet;

  std::map<std::vector<int>, int> index;
  auto intern = [&](const std::vector<int>& f, const std::vector<LetterId>& w) {
    auto [it, fresh] = index.try_emplace(f, static_cast<int>(m.elements.size()));
    if (fresh) {
      m.elements.push_back(f);
      m.element_word.push_back(w);
    }
    return it->second;
  };

  std::vector<int> ident(n);
  std::iota(ident.begin(), ident.end(), 0);
  m.identity = intern(ident, {});

  std::vector<std::vector<int>> gen(alph.size(), std::vector<int>(n));
  for (LetterId l = 0; l < alph.size(); ++l)
    for (int q = 0; q < n; ++q) gen[l][q] = d.delta[q][l];
  m.letter_element.resize(alph.size());

  // BFS over products with generators; shortest-lex witness words
  for (size_t i = 0; i < m.elements.size(); ++i) {
    for (LetterId l : alph.lex_order()) {
      std::vector<int> f(n);
      for (int q = 0; q < n; ++q) f[q] = gen[l][m.elements[i][q]];
      auto w = m.element_word[i];
      w.push_back(l);
      intern(f, w);
    }
  }
  for (LetterId l = 0; l < alph.size(); ++l) m.letter_element[l] = index.at(gen[l]);

  const int k = static_cast<int>(m.elements.size());
  m.table.assign(k, std::vector<int>(k, 0));
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      std::vector<int> f(n);
      for (int q = 0; q < n; ++q) f[q] = m.elements[y][m.elements[x][q]];
      m.table[x][y] = index.at(f);
    }
  return m;
}

TransitionMonoid syntactic_monoid(const Dfa& d) { return transition_monoid(minimize(d)); }

bool TransitionMonoid::aperiodic() const {
  const int k = static_cast<int>(elements.size());
  for (int x = 0; x < k; ++x) {
    // iterate powers of x until they repeat; aperiodic iff the cycle is a
    // fixed point
    std::vector<int> seen;
    int p = x;
    for (;;) {
      auto it = std::find(seen.begin(), seen.end(), p);
      if (it != seen.end()) {
        size_t cycle = seen.size() - (it - seen.begin());
        if (cycle != 1) return false;
        break;
      }
      seen.push_back(p);
      p = table[p][x];
    }
  }
  return true;
}

bool is_counter_free(const Dfa& d) {
  // reachable part only
  std::vector<char> reach(d.num_states, 0);
  std::deque<int> todo{d.initial};
  reach[d.initial] = 1;
  while (!todo.empty()) {
    int q = todo.front();
    todo.pop_front();
    for (LetterId l = 0; l < d.alphabet->size(); ++l)
      if (!reach[d.delta[q][l]]) {
        reach[d.delta[q][l]] = 1;
        todo.push_back(d.delta[q][l]);
      }
  }
  // every word-induced transformation must have orbit cycles of length 1
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  std::vector<int> ident(d.num_states);
  std::iota(ident.begin(), ident.end(), 0);
  seen.insert(ident);
  queue.push_back(ident);
  while (!queue.empty()) {
    auto f = queue.front();
    queue.pop_front();
    for (int q = 0; q < d.num_states; ++q) {
      if (!reach[q]) continue;
      std::map<int, int> visit_step;
      int cur = q, stepno = 0;
      while (!visit_step.count(cur)) {
        visit_step[cur] = stepno++;
        cur = f[cur];
      }
      if (stepno - visit_step[cur] > 1) return false;
    }
    for (LetterId l = 0; l < d.alphabet->size(); ++l) {
      std::vector<int> g(d.num_states);
      for (int q = 0; q < d.num_states; ++q) g[q] = d.delta[f[q]][l];
      if (seen.insert(g).second) queue.push_back(g);
    }
  }
  return true;
}

std::vector<Word> enumerate_language(const Nfa& a, int maxlen, int maxlen_cap) {
  if (maxlen < 0) throw std::runtime_error("enumerate_language: negative maxlen");
  if (maxlen > maxlen_cap)
    throw std::runtime_error("enumerate_language: maxlen " + std::to_string(maxlen) +
                             " exceeds cap " + std::to_string(maxlen_cap));
  auto adj = adjacency(a);
  const auto& alph = *a.alphabet;
  const std::vector<int> fin = sorted_unique(a.final);

  // distance from each state to acceptance
  std::vector<int> dist(a.num_states, -1);
  std::deque<int> todo;
  for (int f : a.final)
    if (dist[f] < 0) {
      dist[f] = 0;
      todo.push_back(f);
    }
  while (!todo.empty()) {
    int q = todo.front();
    todo.pop_front();
    for (const auto& t : a.transitions)
      if (t.to == q && dist[t.from] < 0) {
        dist[t.from] = dist[q] + 1;
        todo.push_back(t.from);
      }
  }
  auto viable = [&](const std::vector<int>& states, int remaining) {
    for (int q : states)
      if (dist[q] >= 0 && dist[q] <= remaining) return true;
    return false;
  };

  std::vector<Word> out;
  std::vector<LetterId> prefix;
  auto dfs = [&](auto&& self, const std::vector<int>& states, int remaining) -> void {
    if (remaining == 0) {
      if (intersects(states, fin)) out.push_back(Word{a.alphabet, prefix});
      return;
    }
    for (LetterId l : alph.lex_order()) {
      auto next = step(adj, states, l);
      if (!viable(next, remaining - 1)) continue;
      prefix.push_back(l);
      self(self, next, remaining - 1);
      prefix.pop_back();
    }
  };
  for (int len = 0; len <= maxlen; ++len) {
    auto init = sorted_unique(a.initial);
    if (viable(init, len)) dfs(dfs, init, len);
  }
  return out;
}

bool accepts_some_below(const Nfa& a, const Word& v) {
  check_word_alphabet(a, v);
  auto adj = adjacency(a);
  const auto& alph = *a.alphabet;
  std::vector<int> cur = sorted_unique(a.initial);
  for (LetterId top : v.letters) {
    std::set<int> next;
    for (LetterId c = 0; c < alph.size(); ++c) {
      if (!alph.leq(c, top)) continue;
      for (int q : cur) next.insert(adj[q][c].begin(), adj[q][c].end());
    }
    cur.assign(next.begin(), next.end());
    if (cur.empty()) return false;
  }
  return intersects(cur, sorted_unique(a.final));
}

Nfa nfa_none(const AlphabetRef& alphabet) {
  Nfa a;
  a.alphabet = alphabet;
  a.num_states = 1;
  a.initial = {0};
  return a;
}

Nfa nfa_epsilon(const AlphabetRef& alphabet) {
  Nfa a = nfa_none(alphabet);
  a.final = {0};
  return a;
}

Nfa nfa_letters(const AlphabetRef& alphabet, const std::vector<LetterId>& letters) {
  Nfa a;
  a.alphabet = alphabet;
  a.num_states = 2;
  a.initial = {0};
  a.final = {1};
  for (LetterId l : letters) a.transitions.push_back({0, l, 1});
  return a;
}

namespace {
bool accepts_epsilon(const Nfa& a) {
  for (int i : a.initial)
    if (std::find(a.final.begin(), a.final.end(), i) != a.final.end()) return true;
  return false;
}
}  // namespace

Nfa nfa_union(const Nfa& a, const Nfa& b) {
  if (a.alphabet.get() != b.alphabet.get())
    throw std::runtime_error("automata use different alphabets");
  Nfa out;
  out.alphabet = a.alphabet;
  out.num_states = a.num_states + b.num_states;
  out.initial = a.initial;
  out.final = a.final;
  out.transitions = a.transitions;
  for (int q : b.initial) out.initial.push_back(q + a.num_states);
  for (int q : b.final) out.final.push_back(q + a.num_states);
  for (const auto& t : b.transitions)
    out.transitions.push_back({t.from + a.num_states, t.letter, t.to + a.num_states});
  return out;
}

Nfa nfa_concat(const Nfa& a, const Nfa& b) {
  if (a.alphabet.get() != b.alphabet.get())
    throw std::runtime_error("automata use different alphabets");
  Nfa out;
  out.alphabet = a.alphabet;
  out.num_states = a.num_states + b.num_states;
  out.initial = a.initial;
  out.transitions = a.transitions;
  for (const auto& t : b.transitions)
    out.transitions.push_back({t.from + a.num_states, t.letter, t.to + a.num_states});
  // bridge: leaving a final state of a behaves like starting b
  for (int f : a.final)
    for (const auto& t : b.transitions)
      if (std::find(b.initial.begin(), b.initial.end(), t.from) != b.initial.end())
        out.transitions.push_back({f, t.letter, t.to + a.num_states});
  for (int q : b.final) out.final.push_back(q + a.num_states);
  if (accepts_epsilon(b)) out.final.insert(out.final.end(), a.final.begin(), a.final.end());
  if (accepts_epsilon(a))
    for (int q : b.initial) out.initial.push_back(q + a.num_states);
  out.initial = sorted_unique(out.initial);
  out.final = sorted_unique(out.final);
  return out;
}

Nfa nfa_star(const Nfa& a) {
  Nfa out;
  out.alphabet = a.alphabet;
  out.num_states = a.num_states + 1;
  const int s = a.num_states;
  out.initial = {s};
  out.final = a.final;
  out.final.push_back(s);
  out.transitions = a.transitions;
  std::vector<Nfa::Trans> entering;
  for (const auto& t : a.transitions)
    if (std::find(a.initial.begin(), a.initial.end(), t.from) != a.initial.end())
      entering.push_back(t);
  for (const auto& t : entering) out.transitions.push_back({s, t.letter, t.to});
  for (int f : a.final)
    for (const auto& t : entering) out.transitions.push_back({f, t.letter, t.to});
  return out;
}

Nfa nfa_opt(const Nfa& a) { return nfa_union(a, nfa_epsilon(a.alphabet)); }

Nfa parse_automaton_text(const AlphabetRef& alphabet, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Nfa a;
  a.alphabet = alphabet;
  std::vector<std::string> state_names;
  std::map<std::string, int> state_index;
  bool saw_header = false, is_dfa = false;
  auto state_id = [&](const std::string& s) {
    auto it = state_index.find(s);
    if (it == state_index.end()) throw std::runtime_error("unknown state: " + s);
    return it->second;
  };
  auto tokens_of = [&](const std::string& rest) {
    std::istringstream ts(rest);
    std::vector<std::string> toks;
    std::string t;
    while (ts >> t) toks.push_back(t);
    return toks;
  };
  while (std::getline(in, line)) {
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    line = line.substr(b);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line[0] == '#') continue;
    if (!saw_header) {
      if (line == "nfa")
        is_dfa = false;
      else if (line == "dfa")
        is_dfa = true;
      else
        throw std::runtime_error("automaton file must start with 'nfa' or 'dfa'");
      saw_header = true;
      continue;
    }
    if (line.rfind("states:", 0) == 0) {
      for (const auto& s : tokens_of(line.substr(7))) {
        if (state_index.count(s)) throw std::runtime_error("duplicate state name: " + s);
        state_index[s] = static_cast<int>(state_names.size());
        state_names.push_back(s);
      }
    } else if (line.rfind("initial:", 0) == 0) {
      for (const auto& s : tokens_of(line.substr(8))) a.initial.push_back(state_id(s));
    } else if (line.rfind("final:", 0) == 0) {
      for (const auto& s : tokens_of(line.substr(6))) a.final.push_back(state_id(s));
    } else {
      auto toks = tokens_of(line);
      if (toks.size() != 3 || toks[1].size() < 3 || toks[1].front() != '-' ||
          toks[1].substr(toks[1].size() - 2) != "->")
        throw std::runtime_error("malformed transition line: " + line);
      std::string letter = toks[1].substr(1, toks[1].size() - 3);
      a.transitions.push_back({state_id(toks[0]), alphabet->id(letter), state_id(toks[2])});
    }
  }
  if (!saw_header) throw std::runtime_error("empty automaton file");
  a.num_states = static_cast<int>(state_names.size());
  if (a.num_states == 0) throw std::runtime_error("automaton has no states");
  a.initial = sorted_unique(a.initial);
  a.final = sorted_unique(a.final);
  if (is_dfa) {
    if (a.initial.size() != 1) throw std::runtime_error("dfa must have exactly one initial state");
    std::set<std::pair<int, LetterId>> keys;
    for (const auto& t : a.transitions)
      if (!keys.insert({t.from, t.letter}).second)
        throw std::runtime_error("dfa has conflicting transitions from " +
                                 state_names[t.from] + " on " + alphabet->name(t.letter));
    if (static_cast<int>(keys.size()) != a.num_states * alphabet->size())
      throw std::runtime_error("dfa transition table is not complete");
  }
  return a;
}

std::string nfa_to_text(const Nfa& a) {
  std::ostringstream out;
  out << "nfa\nstates:";
  for (int q = 0; q < a.num_states; ++q) out << " q" << q;
  out << "\ninitial:";
  for (int q : sorted_unique(a.initial)) out << " q" << q;
  out << "\nfinal:";
  for (int q : sorted_unique(a.final)) out << " q" << q;
  out << "\n";
  auto ts = a.transitions;
  std::sort(ts.begin(), ts.end(), [&](const Nfa::Trans& x, const Nfa::Trans& y) {
    if (x.from != y.from) return x.from < y.from;
    int rx = a.alphabet->lex_rank(x.letter), ry = a.alphabet->lex_rank(y.letter);
    if (rx != ry) return rx < ry;
    return x.to < y.to;
  });
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (const auto& t : ts)
    out << "q" << t.from << " -" << a.alphabet->name(t.letter) << "-> q" << t.to << "\n";
  return out.str();
}

std::string dfa_to_text(const Dfa& d) {
  std::ostringstream out;
  out << "dfa\nstates:";
  for (int q = 0; q < d.num_states; ++q) out << " q" << q;
  out << "\ninitial: q" << d.initial << "\nfinal:";
  for (int q = 0; q < d.num_states; ++q)
    if (d.final[q]) out << " q" << q;
  out << "\n";
  for (int q = 0; q < d.num_states; ++q)
    for (LetterId l : d.alphabet->lex_order())
      out << "q" << q << " -" << d.alphabet->name(l) << "-> q" << d.delta[q][l] << "\n";
  return out.str();
}

Nfa load_automaton_file(const AlphabetRef& alphabet, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open automaton file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_automaton_text(alphabet, buf.str());
}

std::string to_dot(const Nfa& a) {
  std::ostringstream out;
  out << "digraph automaton {\n  rankdir=LR;\n";
  for (int q : sorted_unique(a.initial)) {
    out << "  start" << q << " [shape=point];\n";
    out << "  start" << q << " -> q" << q << ";\n";
  }
  std::vector<int> fin = sorted_unique(a.final);
  for (int q = 0; q < a.num_states; ++q) {
    bool f = std::find(fin.begin(), fin.end(), q) != fin.end();
    out << "  q" << q << " [shape=" << (f ? "doublecircle" : "circle") << "];\n";
  }
  std::map<std::pair<int, int>, std::vector<std::string>> labels;
  for (const auto& t : a.transitions) labels[{t.from, t.to}].push_back(a.alphabet->name(t.letter));
  for (auto& [edge, names] : labels) {
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    out << "  q" << edge.first << " -> q" << edge.second << " [label=\"";
    for (size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i];
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace fopw
