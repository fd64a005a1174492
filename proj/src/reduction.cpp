#include "fopw/reduction.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fopw {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

int next_type(int t) { return t % 3 + 1; }

void check_name(const std::string& name, const std::string& what) {
  if (name.empty()) fail(what + " name is empty");
  for (char c : name)
    if (std::isspace(static_cast<unsigned char>(c)) ||
        std::string("#<>[]^/.").find(c) != std::string::npos)
      fail(what + " name '" + name + "' contains a reserved character");
}

}  // namespace

std::optional<int> TuringMachine::transition_from(int state, int read) const {
  for (size_t i = 0; i < transitions.size(); ++i)
    if (transitions[i].from_state == state && transitions[i].read == read)
      return static_cast<int>(i);
  return std::nullopt;
}

int TuringMachine::symbol_id(const std::string& name) const {
  for (size_t i = 0; i < tape_symbols.size(); ++i)
    if (tape_symbols[i] == name) return static_cast<int>(i);
  fail("unknown tape symbol '" + name + "'");
}

int TuringMachine::state_id(const std::string& name) const {
  for (size_t i = 0; i < state_names.size(); ++i)
    if (state_names[i] == name) return static_cast<int>(i);
  fail("unknown state '" + name + "'");
}

TuringMachine parse_tm_text(const std::string& text, bool require_normalized) {
  TuringMachine m;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto toks = tokens_of(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks[0] == "gamma:") {
      if (!m.tape_symbols.empty()) fail("duplicate gamma line");
      for (size_t i = 1; i < toks.size(); ++i) {
        check_name(toks[i], "tape symbol");
        m.tape_symbols.push_back(toks[i]);
      }
      if (m.tape_symbols.empty()) fail("gamma line lists no symbols");
      continue;
    }
    if (toks[0] == "states:") {
      if (!m.state_names.empty()) fail("duplicate states line");
      for (size_t i = 1; i < toks.size(); ++i) {
        auto slash = toks[i].rfind('/');
        if (slash == std::string::npos)
          fail("state '" + toks[i] + "' lacks a /type suffix");
        std::string name = toks[i].substr(0, slash);
        std::string type = toks[i].substr(slash + 1);
        check_name(name, "state");
        if (type != "1" && type != "2" && type != "3")
          fail("state '" + name + "' has type '" + type +
               "'; expected 1, 2 or 3");
        m.state_names.push_back(name);
        m.state_types.push_back(type[0] - '0');
      }
      if (m.state_names.empty()) fail("states line lists no states");
      continue;
    }
    if (toks.size() != 6 || toks[2] != "->")
      fail("malformed machine line: " + line);
    if (m.tape_symbols.empty() || m.state_names.empty())
      fail("transitions must follow the gamma and states lines");
    TmTransition t;
    t.id = "d" + std::to_string(m.transitions.size() + 1);
    t.from_state = m.state_id(toks[0]);
    t.read = m.symbol_id(toks[1]);
    t.to_state = m.state_id(toks[3]);
    t.write = m.symbol_id(toks[4]);
    if (toks[5] == "R")
      t.dir = 1;
    else if (toks[5] == "L")
      t.dir = -1;
    else
      fail("direction must be R or L, got '" + toks[5] + "'");
    if (m.transition_from(t.from_state, t.read))
      fail("machine is not deterministic: two transitions from state '" +
           toks[0] + "' reading '" + toks[1] + "'");
    if (require_normalized &&
        m.state_types[t.to_state] != next_type(m.state_types[t.from_state]))
      fail("transition " + t.id + " breaks the state type rotation");
    m.transitions.push_back(std::move(t));
  }
  if (m.tape_symbols.empty()) fail("machine lacks a gamma line");
  if (m.state_names.empty()) fail("machine lacks a states line");
  for (size_t i = 0; i < m.state_names.size(); ++i)
    for (size_t j = i + 1; j < m.state_names.size(); ++j)
      if (m.state_names[i] == m.state_names[j])
        fail("duplicate state name '" + m.state_names[i] + "'");
  for (size_t i = 0; i < m.tape_symbols.size(); ++i)
    for (size_t j = i + 1; j < m.tape_symbols.size(); ++j)
      if (m.tape_symbols[i] == m.tape_symbols[j])
        fail("duplicate tape symbol '" + m.tape_symbols[i] + "'");
  return m;
}

TuringMachine load_tm_file(const std::string& path, bool require_normalized) {
  std::ifstream in(path);
  if (!in) fail("cannot open machine file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_tm_text(os.str(), require_normalized);
}

std::string tm_to_text(const TuringMachine& m) {
  std::ostringstream os;
  os << "gamma:";
  for (const auto& s : m.tape_symbols) os << " " << s;
  os << "\nstates:";
  for (size_t i = 0; i < m.state_names.size(); ++i)
    os << " " << m.state_names[i] << "/" << m.state_types[i];
  os << "\n";
  for (const auto& t : m.transitions)
    os << m.state_names[t.from_state] << " " << m.tape_symbols[t.read] << " -> "
       << m.state_names[t.to_state] << " " << m.tape_symbols[t.write] << " "
       << (t.dir > 0 ? "R" : "L") << "\n";
  return os.str();
}

bool type_normalized(const TuringMachine& m) {
  for (const auto& t : m.transitions)
    if (m.state_types[t.to_state] != next_type(m.state_types[t.from_state]))
      return false;
  return true;
}

TuringMachine normalize_types(const TuringMachine& m) {
  if (type_normalized(m)) return m;
  const int Q = static_cast<int>(m.state_names.size());
  TuringMachine out;
  out.tape_symbols = m.tape_symbols;
  for (int q = 0; q < Q; ++q)
    for (int k = 1; k <= 3; ++k) {
      out.state_names.push_back(m.state_names[q] + "_" + std::to_string(k));
      out.state_types.push_back(k);
    }
  auto copy_of = [&](int q, int k) { return q * 3 + (k - 1); };
  for (const auto& t : m.transitions)
    for (int k = 1; k <= 3; ++k) {
      TmTransition nt;
      nt.id = "d" + std::to_string(out.transitions.size() + 1);
      nt.from_state = copy_of(t.from_state, k);
      nt.to_state = copy_of(t.to_state, next_type(k));
      nt.read = t.read;
      nt.write = t.write;
      nt.dir = t.dir;
      out.transitions.push_back(std::move(nt));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Alphabet construction

ReductionContext::ReductionContext(TuringMachine m) : machine_(std::move(m)) {
  if (!type_normalized(machine_))
    fail("machine is not type-normalized; run normalize_types first");
  const int G = static_cast<int>(machine_.tape_symbols.size());
  const int T = static_cast<int>(machine_.transitions.size());
  const int Q = static_cast<int>(machine_.state_names.size());
  const auto& sym = machine_.tape_symbols;
  const auto& tr = machine_.transitions;

  std::vector<std::string> names;
  auto add = [&](std::string name, LetterInfo i) {
    names.push_back(std::move(name));
    info_.push_back(i);
    return static_cast<LetterId>(names.size() - 1);
  };

  plain_.resize(G);
  for (int g = 0; g < G; ++g)
    plain_[g] = add(sym[g], {Cat::Plain, g, -1, -1, -1, -1, -1});
  sub_.resize(G * T);
  for (int g = 0; g < G; ++g)
    for (int t = 0; t < T; ++t)
      sub_[g * T + t] =
          add(sym[g] + "_" + tr[t].id, {Cat::Sub, g, -1, t, -1, -1, -1});
  sup_.resize(G * T);
  for (int g = 0; g < G; ++g)
    for (int t = 0; t < T; ++t)
      sup_[g * T + t] =
          add(sym[g] + "^" + tr[t].id, {Cat::Sup, g, -1, -1, t, -1, -1});
  subsup_.resize(G * T * T);
  for (int g = 0; g < G; ++g)
    for (int ts = 0; ts < T; ++ts)
      for (int tu = 0; tu < T; ++tu)
        subsup_[(g * T + ts) * T + tu] =
            add(sym[g] + "_" + tr[ts].id + "^" + tr[tu].id,
                {Cat::SubSup, g, -1, ts, tu, -1, -1});
  head_.resize(Q * G);
  for (int q = 0; q < Q; ++q)
    for (int g = 0; g < G; ++g)
      head_[q * G + g] = add("[" + machine_.state_names[q] + "." + sym[g] + "]",
                             {Cat::Head, g, q, -1, -1, -1, -1});
  sep_ = add("#", {Cat::Separator, -1, -1, -1, -1, -1, -1});

  // Ambiguous letters: one per way a tm_step can rewrite a cell. The cell
  // the head leaves turns from head to subscript (or both marks); the cell
  // it enters turns from superscript (or both) to head; the previous
  // subscript goes plain; the next superscript appears on a plain cell.
  std::vector<std::pair<LetterId, LetterId>> pairs;
  for (int g = 0; g < G; ++g)
    for (int t = 0; t < T; ++t) {
      pairs.emplace_back(sub_[g * T + t], plain_[g]);
      pairs.emplace_back(plain_[g], sup_[g * T + t]);
      pairs.emplace_back(sup_[g * T + t],
                         head_[tr[t].to_state * G + g]);
    }
  for (int t = 0; t < T; ++t) {
    pairs.emplace_back(head_[tr[t].from_state * G + tr[t].read],
                       sub_[tr[t].write * T + t]);
    for (int t2 = 0; t2 < T; ++t2) {
      if (tr[t2].from_state != tr[t].to_state || tr[t2].dir != -tr[t].dir)
        continue;
      pairs.emplace_back(subsup_[(tr[t].write * T + t) * T + t2],
                         head_[tr[t2].to_state * G + tr[t].write]);
      pairs.emplace_back(head_[tr[t].from_state * G + tr[t].read],
                         subsup_[(tr[t].write * T + t) * T + t2]);
    }
  }

  std::vector<std::pair<std::string, std::string>> order;
  for (const auto& [x, y] : pairs) {
    std::string name = "<" + names[x] + "/" + names[y] + ">";
    LetterId amb = add(name, {Cat::Ambiguous, -1, -1, -1, -1, x, y});
    amb_.push_back({{x, y}, amb});
    order.emplace_back(names[x], name);
    order.emplace_back(names[y], name);
  }
  std::sort(amb_.begin(), amb_.end());

  alphabet_ = OrderedAlphabet::make(names, order);
}

LetterId ReductionContext::plain(int symbol) const { return plain_.at(symbol); }

LetterId ReductionContext::sub(int symbol, int t) const {
  const int T = static_cast<int>(machine_.transitions.size());
  return sub_.at(symbol * T + t);
}

LetterId ReductionContext::sup(int symbol, int t) const {
  const int T = static_cast<int>(machine_.transitions.size());
  return sup_.at(symbol * T + t);
}

LetterId ReductionContext::subsup(int symbol, int tsub, int tsup) const {
  const int T = static_cast<int>(machine_.transitions.size());
  return subsup_.at((symbol * T + tsub) * T + tsup);
}

LetterId ReductionContext::head(int state, int symbol) const {
  const int G = static_cast<int>(machine_.tape_symbols.size());
  return head_.at(state * G + symbol);
}

std::optional<LetterId> ReductionContext::ambiguous_for(LetterId first,
                                                        LetterId second) const {
  auto key = std::make_pair(first, second);
  auto it = std::lower_bound(
      amb_.begin(), amb_.end(), key,
      [](const auto& e, const auto& k) { return e.first < k; });
  if (it != amb_.end() && it->first == key) return it->second;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Run languages

Nfa ReductionContext::config_language(int type) const {
  const auto& m = machine_;
  const int G = static_cast<int>(m.tape_symbols.size());
  std::vector<LetterId> plains;
  for (int g = 0; g < G; ++g) plains.push_back(plain_[g]);
  Nfa pad = nfa_star(nfa_letters(alphabet_, plains));

  Nfa out = nfa_none(alphabet_);
  for (int q = 0; q < static_cast<int>(m.state_names.size()); ++q) {
    if (m.state_types[q] != type) continue;
    for (int a = 0; a < G; ++a) {
      auto tn = m.transition_from(q, a);
      if (!tn) continue;
      const auto& nxt = m.transitions[*tn];
      std::vector<LetterId> sups;
      for (int e = 0; e < G; ++e) sups.push_back(sup(e, *tn));
      for (int t = 0; t < static_cast<int>(m.transitions.size()); ++t) {
        const auto& prv = m.transitions[t];
        if (prv.to_state != q) continue;
        int c = prv.write;
        Nfa core = nfa_epsilon(alphabet_);
        if (prv.dir > 0 && nxt.dir > 0) {
          core = nfa_concat(nfa_letters(alphabet_, {sub(c, t)}),
                            nfa_concat(nfa_letters(alphabet_, {head(q, a)}),
                                       nfa_letters(alphabet_, sups)));
        } else if (prv.dir < 0 && nxt.dir > 0) {
          core = nfa_concat(nfa_letters(alphabet_, {head(q, a)}),
                            nfa_letters(alphabet_, {subsup(c, t, *tn)}));
        } else if (prv.dir > 0 && nxt.dir < 0) {
          core = nfa_concat(nfa_letters(alphabet_, {subsup(c, t, *tn)}),
                            nfa_letters(alphabet_, {head(q, a)}));
        } else {
          core = nfa_concat(nfa_letters(alphabet_, sups),
                            nfa_concat(nfa_letters(alphabet_, {head(q, a)}),
                                       nfa_letters(alphabet_, {sub(c, t)})));
        }
        out = nfa_union(out, nfa_concat(pad, nfa_concat(core, pad)));
      }
    }
  }
  return out;
}

const RunLanguages& ReductionContext::languages() const {
  if (languages_) return *languages_;
  auto L = std::make_unique<RunLanguages>();
  L->config.clear();
  for (int t = 1; t <= 3; ++t) L->config.push_back(config_language(t));
  const Nfa& c1 = L->config[0];
  const Nfa& c2 = L->config[1];
  const Nfa& c3 = L->config[2];
  Nfa sep = nfa_letters(alphabet_, {sep_});

  Nfa prefix = nfa_union(
      nfa_epsilon(alphabet_),
      nfa_union(nfa_concat(c3, sep),
                nfa_concat(c2, nfa_concat(sep, nfa_concat(c3, sep)))));
  Nfa cycle = nfa_star(nfa_concat(
      c1, nfa_concat(sep, nfa_concat(c2, nfa_concat(sep, nfa_concat(c3, sep))))));
  Nfa suffix = nfa_union(
      c1, nfa_union(nfa_concat(c1, nfa_concat(sep, c2)),
                    nfa_concat(c1, nfa_concat(sep, nfa_concat(
                                                       c2, nfa_concat(sep, c3))))));
  L->base = nfa_concat(prefix, nfa_concat(cycle, suffix));
  L->closed = nfa_closure(L->base);

  L->factor = L->closed;
  auto reach = reachable_states(L->factor);
  auto coreach = coreachable_states(L->factor);
  L->factor.initial.clear();
  L->factor.final.clear();
  for (int s = 0; s < L->factor.num_states; ++s) {
    if (reach[s]) L->factor.initial.push_back(s);
    if (coreach[s]) L->factor.final.push_back(s);
  }

  languages_ = std::move(L);
  return *languages_;
}

// ---------------------------------------------------------------------------
// Configurations

namespace {

void check_ctx_word(const ReductionContext& ctx, const Word& w) {
  if (w.alphabet != ctx.alphabet())
    fail("word is not over this machine's alphabet");
}

}  // namespace

std::optional<ConfigWord> as_configuration(const ReductionContext& ctx,
                                           const Word& w) {
  check_ctx_word(ctx, w);
  using Cat = ReductionContext::Cat;
  const auto& m = ctx.machine();
  int head_pos = -1, sub_pos = -1, sup_pos = -1;
  for (size_t i = 0; i < w.size(); ++i) {
    const auto& li = ctx.info(w[i]);
    switch (li.cat) {
      case Cat::Separator:
      case Cat::Ambiguous:
        return std::nullopt;
      case Cat::Head:
        if (head_pos >= 0) return std::nullopt;
        head_pos = static_cast<int>(i);
        break;
      case Cat::Sub:
        if (sub_pos >= 0) return std::nullopt;
        sub_pos = static_cast<int>(i);
        break;
      case Cat::Sup:
        if (sup_pos >= 0) return std::nullopt;
        sup_pos = static_cast<int>(i);
        break;
      case Cat::SubSup:
        if (sub_pos >= 0 || sup_pos >= 0) return std::nullopt;
        sub_pos = sup_pos = static_cast<int>(i);
        break;
      case Cat::Plain:
        break;
    }
  }
  if (head_pos < 0 || sub_pos < 0 || sup_pos < 0) return std::nullopt;
  if (std::abs(sub_pos - head_pos) != 1 || std::abs(sup_pos - head_pos) != 1)
    return std::nullopt;

  int state = ctx.info(w[head_pos]).state;
  const auto& sub_info = ctx.info(w[sub_pos]);
  const auto& prv = m.transitions[sub_info.sub];
  if (prv.to_state != state || prv.write != sub_info.symbol ||
      prv.dir != head_pos - sub_pos)
    return std::nullopt;
  const auto& sup_info = ctx.info(w[sup_pos]);
  const auto& nxt = m.transitions[sup_info.sup];
  if (nxt.from_state != state || nxt.read != ctx.info(w[head_pos]).symbol ||
      nxt.dir != sup_pos - head_pos)
    return std::nullopt;

  return ConfigWord{w, head_pos, state, m.state_types[state]};
}

std::optional<ConfigWord> tm_step(const ReductionContext& ctx,
                                  const ConfigWord& c) {
  check_ctx_word(ctx, c.word);
  using Cat = ReductionContext::Cat;
  const auto& m = ctx.machine();
  const int len = static_cast<int>(c.word.size());
  if (c.head < 0 || c.head >= len) fail("configuration head out of range");

  std::vector<int> tape(len);
  for (int i = 0; i < len; ++i) {
    const auto& li = ctx.info(c.word[i]);
    if (li.cat == Cat::Separator || li.cat == Cat::Ambiguous)
      fail("configuration word contains a non-cell letter");
    tape[i] = li.symbol;
  }

  auto tn = m.transition_from(c.state, tape[c.head]);
  if (!tn) fail("configuration state has no transition; not a valid configuration");
  const auto& cur = m.transitions[*tn];
  int h2 = c.head + cur.dir;
  if (h2 < 0 || h2 >= len) return std::nullopt;
  tape[c.head] = cur.write;
  int state2 = cur.to_state;

  auto tnn = m.transition_from(state2, tape[h2]);
  if (!tnn) return std::nullopt;
  const auto& nxt = m.transitions[*tnn];
  int h3 = h2 + nxt.dir;
  if (h3 < 0 || h3 >= len) return std::nullopt;

  Word out{ctx.alphabet(), std::vector<LetterId>(len)};
  for (int i = 0; i < len; ++i) out.letters[i] = ctx.plain(tape[i]);
  out.letters[h2] = ctx.head(state2, tape[h2]);
  if (h3 == c.head) {
    out.letters[c.head] = ctx.subsup(tape[c.head], *tn, *tnn);
  } else {
    out.letters[c.head] = ctx.sub(tape[c.head], *tn);
    out.letters[h3] = ctx.sup(tape[h3], *tnn);
  }
  return ConfigWord{std::move(out), h2, state2, m.state_types[state2]};
}

HeightResult height(const ReductionContext& ctx, const ConfigWord& c, int cap) {
  check_ctx_word(ctx, c.word);
  const auto& m = ctx.machine();
  const int len = static_cast<int>(c.word.size());
  std::vector<int> tape(len);
  for (int i = 0; i < len; ++i) tape[i] = ctx.info(c.word[i]).symbol;
  int h = c.head, s = c.state, count = 0;
  while (true) {
    auto tn = m.transition_from(s, tape[h]);
    if (!tn) break;
    const auto& t = m.transitions[*tn];
    int h2 = h + t.dir;
    if (h2 < 0 || h2 >= len) break;
    if (count == cap) return {true, cap};
    tape[h] = t.write;
    s = t.to_state;
    h = h2;
    ++count;
  }
  return {false, count};
}

Word head_neighborhood(const ReductionContext& ctx, const ConfigWord& c,
                       int radius) {
  check_ctx_word(ctx, c.word);
  if (radius < 0) fail("radius must be nonnegative");
  const int len = static_cast<int>(c.word.size());
  int lo = std::max(0, c.head - radius);
  int hi = std::min(len - 1, c.head + radius);
  Word out{ctx.alphabet(), {}};
  for (int i = lo; i <= hi; ++i) out.letters.push_back(c.word[i]);
  return out;
}

Word merge_configs(const ReductionContext& ctx, const ConfigWord& c1,
                   const ConfigWord& c2) {
  check_ctx_word(ctx, c1.word);
  check_ctx_word(ctx, c2.word);
  auto succ = tm_step(ctx, c1);
  if (!succ || !(succ->word == c2.word))
    fail("merge_configs: the second configuration is not the tm_step successor "
         "of the first");
  Word out{ctx.alphabet(), {}};
  out.letters.reserve(c1.word.size());
  for (size_t i = 0; i < c1.word.size(); ++i) {
    if (c1.word[i] == c2.word[i]) {
      out.letters.push_back(c1.word[i]);
      continue;
    }
    auto amb = ctx.ambiguous_for(c1.word[i], c2.word[i]);
    if (!amb)
      throw std::logic_error("no ambiguous letter covers a changed cell");
    out.letters.push_back(*amb);
  }
  return out;
}

std::vector<ConfigWord> configurations_below(const ReductionContext& ctx,
                                             const Word& v) {
  check_ctx_word(ctx, v);
  using Cat = ReductionContext::Cat;
  std::vector<ConfigWord> out;
  std::vector<LetterId> current(v.size());

  struct Counts {
    int heads = 0, subs = 0, sups = 0;
  };
  auto bump = [&](Counts c, LetterId l) -> std::optional<Counts> {
    const auto& li = ctx.info(l);
    if (li.cat == Cat::Separator) return std::nullopt;
    if (li.cat == Cat::Head) ++c.heads;
    if (li.cat == Cat::Sub || li.cat == Cat::SubSup) ++c.subs;
    if (li.cat == Cat::Sup || li.cat == Cat::SubSup) ++c.sups;
    if (c.heads > 1 || c.subs > 1 || c.sups > 1) return std::nullopt;
    return c;
  };

  auto rec = [&](auto&& self, size_t pos, Counts counts) -> void {
    if (pos == v.size()) {
      Word w{ctx.alphabet(), current};
      if (auto cfg = as_configuration(ctx, w)) out.push_back(std::move(*cfg));
      return;
    }
    const auto& li = ctx.info(v[pos]);
    std::vector<LetterId> cands;
    if (li.cat == Cat::Ambiguous)
      cands = {li.first, li.second};
    else
      cands = {v[pos]};
    for (LetterId cand : cands) {
      auto next = bump(counts, cand);
      if (!next) continue;
      current[pos] = cand;
      self(self, pos + 1, *next);
    }
  };
  rec(rec, 0, {});
  return out;
}

// ---------------------------------------------------------------------------
// Factor analysis

bool forbidden_local_factor(const ReductionContext& ctx, const Word& w) {
  check_ctx_word(ctx, w);
  int seps = 0;
  for (LetterId l : w.letters)
    if (l == ctx.separator()) ++seps;
  if (seps > 2) fail("local factors contain at most two separators");
  return !ctx.languages().factor.accepts(w);
}

namespace {

// The two-type sets a step window can leave: {t, next(t)}. first_of gives
// the reading that treats the block as the earlier configuration.
int first_of(const std::vector<int>& types) {
  if (types.size() != 2) return 0;
  if (types[0] == 1 && types[1] == 2) return 1;
  if (types[0] == 2 && types[1] == 3) return 2;
  if (types[0] == 1 && types[1] == 3) return 3;
  return 0;
}

bool cyclic_pair(const std::vector<int>& types) { return first_of(types) != 0; }

std::vector<int> next_set(const std::vector<int>& types) {
  int f = first_of(types);
  if (f == 0) return {};
  int nf = next_type(f);
  std::vector<int> out = {nf, next_type(nf)};
  std::sort(out.begin(), out.end());
  return out;
}

Word slice(const Word& w, size_t begin, size_t end) {
  Word out{w.alphabet, {}};
  out.letters.assign(w.letters.begin() + begin, w.letters.begin() + end);
  return out;
}

}  // namespace

FactorReport analyze_factors(const ReductionContext& ctx, const Word& v) {
  check_ctx_word(ctx, v);
  const auto& L = ctx.languages();
  FactorReport report;

  std::vector<std::pair<size_t, size_t>> spans;
  size_t begin = 0;
  for (size_t i = 0; i <= v.size(); ++i) {
    if (i == v.size() || v[i] == ctx.separator()) {
      spans.emplace_back(begin, i);
      begin = i + 1;
    }
  }
  const size_t B = spans.size();

  report.locally_consistent = true;
  auto check_window = [&](size_t from, size_t to) {
    if (report.forbidden) return;
    if (!L.factor.accepts(slice(v, from, to))) {
      report.forbidden = std::make_pair(from, to);
      report.locally_consistent = false;
    }
  };
  if (B <= 3) {
    check_window(0, v.size());
  } else {
    for (size_t i = 0; i + 2 < B; ++i)
      check_window(spans[i].first, spans[i + 2].second);
  }

  for (const auto& [b, e] : spans) {
    BlockReport br;
    br.begin = b;
    br.end = e;
    Word block = slice(v, b, e);
    for (int t = 1; t <= 3; ++t)
      if (accepts_some_below(L.config[t - 1], block)) br.types.push_back(t);
    report.blocks.push_back(std::move(br));
  }

  auto ambiguous_triple = [&](size_t i) {
    if (i == 0 || i + 1 >= B) return false;
    const auto& a = report.blocks[i - 1].types;
    const auto& b = report.blocks[i].types;
    const auto& c = report.blocks[i + 1].types;
    return cyclic_pair(a) && cyclic_pair(b) && cyclic_pair(c) &&
           b == next_set(a) && c == next_set(b);
  };

  for (size_t i = 0; i < B; ++i) {
    auto& br = report.blocks[i];
    br.anchor = !ambiguous_triple(i);
    if (!br.anchor) continue;
    std::vector<int> candidates;
    for (int t : br.types) {
      bool left_ok = i == 0;
      if (!left_ok)
        for (int tl : report.blocks[i - 1].types)
          if (next_type(tl) == t) left_ok = true;
      bool right_ok = i + 1 == B;
      if (!right_ok) {
        const auto& rt = report.blocks[i + 1].types;
        right_ok = std::find(rt.begin(), rt.end(), next_type(t)) != rt.end();
      }
      if (left_ok && right_ok) candidates.push_back(t);
    }
    if (candidates.empty()) {
      br.anchor_type = 0;
    } else if (candidates.size() == 1) {
      br.anchor_type = candidates[0];
    } else {
      int f = first_of(br.types);
      br.anchor_type =
          (f != 0 && std::find(candidates.begin(), candidates.end(), f) !=
                         candidates.end())
              ? f
              : candidates[0];
    }
  }

  report.all_coherent = true;
  size_t i = 0;
  while (i < B) {
    if (report.blocks[i].anchor) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j + 1 < B && !report.blocks[j + 1].anchor) ++j;
    AmbiguousRun run;
    run.first_block = i;
    run.last_block = j;
    int tl = report.blocks[i - 1].anchor_type;
    int tr = report.blocks[j + 1].anchor_type;
    int fi = first_of(report.blocks[i].types);
    int fj = first_of(report.blocks[j].types);
    bool first_ok = tl != 0 && tr != 0 && fi != 0 && fj != 0 &&
                    next_type(tl) == fi && next_type(fj) == tr;
    bool second_ok = tl != 0 && tr != 0 && fi != 0 && fj != 0 &&
                     next_type(tl) == next_type(fi) &&
                     next_type(next_type(fj)) == tr;
    run.coherent = first_ok || second_ok;
    if (!run.coherent) report.all_coherent = false;
    report.runs.push_back(run);
    i = j + 1;
  }

  return report;
}

// ---------------------------------------------------------------------------
// Duplicator instances

std::pair<Word, Word> build_duplicator_instance(const ReductionContext& ctx,
                                                const ConfigWord& start,
                                                int n) {
  if (n < 2) fail("build_duplicator_instance needs n >= 2");
  std::vector<ConfigWord> run = {start};
  for (int k = 0; k < n + 1; ++k) {
    auto next = tm_step(ctx, run.back());
    if (!next)
      fail("the run from the start configuration is shorter than n+1 steps");
    run.push_back(std::move(*next));
  }

  auto join = [&](const std::vector<Word>& blocks) {
    Word out{ctx.alphabet(), {}};
    for (size_t i = 0; i < blocks.size(); ++i) {
      if (i) out.letters.push_back(ctx.separator());
      out.letters.insert(out.letters.end(), blocks[i].letters.begin(),
                         blocks[i].letters.end());
    }
    return out;
  };

  std::vector<Word> ublocks;
  for (const auto& c : run) ublocks.push_back(c.word);

  std::vector<Word> vblocks;
  vblocks.push_back(run.front().word);
  for (int k = 1; k + 1 <= n; ++k)
    vblocks.push_back(merge_configs(ctx, run[k], run[k + 1]));
  vblocks.push_back(run.back().word);

  return {join(ublocks), join(vblocks)};
}

}  // namespace fopw
