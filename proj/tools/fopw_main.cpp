#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fopw/alphabet.hpp"
#include "fopw/automata.hpp"
#include "fopw/counterexample.hpp"
#include "fopw/efgame.hpp"
#include "fopw/intgame.hpp"
#include "fopw/logic.hpp"
#include "fopw/reduction.hpp"

namespace {

using namespace fopw;

std::string show_word(const Word& w) {
  return w.empty() ? std::string("(empty)") : word_to_text(w);
}

std::string show_pair(const Word& u, const Word& v) {
  return "(\"" + word_to_text(u) + "\", \"" + word_to_text(v) + "\")";
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

// --- closure ---------------------------------------------------------------

struct ClosureArgs {
  std::string alphabet_file, nfa_file;
  std::string up_letter, member_word;
  std::vector<std::string> leq_words;
  std::string included_file, equals_file;
  bool print = false, dot = false, monoid = false;
  bool have_member = false;
  int words = -1;
  int maxlen_cap = 12;
};

int run_closure(const ClosureArgs& a) {
  auto alphabet = load_alphabet_file(a.alphabet_file);
  int code = 0;
  if (!a.up_letter.empty()) {
    LetterId l = alphabet->id(a.up_letter);
    std::cout << "up-closure of " << a.up_letter << ":";
    for (LetterId b : alphabet->up_closure(l)) std::cout << " " << alphabet->name(b);
    std::cout << "\n";
  }
  if (!a.leq_words.empty()) {
    Word u = parse_word(alphabet, a.leq_words[0]);
    Word v = parse_word(alphabet, a.leq_words[1]);
    bool le = leq_word(u, v);
    std::cout << "leq: " << (le ? "true" : "false") << "\n";
    if (!le) code = 1;
  }
  if (a.nfa_file.empty()) {
    if (a.up_letter.empty() && a.leq_words.empty())
      throw std::runtime_error("closure needs --nfa, --up or --leq");
    return code;
  }
  Nfa closed = nfa_closure(load_automaton_file(alphabet, a.nfa_file));
  bool automaton_action = a.dot || a.monoid || a.have_member ||
                          !a.included_file.empty() || !a.equals_file.empty() ||
                          a.words >= 0;
  if (a.print || !automaton_action) std::cout << nfa_to_text(closed);
  if (a.dot) std::cout << to_dot(closed);
  if (a.monoid) {
    Dfa det = determinize(closed);
    Dfa min = minimize(det);
    TransitionMonoid m = syntactic_monoid(det);
    std::cout << "minimal dfa: " << min.num_states << " states\n";
    std::cout << "syntactic monoid: " << m.elements.size() << " elements, "
              << (m.aperiodic() ? "aperiodic" : "not aperiodic") << "\n";
    std::cout << "counter-free: " << yesno(is_counter_free(min)) << "\n";
  }
  if (a.have_member) {
    bool in = closed.accepts(parse_word(alphabet, a.member_word));
    std::cout << "member: " << yesno(in) << "\n";
    if (!in) code = 1;
  }
  if (!a.included_file.empty()) {
    Nfa other = load_automaton_file(alphabet, a.included_file);
    InclusionResult r = language_included(closed, other);
    if (r.included) {
      std::cout << "included: yes\n";
    } else {
      std::cout << "included: no (counterexample: " << show_word(*r.counterexample)
                << ")\n";
      code = 1;
    }
  }
  if (!a.equals_file.empty()) {
    Nfa other = load_automaton_file(alphabet, a.equals_file);
    bool eq = language_equal(closed, other);
    std::cout << "equal: " << yesno(eq) << "\n";
    if (!eq) code = 1;
  }
  if (a.words >= 0) {
    auto words = enumerate_language(closed, a.words, a.maxlen_cap);
    std::cout << "words up to length " << a.words << ": " << words.size() << "\n";
    for (const auto& w : words) std::cout << show_word(w) << "\n";
  }
  return code;
}

// --- monotone ----------------------------------------------------------------

struct MonotoneArgs {
  std::string alphabet_file, nfa_file;
  bool hardness = false, print = false;
};

int run_monotone(const MonotoneArgs& a) {
  auto alphabet = load_alphabet_file(a.alphabet_file);
  Nfa nfa = load_automaton_file(alphabet, a.nfa_file);
  if (a.hardness) nfa = hardness_instance(nfa);
  if (a.print) std::cout << nfa_to_text(nfa);
  MonotoneResult r = is_monotone(nfa);
  if (r.monotone) {
    std::cout << "monotone\n";
    return 0;
  }
  std::cout << "not monotone\n";
  std::cout << "witness: " << show_pair(r.witness->first, r.witness->second)
            << "\n";
  return 1;
}

// --- eval / lang -------------------------------------------------------------

std::map<std::string, size_t> parse_bindings(const std::vector<std::string>& binds) {
  std::map<std::string, size_t> val;
  for (const auto& b : binds) {
    auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::runtime_error("malformed --bind '" + b + "', expected name=index");
    size_t used = 0;
    std::string num = b.substr(eq + 1);
    size_t pos = std::stoul(num, &used);
    if (used != num.size())
      throw std::runtime_error("malformed --bind '" + b + "', expected name=index");
    val[b.substr(0, eq)] = pos;
  }
  return val;
}

struct EvalArgs {
  std::string alphabet_file, formula, word;
  std::string dialect = "foplus";
  std::vector<std::string> binds;
};

Dialect dialect_of(const std::string& name) {
  if (name == "foplus") return Dialect::foplus;
  if (name == "fo") return Dialect::fo;
  throw std::runtime_error("unknown dialect '" + name + "', expected foplus or fo");
}

int run_eval(const EvalArgs& a) {
  auto alphabet = load_alphabet_file(a.alphabet_file);
  Formula f = parse_formula(alphabet, a.formula, dialect_of(a.dialect));
  Word w = parse_word(alphabet, a.word);
  bool value = evaluate(f, w, parse_bindings(a.binds));
  std::cout << (value ? "true" : "false") << "\n";
  return value ? 0 : 1;
}

struct LangArgs {
  std::string alphabet_file, formula;
  std::string dialect = "foplus";
  int sample_rank = -1;
  uint64_t seed = 0;
  bool have_seed = false;
  bool translate = false;
  int maxlen = -1;
  int maxlen_cap = 12, rank_cap = 3;
};

int run_lang(const LangArgs& a) {
  auto alphabet = load_alphabet_file(a.alphabet_file);
  Formula f;
  if (a.sample_rank >= 0) {
    if (!a.have_seed)
      throw std::runtime_error("--sample requires an explicit --seed");
    f = sample_formula(alphabet, a.sample_rank, a.seed, a.rank_cap);
  } else if (!a.formula.empty()) {
    f = parse_formula(alphabet, a.formula, dialect_of(a.dialect));
  } else {
    throw std::runtime_error("lang needs --formula or --sample");
  }
  std::cout << "formula: " << print_formula(f) << "\n";
  std::cout << "rank: " << quantifier_rank(f) << "\n";
  if (a.translate) {
    f = fo_to_foplus_trivial_order(f);
    std::cout << "translated: " << print_formula(f) << "\n";
  }
  if (a.maxlen >= 0) {
    auto words = defined_language(f, a.maxlen, a.maxlen_cap);
    std::cout << "words up to length " << a.maxlen << ": " << words.size() << "\n";
    for (const auto& w : words) std::cout << show_word(w) << "\n";
  }
  return 0;
}

// --- ef game -----------------------------------------------------------------

Move::Side opposite(Move::Side s) {
  return s == Move::Side::OnU ? Move::Side::OnV : Move::Side::OnU;
}

void push_move(GamePosition& p, Move m) {
  (m.side == Move::Side::OnU ? p.alpha : p.beta).push_back(m.pos);
}

void print_move(char player, Move m) {
  std::cout << player << (m.side == Move::Side::OnU ? " u " : " v ") << m.pos
            << "\n";
}

void trace_best_play(const Word& u, const Word& v, int n, bool dup_wins_game,
                     const EfCaps& caps) {
  GamePosition p{u, v, {}, {}, n};
  for (int round = 1; round <= n; ++round) {
    Move s;
    if (dup_wins_game) {
      s = bisect_spoiler_move(p);
    } else {
      auto m = best_move(p, caps);
      if (!m) break;
      s = *m;
    }
    push_move(p, s);
    print_move('S', s);
    auto reply = best_move(p, caps);
    Move d = reply ? *reply : Move{opposite(s.side), 0};
    push_move(p, d);
    print_move('D', d);
    p.budget -= 1;
    if (!position_valid(p)) {
      std::cout << "position invalid after " << round << " rounds\n";
      break;
    }
  }
}

struct EfArgs {
  std::string alphabet_file, u_text, v_text;
  int n = 1;
  bool trace = false;
  EfCaps caps;
};

int run_ef(const EfArgs& a) {
  auto alphabet = load_alphabet_file(a.alphabet_file);
  Word u = parse_word(alphabet, a.u_text);
  Word v = parse_word(alphabet, a.v_text);
  bool dup = duplicator_wins(u, v, a.n, a.caps);
  if (a.trace) trace_best_play(u, v, a.n, dup, a.caps);
  std::cout << (dup ? "Duplicator" : "Spoiler") << " wins EF+_" << a.n << "\n";
  return dup ? 0 : 1;
}

// --- witness -------------------------------------------------------------------

struct WitnessArgs {
  std::string alphabet_file, nfa_file;
  int n = 1, maxlen = 4;
  int maxlen_cap = 12;
  EfCaps caps;
};

int run_witness(const WitnessArgs& a) {
  auto alphabet = load_alphabet_file(a.alphabet_file);
  Nfa nfa = load_automaton_file(alphabet, a.nfa_file);
  auto pair = witness_search(nfa, a.n, a.maxlen, a.caps, a.maxlen_cap);
  if (!pair) {
    std::cout << "none found up to length " << a.maxlen << "\n";
    return 1;
  }
  std::cout << "u: " << show_word(pair->first) << "\n";
  std::cout << "v: " << show_word(pair->second) << "\n";
  return 0;
}

// --- kdemo -----------------------------------------------------------------------

struct KdemoArgs {
  int n = 1;
  int max_n = 3;
  bool trace = false;
};

int run_kdemo(const KdemoArgs& a) {
  if (a.n < 0) throw std::runtime_error("n must be nonnegative");
  if (a.n > a.max_n)
    throw std::runtime_error("n " + std::to_string(a.n) + " exceeds max_n cap " +
                             std::to_string(a.max_n));
  const KContext& k = k_context();
  auto [u, v] = build_ce_pair(a.n);
  bool u_in = k_member(u);
  bool v_in = k_member(v);
  std::cout << "u: " << show_word(u) << "\n";
  std::cout << "v: " << show_word(v) << "\n";
  std::cout << "u in K: " << yesno(u_in) << "\n";
  std::cout << "v in K: " << yesno(v_in) << "\n";
  TransitionMonoid m = syntactic_monoid(k.dfa);
  std::cout << "recognizer: " << k.dfa.num_states << " states, syntactic monoid "
            << m.elements.size() << " elements, "
            << (m.aperiodic() ? "aperiodic" : "not aperiodic") << ", "
            << (is_counter_free(k.dfa) ? "counter-free" : "not counter-free")
            << "\n";
  bool doubling_ok = verify_strategy(u, v, a.n, doubling_duplicator_reply);
  std::cout << "doubling strategy: "
            << (doubling_ok ? "verified for " + std::to_string(a.n) + " round(s)"
                            : "failed")
            << "\n";
  bool dup = doubling_ok;
  if (a.n <= 2) {
    EfCaps caps;
    caps.max_rounds = std::max(caps.max_rounds, a.n);
    dup = duplicator_wins(u, v, a.n, caps);
    if (a.trace) trace_best_play(u, v, a.n, dup, caps);
  } else if (a.trace) {
    GamePosition p{u, v, {}, {}, a.n};
    for (int round = 1; round <= a.n; ++round) {
      Move s = bisect_spoiler_move(p);
      int reply = doubling_duplicator_reply(p, s);
      push_move(p, s);
      print_move('S', s);
      Move d{opposite(s.side), reply};
      push_move(p, d);
      print_move('D', d);
      p.budget -= 1;
    }
  }
  std::cout << (dup ? "Duplicator" : "Spoiler") << " wins EF+_" << a.n << "\n";
  return (u_in && !v_in && doubling_ok && dup) ? 0 : 1;
}

// --- reduce ------------------------------------------------------------------------

struct ReduceArgs {
  std::string tm_file;
  bool normalize = false;
  std::string write_dir;
  std::string check_config, step_config, merge_config, below_word, factor_word,
      analyze_word, start_config;
  bool have_check = false, have_step = false, have_merge = false,
       have_below = false, have_factor = false, have_analyze = false;
  int instance_n = -1;
};

std::string types_text(const std::vector<int>& types) {
  std::string s = "{";
  for (size_t i = 0; i < types.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(types[i]);
  }
  return s + "}";
}

int run_reduce(const ReduceArgs& a) {
  TuringMachine m = load_tm_file(a.tm_file, !a.normalize);
  if (a.normalize) {
    m = normalize_types(m);
    std::cout << tm_to_text(m);
  }
  bool action = a.normalize || !a.write_dir.empty() || a.have_check ||
                a.have_step || a.have_merge || a.have_below || a.have_factor ||
                a.have_analyze || a.instance_n >= 0;
  ReductionContext ctx(m);
  int code = 0;
  auto need_config = [&](const std::string& text) {
    Word w = parse_word(ctx.alphabet(), text);
    auto c = as_configuration(ctx, w);
    if (!c) throw std::runtime_error("not a configuration: " + text);
    return *c;
  };
  if (!a.write_dir.empty()) {
    const RunLanguages& langs = ctx.languages();
    write_file(a.write_dir + "/alphabet.txt", alphabet_to_text(*ctx.alphabet()));
    write_file(a.write_dir + "/base.nfa", nfa_to_text(langs.base));
    write_file(a.write_dir + "/closed.nfa", nfa_to_text(langs.closed));
    std::cout << "wrote " << a.write_dir << "/alphabet.txt\n";
    std::cout << "wrote " << a.write_dir << "/base.nfa\n";
    std::cout << "wrote " << a.write_dir << "/closed.nfa\n";
  }
  if (a.have_check) {
    Word w = parse_word(ctx.alphabet(), a.check_config);
    auto c = as_configuration(ctx, w);
    if (c) {
      std::cout << "configuration: state "
                << ctx.machine().state_names[c->state] << ", head " << c->head
                << ", type " << c->type << "\n";
    } else {
      std::cout << "not a configuration\n";
      code = 1;
    }
  }
  if (a.have_step) {
    ConfigWord c = need_config(a.step_config);
    auto next = tm_step(ctx, c);
    if (next) {
      std::cout << "step: " << show_word(next->word) << "\n";
    } else {
      std::cout << "step: halts\n";
      code = 1;
    }
  }
  if (a.have_merge) {
    ConfigWord c = need_config(a.merge_config);
    auto next = tm_step(ctx, c);
    if (!next)
      throw std::runtime_error("configuration has no successor on its span");
    std::cout << "merged: " << show_word(merge_configs(ctx, c, *next)) << "\n";
  }
  if (a.have_below) {
    Word w = parse_word(ctx.alphabet(), a.below_word);
    auto configs = configurations_below(ctx, w);
    std::cout << "configurations below: " << configs.size() << "\n";
    for (const auto& c : configs) std::cout << show_word(c.word) << "\n";
  }
  if (a.have_factor) {
    Word w = parse_word(ctx.alphabet(), a.factor_word);
    bool forbidden = forbidden_local_factor(ctx, w);
    std::cout << "forbidden local factor: " << yesno(forbidden) << "\n";
    if (!forbidden) code = 1;
  }
  if (a.have_analyze) {
    Word w = parse_word(ctx.alphabet(), a.analyze_word);
    FactorReport r = analyze_factors(ctx, w);
    if (r.forbidden)
      std::cout << "forbidden window: [" << r.forbidden->first << ", "
                << r.forbidden->second << ")\n";
    std::cout << "locally consistent: " << yesno(r.locally_consistent) << "\n";
    for (size_t i = 0; i < r.blocks.size(); ++i) {
      const BlockReport& b = r.blocks[i];
      std::cout << "block " << i << " [" << b.begin << ", " << b.end
                << "): types " << types_text(b.types) << " ";
      if (b.anchor) {
        std::cout << "anchor";
        if (b.anchor_type)
          std::cout << " type " << b.anchor_type;
        else
          std::cout << " (no consistent type)";
      } else {
        std::cout << "ambiguous";
      }
      std::cout << "\n";
    }
    for (const auto& run : r.runs)
      std::cout << "run blocks " << run.first_block << ".." << run.last_block
                << ": " << (run.coherent ? "coherent" : "not coherent") << "\n";
    std::cout << "all runs coherent: " << yesno(r.all_coherent) << "\n";
    if (!r.locally_consistent || !r.all_coherent) code = 1;
  }
  if (a.instance_n >= 0) {
    ConfigWord start = need_config(a.start_config);
    auto [u, v] = build_duplicator_instance(ctx, start, a.instance_n);
    const RunLanguages& langs = ctx.languages();
    bool u_in = langs.closed.accepts(u);
    bool v_in = langs.closed.accepts(v);
    std::cout << "u: " << show_word(u) << "\n";
    std::cout << "v: " << show_word(v) << "\n";
    std::cout << "u in L: " << yesno(u_in) << "\n";
    std::cout << "v in L: " << yesno(v_in) << "\n";
    if (!u_in || v_in) code = 1;
  }
  if (!action) {
    const RunLanguages& langs = ctx.languages();
    std::cout << "machine: " << m.state_names.size() << " states, "
              << m.transitions.size() << " transitions, "
              << m.tape_symbols.size() << " tape symbols\n";
    std::cout << "alphabet: " << ctx.alphabet()->size() << " letters\n";
    std::cout << "base language: " << langs.base.num_states << " states\n";
    std::cout << "closed language: " << langs.closed.num_states << " states\n";
    std::cout << "factor language: " << langs.factor.num_states << " states\n";
  }
  return code;
}

// --- height ----------------------------------------------------------------------

struct HeightArgs {
  std::string tm_file, config;
  int cap = 100000;
  int radius = -1;
};

int run_height(const HeightArgs& a) {
  TuringMachine m = load_tm_file(a.tm_file);
  ReductionContext ctx(m);
  Word w = parse_word(ctx.alphabet(), a.config);
  auto c = as_configuration(ctx, w);
  if (!c) throw std::runtime_error("not a configuration: " + a.config);
  if (a.radius >= 0)
    std::cout << "neighborhood: " << show_word(head_neighborhood(ctx, *c, a.radius))
              << "\n";
  HeightResult h = height(ctx, *c, a.cap);
  if (h.overflow) {
    std::cout << "height: overflow (cap " << a.cap << ")\n";
    return 1;
  }
  std::cout << "height: " << h.value << "\n";
  return 0;
}

// --- intgame ----------------------------------------------------------------------

struct IntgameArgs {
  int n = 1;
  std::string u_text, v_text;
  bool mirrored = false;
  int max_rounds = -1;
};

int run_intgame_play(const IntgameArgs& a) {
  IntegerArena arena = parse_arena(
      a.n, a.u_text, a.v_text,
      a.mirrored ? Orientation::mirrored : Orientation::standard);
  if (!validate_arena(arena))
    throw std::runtime_error("invalid arena: endpoint conventions violated");
  int limit = a.max_rounds > 0 ? a.max_rounds : 2 * a.n;

  IntGameState state{arena, {}};
  bool rejected = false;
  int rounds_used = 0;
  for (int round = 1; round <= limit && !rejected; ++round) {
    IntMove s = spoiler_move(state);
    std::cout << "S " << (s.on_u ? "u" : "v") << " " << s.pos << "\n";
    int reply_len = static_cast<int>(s.on_u ? arena.v.size() : arena.u.size());
    int chosen = -1;
    for (int y = 0; y < reply_len && chosen < 0; ++y) {
      IntTokens tokens = state.history;
      tokens.emplace_back(s.on_u ? s.pos : y, s.on_u ? y : s.pos);
      if (referee_check(arena, tokens)) chosen = y;
    }
    if (chosen < 0) chosen = 0;
    std::cout << "D " << (s.on_u ? "v" : "u") << " " << chosen << "\n";
    state.history.emplace_back(s.on_u ? s.pos : chosen, s.on_u ? chosen : s.pos);
    rounds_used = round;
    if (!referee_check(arena, state.history)) rejected = true;
  }
  if (rejected)
    std::cout << "referee rejects after " << rounds_used << " rounds\n";
  else
    std::cout << "no rejection within " << limit << " rounds\n";

  IntGameResult r = solve_int_game(arena, limit);
  if (r.spoiler_wins) {
    std::cout << "Spoiler wins in " << r.rounds << " rounds\n";
    return 0;
  }
  std::cout << "Duplicator survives " << r.rounds << " rounds\n";
  return 1;
}

struct IntgameVerifyArgs {
  int n = 1;
  int maxlen = 4;
  int max_rounds = -1;
};

int run_intgame_verify(const IntgameVerifyArgs& a) {
  int limit = a.max_rounds > 0 ? a.max_rounds : 2 * a.n;
  int checked = 0;
  for (Orientation o : {Orientation::standard, Orientation::mirrored}) {
    for (const IntegerArena& arena : enumerate_arenas(a.n, a.maxlen, a.maxlen, o)) {
      ++checked;
      IntGameResult r = solve_int_game(arena, limit);
      StrategyCheck s = verify_spoiler_strategy(arena, limit);
      if (r.spoiler_wins && s.ok && r.rounds <= limit && s.worst_rounds <= limit)
        continue;
      std::cout << "arena failed: n=" << arena.n << " u=\"";
      for (size_t i = 0; i < arena.u.size(); ++i)
        std::cout << (i ? " " : "") << arena.u[i];
      std::cout << "\" v=\"";
      for (size_t i = 0; i < arena.v.size(); ++i)
        std::cout << (i ? " " : "") << arena.v[i] << "/" << arena.v[i] - 1;
      std::cout << "\" "
                << (o == Orientation::standard ? "standard" : "mirrored") << "\n";
      return 1;
    }
  }
  std::cout << "arenas checked: " << checked << "\n";
  std::cout << "Spoiler wins all arenas in ≤ " << limit << " rounds\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordered alphabets, monotone languages, positive first-order "
               "logic and their word games"};
  app.require_subcommand(1);

  ClosureArgs closure;
  auto* cmd_closure = app.add_subcommand(
      "closure", "Upward closure of a regular language and order queries");
  cmd_closure->add_option("--alphabet", closure.alphabet_file, "alphabet file")
      ->required();
  cmd_closure->add_option("--nfa", closure.nfa_file, "automaton file");
  cmd_closure->add_flag("--print", closure.print, "print the closed automaton");
  cmd_closure->add_flag("--dot", closure.dot, "print graphviz output");
  cmd_closure->add_flag("--monoid", closure.monoid,
                        "print minimal DFA and syntactic monoid facts");
  auto* opt_member = cmd_closure->add_option(
      "--member", closure.member_word, "test closure membership of a word");
  cmd_closure->add_option("--words", closure.words,
                          "enumerate closure words up to this length");
  cmd_closure->add_option("--up", closure.up_letter,
                          "print the up-closure of a letter");
  cmd_closure->add_option("--leq", closure.leq_words,
                          "compare two words componentwise")
      ->expected(2);
  cmd_closure->add_option("--included-in", closure.included_file,
                          "check closed language inclusion in this automaton");
  cmd_closure->add_option("--equals", closure.equals_file,
                          "check closed language equality with this automaton");
  cmd_closure->add_option("--maxlen-cap", closure.maxlen_cap,
                          "enumeration length cap");

  MonotoneArgs monotone;
  auto* cmd_monotone =
      app.add_subcommand("monotone", "Decide whether a language is monotone");
  cmd_monotone->add_option("--alphabet", monotone.alphabet_file, "alphabet file")
      ->required();
  cmd_monotone->add_option("--nfa", monotone.nfa_file, "automaton file")
      ->required();
  cmd_monotone->add_flag("--hardness", monotone.hardness,
                         "test the derived two-letter-extension instance instead");
  cmd_monotone->add_flag("--print", monotone.print,
                         "print the automaton under test");

  EvalArgs eval;
  auto* cmd_eval =
      app.add_subcommand("eval", "Evaluate a formula on a word");
  cmd_eval->add_option("--alphabet", eval.alphabet_file, "alphabet file")
      ->required();
  cmd_eval->add_option("--formula", eval.formula, "formula text")->required();
  cmd_eval->add_option("--word", eval.word, "word text");
  cmd_eval->add_option("--dialect", eval.dialect, "foplus (default) or fo");
  cmd_eval->add_option("--bind", eval.binds,
                       "free-variable binding name=index (repeatable)");

  LangArgs lang;
  auto* cmd_lang = app.add_subcommand(
      "lang", "Print, sample, translate and enumerate formula languages");
  cmd_lang->add_option("--alphabet", lang.alphabet_file, "alphabet file")
      ->required();
  cmd_lang->add_option("--formula", lang.formula, "formula text");
  cmd_lang->add_option("--dialect", lang.dialect, "foplus (default) or fo");
  auto* opt_sample = cmd_lang->add_option(
      "--sample", lang.sample_rank, "sample a formula of this quantifier rank");
  auto* opt_seed = cmd_lang->add_option("--seed", lang.seed, "sampling seed");
  opt_sample->needs(opt_seed);
  cmd_lang->add_flag("--translate", lang.translate,
                     "rewrite into a negation-free equivalent "
                     "(trivially ordered alphabets)");
  cmd_lang->add_option("--maxlen", lang.maxlen,
                       "enumerate defined words up to this length");
  cmd_lang->add_option("--maxlen-cap", lang.maxlen_cap, "enumeration length cap");
  cmd_lang->add_option("--rank-cap", lang.rank_cap, "sampling rank cap");

  EfArgs ef;
  auto* cmd_ef = app.add_subcommand("ef", "Play the n-round word game exactly");
  cmd_ef->add_option("--alphabet", ef.alphabet_file, "alphabet file")->required();
  cmd_ef->add_option("--u", ef.u_text, "left word")->required();
  cmd_ef->add_option("--v", ef.v_text, "right word")->required();
  cmd_ef->add_option("-n", ef.n, "number of rounds")->required();
  cmd_ef->add_flag("--trace", ef.trace, "print a best-play move list");
  cmd_ef->add_option("--max-rounds", ef.caps.max_rounds, "round cap");
  cmd_ef->add_option("--max-total-length", ef.caps.max_total_length,
                     "total word length cap");

  WitnessArgs witness;
  auto* cmd_witness = app.add_subcommand(
      "witness", "Search a pair (u in L, v not in L) the n-round game cannot split");
  cmd_witness->add_option("--alphabet", witness.alphabet_file, "alphabet file")
      ->required();
  cmd_witness->add_option("--nfa", witness.nfa_file, "automaton file")->required();
  cmd_witness->add_option("-n", witness.n, "number of rounds")->required();
  cmd_witness->add_option("--maxlen", witness.maxlen, "word length bound");
  cmd_witness->add_option("--maxlen-cap", witness.maxlen_cap, "length cap");
  cmd_witness->add_option("--max-rounds", witness.caps.max_rounds, "round cap");
  cmd_witness->add_option("--max-total-length", witness.caps.max_total_length,
                          "total word length cap");

  KdemoArgs kdemo;
  auto* cmd_kdemo = app.add_subcommand(
      "kdemo", "Demonstrate the three-predicate counterexample language");
  cmd_kdemo->add_option("-n", kdemo.n, "number of rounds")->required();
  cmd_kdemo->add_option("--max-n", kdemo.max_n, "round cap");
  cmd_kdemo->add_flag("--trace", kdemo.trace, "print a move list");

  ReduceArgs reduce;
  auto* cmd_reduce = app.add_subcommand(
      "reduce", "Machine-run languages: encoding, factors and instances");
  cmd_reduce->add_option("--tm", reduce.tm_file, "machine file")->required();
  cmd_reduce->add_flag("--normalize", reduce.normalize,
                       "normalize state types and print the machine");
  cmd_reduce->add_option("--write", reduce.write_dir,
                         "write alphabet.txt, base.nfa and closed.nfa here");
  auto* opt_check = cmd_reduce->add_option("--check-config", reduce.check_config,
                                           "decode a word as a configuration");
  auto* opt_step = cmd_reduce->add_option("--step", reduce.step_config,
                                          "print the successor configuration");
  auto* opt_merge =
      cmd_reduce->add_option("--merge", reduce.merge_config,
                             "merge a configuration with its successor");
  auto* opt_below =
      cmd_reduce->add_option("--below", reduce.below_word,
                             "list configurations dominated by a word");
  auto* opt_factor = cmd_reduce->add_option(
      "--factor", reduce.factor_word,
      "test whether a short word is a forbidden local factor");
  auto* opt_analyze =
      cmd_reduce->add_option("--analyze", reduce.analyze_word,
                             "report set-types, anchors and ambiguous runs");
  auto* opt_instance = cmd_reduce->add_option(
      "--instance", reduce.instance_n, "build the n-step one-round instance");
  auto* opt_start = cmd_reduce->add_option("--start", reduce.start_config,
                                           "start configuration for --instance");
  opt_instance->needs(opt_start);
  opt_start->needs(opt_instance);

  HeightArgs height;
  auto* cmd_height = app.add_subcommand(
      "height", "Count confined machine steps from a configuration");
  cmd_height->add_option("--tm", height.tm_file, "machine file")->required();
  cmd_height->add_option("--config", height.config, "configuration word")
      ->required();
  cmd_height->add_option("--cap", height.cap, "step cap");
  cmd_height->add_option("--radius", height.radius,
                         "also print the head neighborhood of this radius");

  IntgameArgs intgame;
  IntgameVerifyArgs intgame_verify;
  auto* cmd_intgame =
      app.add_subcommand("intgame", "Abstract integer game on two words");
  cmd_intgame->add_option("-n", intgame.n, "parameter n");
  cmd_intgame->add_option("--u", intgame.u_text, "integer word, e.g. \"1 0\"");
  cmd_intgame->add_option("--v", intgame.v_text,
                          "two-element word, e.g. \"1/0 1/0\"");
  cmd_intgame->add_flag("--mirrored", intgame.mirrored,
                        "use the mirrored endpoint conventions");
  cmd_intgame->add_option("--max-rounds", intgame.max_rounds,
                          "round budget (default 2n)");
  auto* cmd_intgame_verify = cmd_intgame->add_subcommand(
      "verify", "Sweep all valid arenas and check the strategy");
  cmd_intgame_verify->add_option("-n", intgame_verify.n, "parameter n");
  cmd_intgame_verify->add_option("--maxlen", intgame_verify.maxlen,
                                 "word length bound");
  cmd_intgame_verify->add_option("--max-rounds", intgame_verify.max_rounds,
                                 "round budget (default 2n)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_closure->parsed()) {
      closure.have_member = opt_member->count() > 0;
      return run_closure(closure);
    }
    if (cmd_monotone->parsed()) return run_monotone(monotone);
    if (cmd_eval->parsed()) return run_eval(eval);
    if (cmd_lang->parsed()) {
      lang.have_seed = opt_seed->count() > 0;
      return run_lang(lang);
    }
    if (cmd_ef->parsed()) return run_ef(ef);
    if (cmd_witness->parsed()) return run_witness(witness);
    if (cmd_kdemo->parsed()) return run_kdemo(kdemo);
    if (cmd_reduce->parsed()) {
      reduce.have_check = opt_check->count() > 0;
      reduce.have_step = opt_step->count() > 0;
      reduce.have_merge = opt_merge->count() > 0;
      reduce.have_below = opt_below->count() > 0;
      reduce.have_factor = opt_factor->count() > 0;
      reduce.have_analyze = opt_analyze->count() > 0;
      return run_reduce(reduce);
    }
    if (cmd_height->parsed()) return run_height(height);
    if (cmd_intgame->parsed()) {
      if (cmd_intgame_verify->parsed()) return run_intgame_verify(intgame_verify);
      if (intgame.u_text.empty() || intgame.v_text.empty())
        throw std::runtime_error("intgame needs --u and --v (or the verify subcommand)");
      return run_intgame_play(intgame);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
