#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "vasun/analyses.hpp"
#include "vasun/predicates.hpp"

namespace vasun::analyses {

namespace {

bool declared(const std::vector<Symbol>& v, const Symbol& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

}  // namespace

void CountingAutomaton::validate() const {
  auto fail = [](const std::string& msg) { throw StructuralError("counting automaton: " + msg); };
  if (initial >= states.size()) fail("initial state undeclared");
  for (auto q : final)
    if (q >= states.size()) fail("final state undeclared");
  if (languages.size() != language_names.size()) fail("one name per check language expected");
  for (const auto& e : edges) {
    if (e.from >= states.size() || e.to >= states.size()) fail("edge refers to an undeclared state");
    if (e.input && !declared(input, *e.input)) fail("input letter '" + *e.input + "' undeclared");
    if (e.op == CaEdge::Op::push && !declared(tape, e.letter)) fail("tape letter '" + e.letter + "' undeclared");
    if (e.op == CaEdge::Op::check && (e.language >= languages.size() || e.counter >= counters.size()))
      fail("check refers to an undeclared language or counter");
  }
  for (const auto& k : languages)
    for (const auto& x : k.alphabet())
      if (!declared(tape, x)) fail("check language uses '" + x + "' outside the tape alphabet");
}

CaConfiguration ca_initial(const CountingAutomaton& a) {
  return {a.initial, {}, std::vector<std::uint64_t>(a.counters.size(), 0)};
}

std::vector<CaConfiguration> ca_step(const CountingAutomaton& a, const CaConfiguration& c,
                                     const std::optional<Symbol>& x) {
  std::vector<CaConfiguration> out;
  for (const auto& e : a.edges) {
    if (e.from != c.state || e.input != x) continue;
    CaConfiguration next = c;
    next.state = e.to;
    switch (e.op) {
      case CaEdge::Op::none:
        break;
      case CaEdge::Op::push:
        next.tape.push_back(e.letter);
        break;
      case CaEdge::Op::check:
        if (automata::accepts(a.languages[e.language], c.tape)) ++next.counters[e.counter];
        next.tape.clear();
        break;
    }
    out.push_back(std::move(next));
  }
  return out;
}

std::uint64_t ca_evaluate(const CountingAutomaton& a, const Word& w, std::size_t max_tape) {
  auto closure = [&](std::set<CaConfiguration> cur) {
    std::vector<CaConfiguration> todo(cur.begin(), cur.end());
    while (!todo.empty()) {
      auto c = std::move(todo.back());
      todo.pop_back();
      for (auto& next : ca_step(a, c, std::nullopt)) {
        if (next.tape.size() > max_tape) throw BudgetError("ca_evaluate: tape longer than " + std::to_string(max_tape));
        if (cur.insert(next).second) todo.push_back(std::move(next));
        if (cur.size() > 1'000'000) throw BudgetError("ca_evaluate: more than 10^6 configurations");
      }
    }
    return cur;
  };
  auto cur = closure({ca_initial(a)});
  for (const auto& x : w) {
    std::set<CaConfiguration> next;
    for (const auto& c : cur)
      for (auto& s : ca_step(a, c, x)) next.insert(std::move(s));
    cur = closure(std::move(next));
  }
  std::uint64_t best = 0;
  for (const auto& c : cur) {
    if (!a.final.count(c.state) || c.counters.empty()) continue;
    best = std::max(best, *std::min_element(c.counters.begin(), c.counters.end()));
  }
  return best;
}

CaCompiled ca_compile(const CountingAutomaton& a) {
  a.validate();
  CaCompiled out;
  std::set<Symbol> used(a.tape.begin(), a.tape.end());
  auto fresh = [&](Symbol s) {
    while (used.count(s)) s = "_" + s;
    used.insert(s);
    return s;
  };
  out.d = fresh("d");
  out.e.resize(a.languages.size());
  for (std::size_t i = 0; i < a.languages.size(); ++i)
    for (const auto& c : a.counters) out.e[i].push_back(fresh("e" + std::to_string(i + 1) + "_" + c));
  out.output.assign(used.begin(), used.end());

  auto& t = out.transducer;
  t.states = a.states.size() + 1;
  t.initial = a.states.size();
  t.final = a.final;
  t.edges.push_back({t.initial, std::nullopt, out.d, a.initial, {}});
  for (const auto& e : a.edges) {
    switch (e.op) {
      case CaEdge::Op::none:
        t.edges.push_back({e.from, e.input, std::nullopt, e.to, {}});
        break;
      case CaEdge::Op::push:
        t.edges.push_back({e.from, e.input, e.letter, e.to, {}});
        break;
      case CaEdge::Op::check: {
        std::size_t mid = t.states++;
        t.edges.push_back({e.from, e.input, out.e[e.language][e.counter], mid, {}});
        t.edges.push_back({mid, std::nullopt, out.d, e.to, {}});
        break;
      }
    }
  }

  for (std::size_t c = 0; c < a.counters.size(); ++c) {
    auto bar = Nfa::empty_language(out.output);
    for (std::size_t i = 0; i < a.languages.size(); ++i) {
      auto k = automata::with_alphabet(a.languages[i], out.output);
      auto piece = automata::concat(automata::concat(Nfa::literal({out.d}, out.output), k),
                                    Nfa::literal({out.e[i][c]}, out.output));
      bar = automata::union_of(bar, piece);
    }
    out.tuple.push_back(automata::trim(bar));
  }
  return out;
}

BoundResult decide_ca_bounded(const nets::LabeledPetriNet& n, const CountingAutomaton& a, const Limits& limits) {
  auto compiled = ca_compile(a);
  if (compiled.tuple.empty()) return {false, 0};
  auto image = synchronize(n, compiled.transducer);
  auto r = klmst::approximate(image.net, limits).union_nfa();
  return predicates::counting_bound(automata::with_alphabet(r, automata::merge_alphabets(r.alphabet(), compiled.output)),
                                    compiled.tuple);
}

CountingAutomaton parse_ca(std::istream& in, const std::string& base_dir) {
  CountingAutomaton a;
  std::map<std::string, std::size_t> state_index, counter_index, language_index;
  bool have_initial = false;
  std::size_t line_no = 0;
  auto state = [&](const std::string& name) {
    auto it = state_index.find(name);
    if (it == state_index.end()) throw ParseError("undeclared state '" + name + "'", line_no);
    return it->second;
  };
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string t; words >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const auto& key = tok[0];
    std::vector<std::string> rest(tok.begin() + 1, tok.end());
    if (key == "states") {
      for (const auto& s : rest) {
        if (!state_index.emplace(s, a.states.size()).second) throw ParseError("duplicate state '" + s + "'", line_no);
        a.states.push_back(s);
      }
    } else if (key == "input") {
      a.input.insert(a.input.end(), rest.begin(), rest.end());
    } else if (key == "tape") {
      a.tape.insert(a.tape.end(), rest.begin(), rest.end());
    } else if (key == "counters") {
      for (const auto& c : rest) {
        if (!counter_index.emplace(c, a.counters.size()).second) throw ParseError("duplicate counter '" + c + "'", line_no);
        a.counters.push_back(c);
      }
    } else if (key == "initial") {
      if (rest.size() != 1) throw ParseError("exactly one initial state expected", line_no);
      a.initial = state(rest[0]);
      have_initial = true;
    } else if (key == "final") {
      for (const auto& s : rest) a.final.insert(state(s));
    } else if (key == "edge") {
      if (rest.size() < 4) throw ParseError("edge: expected 'edge q x op q2'", line_no);
      CaEdge e;
      e.from = state(rest[0]);
      if (rest[1] != "-") {
        if (!declared(a.input, rest[1])) throw ParseError("undeclared input letter '" + rest[1] + "'", line_no);
        e.input = rest[1];
      }
      if (rest[2] == "-" && rest.size() == 4) {
        e.op = CaEdge::Op::none;
      } else if (rest[2] == "push" && rest.size() == 5) {
        e.op = CaEdge::Op::push;
        e.letter = rest[3];
        if (!declared(a.tape, e.letter)) throw ParseError("undeclared tape letter '" + e.letter + "'", line_no);
      } else if (rest[2] == "check" && rest.size() == 6) {
        e.op = CaEdge::Op::check;
        auto [it, fresh] = language_index.try_emplace(rest[3], a.languages.size());
        if (fresh) {
          std::filesystem::path path(rest[3]);
          if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
          a.languages.push_back(automata::load_nfa(path.string()));
          a.language_names.push_back(rest[3]);
        }
        e.language = it->second;
        auto c = counter_index.find(rest[4]);
        if (c == counter_index.end()) throw ParseError("undeclared counter '" + rest[4] + "'", line_no);
        e.counter = c->second;
      } else {
        throw ParseError("edge: unknown operation '" + rest[2] + "'", line_no);
      }
      e.to = state(rest.back());
      a.edges.push_back(std::move(e));
    } else {
      throw ParseError("unknown keyword '" + key + "'", line_no);
    }
  }
  if (!have_initial) throw ParseError("missing initial state", line_no);
  std::sort(a.tape.begin(), a.tape.end());
  try {
    a.validate();
  } catch (const StructuralError& e) {
    throw ParseError(e.what(), line_no);
  }
  return a;
}

CountingAutomaton load_ca(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return parse_ca(in, std::filesystem::path(path).parent_path().string());
}

}  // namespace vasun::analyses
