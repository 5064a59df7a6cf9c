#include <deque>
#include <map>

#include "vasun/klmst.hpp"

namespace vasun::klmst {

using nets::Marking;

namespace {

bool concrete_leq(const Marking& mu, const OmegaMarking& m) {
  for (std::size_t p = 0; p < mu.size(); ++p)
    if (!m[p].is_omega() && m[p].value() != mu[p]) return false;
  return true;
}

}  // namespace

std::optional<std::vector<std::size_t>> iteration_witness(const nets::LabeledPetriNet& n, const Mgts& g,
                                                          const std::vector<std::vector<std::size_t>>& factors,
                                                          const Limits& limits) {
  if (factors.size() != g.components.size())
    throw PreconditionError("iteration_witness: expected " + std::to_string(g.components.size()) + " factors");
  std::vector<std::vector<std::size_t>> forced;
  for (std::size_t j = 0; j < g.components.size(); ++j) {
    auto s = covering_sequence(n.net, g.components[j], limits);
    if (s.status != CoverStatus::found) throw PreconditionError("iteration_witness: the MGTS is not perfect");
    forced.push_back(covering_with_suffix(n.net, g.components[j], s.word, factors[j]));
  }

  struct State {
    std::size_t component, pos, vertex;
    Marking mu;
    auto operator<=>(const State&) const = default;
  };
  struct Back {
    std::size_t parent;
    std::size_t transition;
  };
  const auto& first = g.components.front();
  if (!concrete_leq(n.initial, first.initial)) return std::nullopt;

  std::vector<State> states;
  std::vector<Back> back;
  std::map<State, std::size_t> seen;
  std::deque<std::size_t> todo;
  auto push = [&](State s, std::size_t parent, std::size_t t) {
    for (auto v : s.mu)
      if (v > static_cast<std::int64_t>(limits.max_token)) return;
    auto [it, fresh] = seen.try_emplace(s, states.size());
    if (!fresh) return;
    if (states.size() >= limits.max_states)
      throw BudgetError("iteration_witness: more than " + std::to_string(limits.max_states) + " states");
    states.push_back(std::move(s));
    back.push_back({parent, t});
    todo.push_back(states.size() - 1);
  };
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  push({0, 0, first.distinguished, n.initial}, kNone, kNone);

  while (!todo.empty()) {
    std::size_t i = todo.front();
    todo.pop_front();
    const State s = states[i];
    const auto& c = g.components[s.component];
    const auto& x = forced[s.component];
    bool free = s.pos == x.size();
    if (free && s.vertex == c.distinguished && concrete_leq(s.mu, c.final)) {
      if (s.component + 1 == g.components.size()) {
        std::vector<std::size_t> word;
        for (std::size_t k = i; back[k].parent != kNone; k = back[k].parent) word.push_back(back[k].transition);
        return std::vector<std::size_t>(word.rbegin(), word.rend());
      }
      std::size_t t = g.links[s.component];
      if (auto mu = nets::fire(n.net, s.mu, t)) {
        const auto& next = g.components[s.component + 1];
        if (concrete_leq(*mu, next.initial)) push({s.component + 1, 0, next.distinguished, *mu}, i, t);
      }
    }
    for (const auto& e : c.edges) {
      if (e.from != s.vertex || (!free && e.transition != x[s.pos])) continue;
      if (auto mu = nets::fire(n.net, s.mu, e.transition))
        push({s.component, free ? s.pos : s.pos + 1, e.to, *mu}, i, e.transition);
    }
  }
  return std::nullopt;
}

std::vector<automata::Nfa> transition_row(const nets::LabeledPetriNet& n, const Mgts& g) {
  std::vector<automata::Nfa> row;
  for (std::size_t j = 0; j < g.components.size(); ++j) {
    if (j > 0) {
      const auto& name = n.net.transitions().at(g.links[j - 1]).name;
      std::vector<Symbol> names;
      for (const auto& t : n.net.transitions()) names.push_back(t.name);
      row.push_back(automata::Nfa::literal({name}, names));
    }
    row.push_back(component_language(n.net, g.components[j]));
  }
  return row;
}

automata::Nfa RegularApproximation::union_nfa() const {
  auto out = automata::Nfa::empty_language(alphabet);
  for (const auto& row : rows) {
    auto word = automata::Nfa::epsilon_language(alphabet);
    for (const auto& factor : row) word = automata::concat(word, factor);
    out = automata::union_of(out, word);
  }
  try {
    return automata::minimize(out, 4096);
  } catch (const BudgetError&) {
    return automata::trim(automata::remove_epsilon(out));
  }
}

RegularApproximation approximate(const nets::LabeledPetriNet& n, const Limits& limits) {
  auto d = decompose(n, limits);
  RegularApproximation r;
  r.alphabet = n.alphabet();
  std::map<Symbol, std::optional<Symbol>> h;
  for (std::size_t t = 0; t < n.net.transition_count(); ++t) h[n.net.transitions()[t].name] = n.labels[t];
  for (auto& g : d.perfect) {
    std::vector<automata::Nfa> row;
    for (const auto& f : transition_row(n, g)) row.push_back(automata::relabel(f, [&](const Symbol& t) { return h.at(t); }, r.alphabet));
    r.width = std::max(r.width, row.size());
    r.rows.push_back(std::move(row));
    r.sources.push_back(std::move(g));
  }
  for (auto& row : r.rows)
    while (row.size() < r.width) row.push_back(automata::Nfa::epsilon_language(r.alphabet));
  return r;
}

}  // namespace vasun::klmst
