#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>

#include "graph.hpp"
#include "vasun/automata.hpp"

namespace vasun::automata {

namespace {

detail::Adjacency adjacency(const Nfa& a) {
  detail::Adjacency adj(a.state_count());
  for (const auto& e : a.edges()) adj[e.from].push_back(e.to);
  return adj;
}

Word primitive_root(const Word& u) {
  for (std::size_t p = 1; p <= u.size(); ++p) {
    if (u.size() % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < u.size() && ok; ++i) ok = u[i] == u[i - p];
    if (ok) return Word(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(p));
  }
  return u;
}

Word rotate(const Word& w, std::size_t by) {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w[(i + by) % w.size()]);
  return out;
}

}  // namespace

std::string BoundedWitness::expression() const {
  if (words.empty()) return "ε";
  std::string out;
  for (const auto& w : words) {
    bool single = w.size() == 1 && w[0].size() == 1;
    out += single ? to_string(w) + "*" : "(" + to_string(w) + ")*";
  }
  return out;
}

Nfa BoundedWitness::automaton(const std::vector<Symbol>& alphabet) const {
  Nfa out = Nfa::epsilon_language(alphabet);
  for (const auto& w : words) out = concat(out, star(Nfa::literal(w, alphabet)));
  return out;
}

BoundedWitness is_bounded_regular(const Nfa& a) {
  Nfa t = trim(remove_epsilon(a));
  BoundedWitness out;
  auto sccs = detail::strongly_connected(adjacency(t));
  const std::size_t comps = sccs.members.size();

  std::vector<Word> root(comps);
  std::vector<std::size_t> pos(t.state_count(), 0);
  std::vector<std::vector<std::pair<std::size_t, int>>> internal(t.state_count());
  for (std::size_t i = 0; i < t.edges().size(); ++i) {
    const auto& e = t.edges()[i];
    if (sccs.comp[e.from] == sccs.comp[e.to]) internal[e.from].emplace_back(i, e.letter);
  }
  for (std::size_t c = 0; c < comps; ++c) {
    State r = sccs.members[c].front();
    // BFS tree from r inside the component.
    std::map<State, std::size_t> dist;
    std::map<State, std::size_t> via;  // edge index
    std::deque<State> todo{r};
    dist[r] = 0;
    bool has_internal = false;
    std::optional<std::size_t> closing;
    while (!todo.empty()) {
      State s = todo.front();
      todo.pop_front();
      for (auto [ei, letter] : internal[s]) {
        has_internal = true;
        State to = t.edges()[ei].to;
        if (to == r) {
          if (!closing || dist[s] + 1 < dist[t.edges()[*closing].from] + 1) closing = ei;
        } else if (!dist.count(to)) {
          dist[to] = dist[s] + 1;
          via[to] = ei;
          todo.push_back(to);
        }
      }
    }
    if (!has_internal) continue;
    Word cycle{t.letter(t.edges()[*closing].letter)};
    for (State s = t.edges()[*closing].from; s != r; s = t.edges()[via[s]].from)
      cycle.push_back(t.letter(t.edges()[via[s]].letter));
    std::reverse(cycle.begin(), cycle.end());
    root[c] = primitive_root(cycle);
    const std::size_t p = root[c].size();
    for (auto [s, d] : dist) pos[s] = d % p;
    for (auto [s, d] : dist)
      for (auto [ei, letter] : internal[s]) {
        State to = t.edges()[ei].to;
        if (t.letter(letter) != root[c][pos[s]] || pos[to] != (pos[s] + 1) % p) return out;
      }
  }
  out.bounded = true;

  std::vector<std::set<std::size_t>> entries(comps), exits(comps);
  std::vector<std::set<Symbol>> connectors(comps);
  for (State q = 0; q < t.state_count(); ++q) {
    if (t.is_initial(q)) entries[sccs.comp[q]].insert(pos[q]);
    if (t.is_final(q)) exits[sccs.comp[q]].insert(pos[q]);
  }
  for (const auto& e : t.edges()) {
    std::size_t cf = sccs.comp[e.from], ct = sccs.comp[e.to];
    if (cf == ct) continue;
    exits[cf].insert(pos[e.from]);
    entries[ct].insert(pos[e.to]);
    connectors[cf].insert(t.letter(e.letter));
  }
  auto emit = [&](Word w) {
    if (out.words.empty() || out.words.back() != w) out.words.push_back(std::move(w));
  };
  // Tarjan numbers components sinks first.
  for (std::size_t c = comps; c-- > 0;) {
    const std::size_t p = root[c].size();
    if (p > 0) {
      for (auto i : entries[c]) {
        Word rho = rotate(root[c], i);
        emit(rho);
        std::size_t longest = 0;
        for (auto j : exits[c]) longest = std::max(longest, (j + p - i) % p);
        for (std::size_t k = 0; k < longest; ++k) emit({rho[k]});
      }
    }
    for (const auto& x : connectors[c]) emit({x});
  }
  return out;
}

bool chain_inclusion(const std::vector<Symbol>& letters, const Nfa& a) {
  auto alphabet = merge_alphabets(a.alphabet(), letters);
  Nfa chain = Nfa::epsilon_language(alphabet);
  for (const auto& x : letters) chain = concat(chain, star(Nfa::literal({x}, alphabet)));
  return includes(chain, with_alphabet(downward_closure_nfa(a), alphabet));
}

bool RegularFactorOracle::intersects(const Nfa& a) const {
  auto alphabet = merge_alphabets(a.alphabet(), k_.alphabet());
  return !is_empty(intersection(with_alphabet(k_, alphabet), with_alphabet(a, alphabet)));
}

Nfa c_edge_automaton(const Nfa& a, const FactorOracle& oracle, CEdgeMode mode) {
  Nfa t = trim(a);
  Nfa out({kMarker});
  for (State q = 0; q < t.state_count(); ++q) out.add_state(t.is_initial(q), t.is_final(q));
  auto adj = adjacency(t);
  for (State p = 0; p < t.state_count(); ++p) {
    auto reach = detail::reachable_from(adj, {p});
    for (State q = 0; q < t.state_count(); ++q) {
      if (!reach[q]) continue;
      Nfa between = t;
      for (State s = 0; s < t.state_count(); ++s) {
        between.set_initial(s, s == p);
        between.set_final(s, s == q);
      }
      if (oracle.intersects(between)) out.add_edge(p, kMarker, q);
    }
  }
  if (mode == CEdgeMode::erase)
    for (const auto& e : t.edges()) out.add_epsilon(e.from, e.to);
  return out;
}

BoundResult factor_unbounded_regular(const Nfa& a, const FactorOracle& oracle) {
  Nfa b = c_edge_automaton(a, oracle, CEdgeMode::erase);
  if (includes(Nfa::universal({kMarker}), b)) return {true, 0};
  auto longest = longest_word_length(b);
  if (!longest) throw std::logic_error("factor_unbounded_regular: marker language neither c* nor finite");
  return {false, *longest};
}

bool factor_universal_regular(const Nfa& a, const FactorOracle& oracle) {
  auto alphabet = merge_alphabets(a.alphabet(), oracle.alphabet());
  Nfa outside = complement(with_alphabet(factor_language(a), alphabet));
  return is_empty(c_edge_automaton(outside, oracle, CEdgeMode::remove));
}

BoundResult simultaneous_unbounded(const Nfa& a) {
  std::vector<std::vector<std::size_t>> contributions;
  for (std::size_t i = 0; i < a.alphabet().size(); ++i) contributions.push_back({i});
  return simultaneous_unbounded(a, contributions, a.alphabet().size());
}

BoundResult simultaneous_unbounded(const Nfa& a, const std::vector<std::vector<std::size_t>>& contributions,
                                   std::size_t counters) {
  if (contributions.size() != a.alphabet().size())
    throw StructuralError("simultaneous_unbounded: one contribution list per letter expected");
  if (counters > 64) throw StructuralError("simultaneous_unbounded: at most 64 counters");
  Nfa t = trim(remove_epsilon(a));
  if (counters == 0 || t.state_count() == 0) return {false, 0};

  std::vector<std::uint64_t> letter_mask(contributions.size(), 0);
  for (std::size_t x = 0; x < contributions.size(); ++x)
    for (auto i : contributions[x]) {
      if (i >= counters) throw StructuralError("simultaneous_unbounded: counter index out of range");
      letter_mask[x] |= std::uint64_t{1} << i;
    }
  const std::uint64_t full = counters == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << counters) - 1;

  auto sccs = detail::strongly_connected(adjacency(t));
  const std::size_t comps = sccs.members.size();
  std::vector<std::uint64_t> cyclic(comps, 0);
  for (const auto& e : t.edges())
    if (sccs.comp[e.from] == sccs.comp[e.to]) cyclic[sccs.comp[e.from]] |= letter_mask[static_cast<std::size_t>(e.letter)];
  std::vector<std::set<std::uint64_t>> reach(comps);
  for (State q : t.initial_states()) reach[sccs.comp[q]].insert(cyclic[sccs.comp[q]]);
  std::vector<std::vector<std::size_t>> succ(comps);
  for (const auto& e : t.edges())
    if (sccs.comp[e.from] != sccs.comp[e.to]) succ[sccs.comp[e.from]].push_back(sccs.comp[e.to]);
  for (std::size_t c = comps; c-- > 0;)
    for (auto d : succ[c])
      for (auto m : reach[c]) reach[d].insert(m | cyclic[d]);
  for (State q : t.final_states())
    if (reach[sccs.comp[q]].count(full)) return {true, 0};

  std::vector<std::vector<std::pair<int, State>>> out_edges(t.state_count());
  for (const auto& e : t.edges()) out_edges[e.from].emplace_back(e.letter, e.to);
  // Largest b such that some accepted word has every counter ≥ b.
  for (std::size_t b = 1;; ++b) {
    std::set<std::pair<State, std::vector<std::size_t>>> seen;
    std::deque<std::pair<State, std::vector<std::size_t>>> todo;
    for (State q : t.initial_states()) {
      std::pair<State, std::vector<std::size_t>> s{q, std::vector<std::size_t>(counters, 0)};
      if (seen.insert(s).second) todo.push_back(s);
    }
    bool reached = false;
    while (!todo.empty() && !reached) {
      auto [q, cnt] = todo.front();
      todo.pop_front();
      if (t.is_final(q) && std::all_of(cnt.begin(), cnt.end(), [&](std::size_t v) { return v >= b; })) {
        reached = true;
        break;
      }
      for (auto [x, r] : out_edges[q]) {
        auto next = cnt;
        for (auto i : contributions[static_cast<std::size_t>(x)]) next[i] = std::min(b, next[i] + 1);
        std::pair<State, std::vector<std::size_t>> s{r, std::move(next)};
        if (seen.insert(s).second) todo.push_back(std::move(s));
      }
    }
    if (!reached) return {false, b - 1};
  }
}

}  // namespace vasun::automata
