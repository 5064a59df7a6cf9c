#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>

#include "graph.hpp"
#include "vasun/automata.hpp"

namespace vasun::automata {

namespace {

std::vector<Symbol> normalized(std::vector<Symbol> alphabet) {
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  return alphabet;
}

void require_same_alphabet(const Nfa& a, const Nfa& b, const char* op) {
  if (a.alphabet() != b.alphabet()) throw StructuralError(std::string(op) + ": alphabet mismatch");
}

// Copies the states and edges of `src` into `dst`, returning the state offset.
State embed(Nfa& dst, const Nfa& src) {
  State offset = dst.state_count();
  for (State q = 0; q < src.state_count(); ++q) dst.add_state();
  for (const auto& e : src.edges()) dst.add_edge_index(e.from + offset, e.letter, e.to + offset);
  return offset;
}

std::vector<State> epsilon_closure(const Nfa& a, const std::vector<std::vector<State>>& eps, std::vector<State> set) {
  std::vector<bool> in(a.state_count(), false);
  for (auto q : set) in[q] = true;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (auto r : eps[set[i]])
      if (!in[r]) in[r] = true, set.push_back(r);
  std::sort(set.begin(), set.end());
  return set;
}

std::vector<std::vector<State>> epsilon_adjacency(const Nfa& a) {
  std::vector<std::vector<State>> eps(a.state_count());
  for (const auto& e : a.edges())
    if (e.letter == Nfa::kEpsilon) eps[e.from].push_back(e.to);
  return eps;
}

detail::Adjacency adjacency(const Nfa& a) {
  detail::Adjacency adj(a.state_count());
  for (const auto& e : a.edges()) adj[e.from].push_back(e.to);
  return adj;
}

}  // namespace

Nfa::Nfa(std::vector<Symbol> alphabet) : alphabet_(normalized(std::move(alphabet))) {}

State Nfa::add_state(bool initial, bool final) {
  initial_.push_back(initial);
  final_.push_back(final);
  names_.emplace_back();
  return initial_.size() - 1;
}

void Nfa::add_edge(State from, const Symbol& letter, State to) {
  auto idx = letter_index(letter);
  if (!idx) throw StructuralError("Nfa: letter '" + letter + "' not in alphabet");
  add_edge_index(from, *idx, to);
}

void Nfa::add_epsilon(State from, State to) { add_edge_index(from, kEpsilon, to); }

void Nfa::add_edge_index(State from, int letter, State to) {
  if (from >= state_count() || to >= state_count()) throw StructuralError("Nfa: edge references unknown state");
  if (letter != kEpsilon && (letter < 0 || static_cast<std::size_t>(letter) >= alphabet_.size()))
    throw StructuralError("Nfa: letter index out of range");
  edges_.push_back({from, letter, to});
}

void Nfa::set_initial(State q, bool on) { initial_.at(q) = on; }
void Nfa::set_final(State q, bool on) { final_.at(q) = on; }

std::vector<State> Nfa::initial_states() const {
  std::vector<State> out;
  for (State q = 0; q < state_count(); ++q)
    if (initial_[q]) out.push_back(q);
  return out;
}

std::vector<State> Nfa::final_states() const {
  std::vector<State> out;
  for (State q = 0; q < state_count(); ++q)
    if (final_[q]) out.push_back(q);
  return out;
}

std::optional<int> Nfa::letter_index(const Symbol& s) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), s);
  if (it == alphabet_.end() || *it != s) return std::nullopt;
  return static_cast<int>(it - alphabet_.begin());
}

std::string Nfa::state_name(State q) const {
  if (!names_.at(q).empty()) return names_[q];
  return "q" + std::to_string(q);
}

void Nfa::set_state_name(State q, std::string name) { names_.at(q) = std::move(name); }

Nfa Nfa::empty_language(std::vector<Symbol> alphabet) { return Nfa(std::move(alphabet)); }

Nfa Nfa::epsilon_language(std::vector<Symbol> alphabet) {
  Nfa a(std::move(alphabet));
  a.add_state(true, true);
  return a;
}

Nfa Nfa::universal(std::vector<Symbol> alphabet) {
  Nfa a(std::move(alphabet));
  State q = a.add_state(true, true);
  for (std::size_t i = 0; i < a.alphabet().size(); ++i) a.add_edge_index(q, static_cast<int>(i), q);
  return a;
}

Nfa Nfa::literal(const Word& w, std::vector<Symbol> alphabet) { return finite({w}, std::move(alphabet)); }

Nfa Nfa::finite(const std::vector<Word>& words, std::vector<Symbol> alphabet) {
  if (alphabet.empty())
    for (const auto& w : words) alphabet.insert(alphabet.end(), w.begin(), w.end());
  Nfa a(std::move(alphabet));
  State start = a.add_state(true, false);
  for (const auto& w : words) {
    State q = start;
    for (const auto& s : w) {
      State r = a.add_state();
      a.add_edge(q, s, r);
      q = r;
    }
    a.set_final(q);
  }
  return a;
}

namespace {

// Thompson construction over one-character letters.
class RegexParser {
 public:
  RegexParser(std::string_view src, Nfa& out) : src_(src), out_(out) {}

  std::pair<State, State> parse() {
    auto frag = alternation();
    if (pos_ != src_.size()) throw StructuralError("regex: unexpected '" + std::string(1, src_[pos_]) + "'");
    return frag;
  }

 private:
  std::pair<State, State> alternation() {
    auto left = sequence();
    while (pos_ < src_.size() && src_[pos_] == '|') {
      ++pos_;
      auto right = sequence();
      State s = out_.add_state(), f = out_.add_state();
      out_.add_epsilon(s, left.first);
      out_.add_epsilon(s, right.first);
      out_.add_epsilon(left.second, f);
      out_.add_epsilon(right.second, f);
      left = {s, f};
    }
    return left;
  }

  std::pair<State, State> sequence() {
    State s = out_.add_state();
    State cur = s;
    while (pos_ < src_.size() && src_[pos_] != '|' && src_[pos_] != ')') {
      auto item = atom();
      while (pos_ < src_.size() && src_[pos_] == '*') {
        ++pos_;
        State hub = out_.add_state();
        out_.add_epsilon(hub, item.first);
        out_.add_epsilon(item.second, hub);
        item = {hub, hub};
      }
      out_.add_epsilon(cur, item.first);
      cur = item.second;
    }
    return {s, cur};
  }

  std::pair<State, State> atom() {
    char c = src_[pos_++];
    if (c == '(') {
      auto inner = alternation();
      if (pos_ >= src_.size() || src_[pos_] != ')') throw StructuralError("regex: missing ')'");
      ++pos_;
      return inner;
    }
    if (c == '*' || c == ')') throw StructuralError("regex: misplaced '" + std::string(1, c) + "'");
    State s = out_.add_state(), f = out_.add_state();
    out_.add_edge(s, std::string(1, c), f);
    return {s, f};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Nfa& out_;
};

}  // namespace

Nfa Nfa::regex(std::string_view expr, std::vector<Symbol> alphabet) {
  if (alphabet.empty())
    for (char c : expr)
      if (c != '(' && c != ')' && c != '|' && c != '*') alphabet.emplace_back(1, c);
  Nfa a(std::move(alphabet));
  RegexParser parser(expr, a);
  auto [s, f] = parser.parse();
  a.set_initial(s);
  a.set_final(f);
  return trim(remove_epsilon(a));
}

std::vector<Symbol> merge_alphabets(const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
  std::vector<Symbol> out(a);
  out.insert(out.end(), b.begin(), b.end());
  return normalized(std::move(out));
}

Nfa with_alphabet(const Nfa& a, const std::vector<Symbol>& alphabet) {
  Nfa out(alphabet);
  for (const auto& s : a.alphabet())
    if (!out.letter_index(s)) throw StructuralError("with_alphabet: letter '" + s + "' dropped");
  for (State q = 0; q < a.state_count(); ++q) {
    out.add_state(a.is_initial(q), a.is_final(q));
    out.set_state_name(q, a.state_name(q));
  }
  for (const auto& e : a.edges()) {
    if (e.letter == Nfa::kEpsilon)
      out.add_epsilon(e.from, e.to);
    else
      out.add_edge(e.from, a.letter(e.letter), e.to);
  }
  return out;
}

Nfa union_of(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a, b, "union");
  Nfa out(a.alphabet());
  State oa = embed(out, a), ob = embed(out, b);
  for (State q = 0; q < a.state_count(); ++q) out.set_initial(q + oa, a.is_initial(q)), out.set_final(q + oa, a.is_final(q));
  for (State q = 0; q < b.state_count(); ++q) out.set_initial(q + ob, b.is_initial(q)), out.set_final(q + ob, b.is_final(q));
  return out;
}

Nfa concat(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a, b, "concat");
  Nfa out(a.alphabet());
  State oa = embed(out, a), ob = embed(out, b);
  for (State q = 0; q < a.state_count(); ++q) out.set_initial(q + oa, a.is_initial(q));
  for (State q = 0; q < b.state_count(); ++q) out.set_final(q + ob, b.is_final(q));
  for (State p : a.final_states())
    for (State r : b.initial_states()) out.add_epsilon(p + oa, r + ob);
  return out;
}

Nfa star(const Nfa& a) {
  Nfa out(a.alphabet());
  State hub = out.add_state(true, true);
  State off = embed(out, a);
  for (State q : a.initial_states()) out.add_epsilon(hub, q + off);
  for (State q : a.final_states()) out.add_epsilon(q + off, hub);
  return out;
}

Nfa intersection(const Nfa& a0, const Nfa& b0) {
  require_same_alphabet(a0, b0, "intersection");
  Nfa a = remove_epsilon(a0), b = remove_epsilon(b0);
  const std::size_t sigma = a.alphabet().size();
  std::vector<std::vector<std::vector<State>>> da(a.state_count(), std::vector<std::vector<State>>(sigma));
  std::vector<std::vector<std::vector<State>>> db(b.state_count(), std::vector<std::vector<State>>(sigma));
  for (const auto& e : a.edges()) da[e.from][static_cast<std::size_t>(e.letter)].push_back(e.to);
  for (const auto& e : b.edges()) db[e.from][static_cast<std::size_t>(e.letter)].push_back(e.to);

  Nfa out(a.alphabet());
  std::map<std::pair<State, State>, State> ids;
  std::deque<std::pair<State, State>> todo;
  auto id_of = [&](State p, State q) {
    auto [it, fresh] = ids.try_emplace({p, q}, 0);
    if (fresh) {
      it->second = out.add_state(false, a.is_final(p) && b.is_final(q));
      todo.emplace_back(p, q);
    }
    return it->second;
  };
  for (State p : a.initial_states())
    for (State q : b.initial_states()) out.set_initial(id_of(p, q));
  while (!todo.empty()) {
    auto [p, q] = todo.front();
    todo.pop_front();
    State from = ids.at({p, q});
    for (std::size_t x = 0; x < sigma; ++x)
      for (State p2 : da[p][x])
        for (State q2 : db[q][x]) out.add_edge_index(from, static_cast<int>(x), id_of(p2, q2));
  }
  return out;
}

Nfa determinize(const Nfa& a, std::size_t max_states) {
  auto eps = epsilon_adjacency(a);
  const std::size_t sigma = a.alphabet().size();
  std::vector<std::vector<std::vector<State>>> delta(a.state_count(), std::vector<std::vector<State>>(sigma));
  for (const auto& e : a.edges())
    if (e.letter != Nfa::kEpsilon) delta[e.from][static_cast<std::size_t>(e.letter)].push_back(e.to);

  Nfa out(a.alphabet());
  std::map<std::vector<State>, State> ids;
  std::vector<std::vector<State>> sets;
  auto id_of = [&](std::vector<State> set) {
    auto [it, fresh] = ids.try_emplace(set, 0);
    if (fresh) {
      if (sets.size() >= max_states)
        throw BudgetError("determinize: more than " + std::to_string(max_states) + " subsets");
      bool fin = std::any_of(set.begin(), set.end(), [&](State q) { return a.is_final(q); });
      it->second = out.add_state(false, fin);
      sets.push_back(std::move(set));
    }
    return it->second;
  };
  out.set_initial(id_of(epsilon_closure(a, eps, a.initial_states())));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t x = 0; x < sigma; ++x) {
      std::vector<State> next;
      for (State q : sets[i])
        for (State r : delta[q][x]) next.push_back(r);
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      State to = id_of(epsilon_closure(a, eps, std::move(next)));
      out.add_edge_index(i, static_cast<int>(x), to);
    }
  }
  return out;
}

Nfa reverse(const Nfa& a) {
  Nfa out(a.alphabet());
  for (State q = 0; q < a.state_count(); ++q) out.add_state(a.is_final(q), a.is_initial(q));
  for (const auto& e : a.edges()) out.add_edge_index(e.to, e.letter, e.from);
  return out;
}

Nfa minimize(const Nfa& a, std::size_t max_states) {
  Nfa back = trim(determinize(reverse(a), max_states));
  return trim(determinize(reverse(back), max_states));
}

Nfa complement(const Nfa& a) {
  Nfa d = determinize(a);
  for (State q = 0; q < d.state_count(); ++q) d.set_final(q, !d.is_final(q));
  return d;
}

Nfa remove_epsilon(const Nfa& a) {
  auto eps = epsilon_adjacency(a);
  Nfa out(a.alphabet());
  std::vector<std::vector<State>> closure(a.state_count());
  for (State q = 0; q < a.state_count(); ++q) {
    closure[q] = epsilon_closure(a, eps, {q});
    bool fin = std::any_of(closure[q].begin(), closure[q].end(), [&](State r) { return a.is_final(r); });
    out.add_state(a.is_initial(q), fin);
    out.set_state_name(q, a.state_name(q));
  }
  std::set<Nfa::Edge> edges;
  for (State q = 0; q < a.state_count(); ++q)
    for (const auto& e : a.edges())
      if (e.letter != Nfa::kEpsilon && std::binary_search(closure[q].begin(), closure[q].end(), e.from))
        edges.insert({q, e.letter, e.to});
  for (const auto& e : edges) out.add_edge_index(e.from, e.letter, e.to);
  return out;
}

Nfa trim(const Nfa& a) {
  auto adj = adjacency(a);
  auto fwd = detail::reachable_from(adj, a.initial_states());
  auto bwd = detail::reachable_from(detail::reversed(adj), a.final_states());
  std::vector<State> id(a.state_count(), static_cast<State>(-1));
  Nfa out(a.alphabet());
  for (State q = 0; q < a.state_count(); ++q) {
    if (!fwd[q] || !bwd[q]) continue;
    id[q] = out.add_state(a.is_initial(q), a.is_final(q));
    out.set_state_name(id[q], a.state_name(q));
  }
  std::set<Nfa::Edge> edges;
  for (const auto& e : a.edges())
    if (id[e.from] != static_cast<State>(-1) && id[e.to] != static_cast<State>(-1))
      edges.insert({id[e.from], e.letter, id[e.to]});
  for (const auto& e : edges) out.add_edge_index(e.from, e.letter, e.to);
  return out;
}

bool is_empty(const Nfa& a) {
  auto seen = detail::reachable_from(adjacency(a), a.initial_states());
  for (State q = 0; q < a.state_count(); ++q)
    if (seen[q] && a.is_final(q)) return false;
  return true;
}

bool is_finite(const Nfa& a) {
  Nfa t = trim(remove_epsilon(a));
  auto sccs = detail::strongly_connected(adjacency(t));
  for (const auto& e : t.edges())
    if (sccs.comp[e.from] == sccs.comp[e.to]) return false;
  return true;
}

bool includes(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a, b, "includes");
  return is_empty(intersection(a, complement(b)));
}

bool equivalent(const Nfa& a, const Nfa& b) { return includes(a, b) && includes(b, a); }

bool accepts(const Nfa& a, const Word& w) {
  auto eps = epsilon_adjacency(a);
  auto cur = epsilon_closure(a, eps, a.initial_states());
  for (const auto& s : w) {
    auto x = a.letter_index(s);
    if (!x) return false;
    std::vector<State> next;
    for (const auto& e : a.edges())
      if (e.letter == *x && std::binary_search(cur.begin(), cur.end(), e.from)) next.push_back(e.to);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cur = epsilon_closure(a, eps, std::move(next));
    if (cur.empty()) return false;
  }
  return std::any_of(cur.begin(), cur.end(), [&](State q) { return a.is_final(q); });
}

std::set<Word, LengthLex> enumerate(const Nfa& a, std::size_t max_len) {
  Nfa d = trim(determinize(a));
  std::set<Word, LengthLex> out;
  if (d.state_count() == 0) return out;
  std::vector<std::vector<std::pair<int, State>>> succ(d.state_count());
  for (const auto& e : d.edges()) succ[e.from].emplace_back(e.letter, e.to);
  Word w;
  std::function<void(State)> walk = [&](State q) {
    if (d.is_final(q)) out.insert(w);
    if (w.size() == max_len) return;
    for (auto [x, r] : succ[q]) {
      w.push_back(d.letter(x));
      walk(r);
      w.pop_back();
    }
  };
  walk(d.initial_states().front());
  return out;
}

std::vector<std::uint64_t> count_words(const Nfa& a, std::size_t max_len) {
  Nfa d = determinize(a);
  std::vector<std::uint64_t> counts(max_len + 1, 0);
  std::vector<std::uint64_t> ways(d.state_count(), 0);
  ways[d.initial_states().front()] = 1;
  auto saturating_add = [](std::uint64_t x, std::uint64_t y) {
    std::uint64_t r;
    return __builtin_add_overflow(x, y, &r) ? UINT64_MAX : r;
  };
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (State q = 0; q < d.state_count(); ++q)
      if (d.is_final(q)) counts[len] = saturating_add(counts[len], ways[q]);
    std::vector<std::uint64_t> next(d.state_count(), 0);
    for (const auto& e : d.edges()) next[e.to] = saturating_add(next[e.to], ways[e.from]);
    ways = std::move(next);
  }
  return counts;
}

std::optional<std::size_t> longest_word_length(const Nfa& a) {
  Nfa t = trim(remove_epsilon(a));
  if (!is_finite(t)) return std::nullopt;
  auto sccs = detail::strongly_connected(adjacency(t));
  // Components are reverse-topological, so every edge goes to a smaller index.
  std::vector<std::size_t> best(t.state_count(), 0);
  std::vector<State> order(t.state_count());
  for (State q = 0; q < t.state_count(); ++q) order[q] = q;
  std::sort(order.begin(), order.end(), [&](State x, State y) { return sccs.comp[x] < sccs.comp[y]; });
  std::vector<std::vector<State>> succ(t.state_count());
  for (const auto& e : t.edges()) succ[e.from].push_back(e.to);
  std::size_t result = 0;
  for (State q : order) {
    for (State r : succ[q]) best[q] = std::max(best[q], best[r] + 1);
    if (t.is_initial(q)) result = std::max(result, best[q]);
  }
  return result;
}

Nfa relabel(const Nfa& a, const std::function<std::optional<Symbol>(const Symbol&)>& h,
            std::vector<Symbol> alphabet) {
  Nfa out(std::move(alphabet));
  for (State q = 0; q < a.state_count(); ++q) out.add_state(a.is_initial(q), a.is_final(q));
  for (const auto& e : a.edges()) {
    if (e.letter == Nfa::kEpsilon) {
      out.add_epsilon(e.from, e.to);
      continue;
    }
    auto img = h(a.letter(e.letter));
    if (img)
      out.add_edge(e.from, *img, e.to);
    else
      out.add_epsilon(e.from, e.to);
  }
  return out;
}

Nfa downward_closure_nfa(const Nfa& a) {
  Nfa out = a;
  for (const auto& e : a.edges())
    if (e.letter != Nfa::kEpsilon) out.add_epsilon(e.from, e.to);
  return out;
}

Nfa factor_language(const Nfa& a) {
  Nfa t = trim(a);
  Nfa out(a.alphabet());
  if (t.state_count() == 0) return out;
  State s = out.add_state(true, false);
  State f = out.add_state(false, true);
  State off = embed(out, t);
  for (State q = 0; q < t.state_count(); ++q) {
    out.add_epsilon(s, q + off);
    out.add_epsilon(q + off, f);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text format

Nfa parse_nfa(std::istream& in) {
  std::vector<std::string> states;
  std::map<std::string, State> state_ids;
  std::vector<Symbol> alphabet;
  bool alphabet_seen = false;
  struct PendingEdge {
    std::string from, letter, to;
    std::size_t line;
  };
  std::vector<PendingEdge> edges;
  std::vector<std::pair<std::string, std::size_t>> initial, final;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& key = tok[0];
    if (key == "states") {
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (state_ids.count(tok[i])) throw ParseError("duplicate state '" + tok[i] + "'", line_no);
        state_ids[tok[i]] = states.size();
        states.push_back(tok[i]);
      }
    } else if (key == "alphabet") {
      alphabet_seen = true;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (tok[i] == "-") throw ParseError("'-' is reserved for ε", line_no);
        alphabet.push_back(tok[i]);
      }
    } else if (key == "edge") {
      if (tok.size() != 4) throw ParseError("edge expects: edge <from> <letter|-> <to>", line_no);
      edges.push_back({tok[1], tok[2], tok[3], line_no});
    } else if (key == "initial" || key == "final") {
      auto& target = key == "initial" ? initial : final;
      for (std::size_t i = 1; i < tok.size(); ++i) target.emplace_back(tok[i], line_no);
    } else {
      throw ParseError("unknown key '" + key + "'", line_no);
    }
  }
  (void)alphabet_seen;
  Nfa a(alphabet);
  for (const auto& name : states) a.set_state_name(a.add_state(), name);
  auto state = [&](const std::string& name, std::size_t line) {
    auto it = state_ids.find(name);
    if (it == state_ids.end()) throw ParseError("undeclared state '" + name + "'", line);
    return it->second;
  };
  for (const auto& e : edges) {
    State p = state(e.from, e.line), q = state(e.to, e.line);
    if (e.letter == "-") {
      a.add_epsilon(p, q);
    } else {
      if (!a.letter_index(e.letter)) throw ParseError("undeclared letter '" + e.letter + "'", e.line);
      a.add_edge(p, e.letter, q);
    }
  }
  for (const auto& [name, line] : initial) a.set_initial(state(name, line));
  for (const auto& [name, line] : final) a.set_final(state(name, line));
  return a;
}

Nfa parse_nfa_string(const std::string& text) {
  std::istringstream in(text);
  return parse_nfa(in);
}

Nfa load_nfa(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_nfa(in);
}

std::string print_nfa(const Nfa& a) {
  std::ostringstream os;
  os << "states";
  for (State q = 0; q < a.state_count(); ++q) os << ' ' << a.state_name(q);
  os << "\nalphabet";
  for (const auto& s : a.alphabet()) os << ' ' << s;
  os << '\n';
  for (const auto& e : a.edges())
    os << "edge " << a.state_name(e.from) << ' ' << (e.letter == Nfa::kEpsilon ? "-" : a.letter(e.letter)) << ' '
       << a.state_name(e.to) << '\n';
  auto list = [&](const char* key, const std::vector<State>& qs) {
    if (qs.empty()) return;
    os << key;
    for (State q : qs) os << ' ' << a.state_name(q);
    os << '\n';
  };
  list("initial", a.initial_states());
  list("final", a.final_states());
  return os.str();
}

std::string to_dot(const Nfa& a, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=LR;\n";
  for (State q = 0; q < a.state_count(); ++q) {
    os << "  " << q << " [label=\"" << a.state_name(q) << "\"" << (a.is_final(q) ? ", shape=doublecircle" : "")
       << "];\n";
    if (a.is_initial(q)) os << "  start" << q << " [shape=point];\n  start" << q << " -> " << q << ";\n";
  }
  for (const auto& e : a.edges())
    os << "  " << e.from << " -> " << e.to << " [label=\"" << (e.letter == Nfa::kEpsilon ? "ε" : a.letter(e.letter))
       << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace vasun::automata
