#include "vasun/nets.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "vasun/automata.hpp"

namespace vasun::nets {

PetriNet::PetriNet(std::vector<std::string> places, std::vector<Transition> transitions)
    : places_(std::move(places)), transitions_(std::move(transitions)) {
  for (std::size_t i = 0; i < places_.size(); ++i)
    if (!place_ids_.emplace(places_[i], i).second) throw StructuralError("duplicate place '" + places_[i] + "'");
  for (std::size_t i = 0; i < transitions_.size(); ++i) {
    auto& t = transitions_[i];
    if (!transition_ids_.emplace(t.name, i).second) throw StructuralError("duplicate transition '" + t.name + "'");
    if (t.pre.empty()) t.pre.assign(places_.size(), 0);
    if (t.post.empty()) t.post.assign(places_.size(), 0);
    if (t.pre.size() != places_.size() || t.post.size() != places_.size())
      throw StructuralError("transition '" + t.name + "' has wrong dimension");
    for (std::size_t p = 0; p < places_.size(); ++p)
      if (t.pre[p] < 0 || t.post[p] < 0) throw StructuralError("transition '" + t.name + "' has a negative count");
  }
}

std::size_t PetriNet::place_index(const std::string& name) const {
  auto it = place_ids_.find(name);
  if (it == place_ids_.end()) throw StructuralError("unknown place '" + name + "'");
  return it->second;
}

std::size_t PetriNet::transition_index(const std::string& name) const {
  auto t = find_transition(name);
  if (!t) throw StructuralError("unknown transition '" + name + "'");
  return *t;
}

std::optional<std::size_t> PetriNet::find_transition(const std::string& name) const {
  auto it = transition_ids_.find(name);
  if (it == transition_ids_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::int64_t> PetriNet::delta(std::size_t t) const {
  const auto& tr = transitions_.at(t);
  std::vector<std::int64_t> d(places_.size());
  for (std::size_t p = 0; p < places_.size(); ++p) d[p] = tr.post[p] - tr.pre[p];
  return d;
}

std::optional<Marking> fire(const PetriNet& net, const Marking& m, std::size_t t) {
  if (t >= net.transition_count()) throw StructuralError("fire: unknown transition index");
  if (m.size() != net.place_count()) throw StructuralError("fire: marking has wrong dimension");
  const auto& tr = net.transitions()[t];
  Marking out(m);
  for (std::size_t p = 0; p < m.size(); ++p) {
    if (m[p] < tr.pre[p]) return std::nullopt;
    out[p] += tr.post[p] - tr.pre[p];
  }
  return out;
}

std::optional<Marking> fire(const PetriNet& net, const Marking& m, const std::string& t) {
  return fire(net, m, net.transition_index(t));
}

void LabeledPetriNet::validate() const {
  if (labels.size() != net.transition_count()) throw StructuralError("labeling is not total");
  if (initial.size() != net.place_count() || final.size() != net.place_count())
    throw StructuralError("initial/final marking has wrong dimension");
  for (auto v : initial)
    if (v < 0) throw StructuralError("negative initial marking");
  for (auto v : final)
    if (v < 0) throw StructuralError("negative final marking");
}

std::vector<Symbol> LabeledPetriNet::alphabet() const {
  std::set<Symbol> s;
  for (const auto& l : labels)
    if (l) s.insert(*l);
  return {s.begin(), s.end()};
}

Word LabeledPetriNet::label_word(const std::vector<std::size_t>& transitions) const {
  Word w;
  for (auto t : transitions)
    if (labels.at(t)) w.push_back(*labels[t]);
  return w;
}

LabeledPetriNet vas_to_net(const Vas& v) {
  std::vector<std::string> places;
  for (std::size_t i = 0; i < v.dimension; ++i) places.push_back("p" + std::to_string(i));
  std::vector<Transition> ts;
  LabeledPetriNet out;
  for (std::size_t i = 0; i < v.transitions.size(); ++i) {
    const auto& vt = v.transitions[i];
    if (vt.delta.size() != v.dimension) throw StructuralError("VAS vector has wrong dimension");
    Transition t{vt.name.empty() ? "t" + std::to_string(i) : vt.name, Marking(v.dimension, 0), Marking(v.dimension, 0)};
    for (std::size_t p = 0; p < v.dimension; ++p) (vt.delta[p] < 0 ? t.pre[p] : t.post[p]) = std::abs(vt.delta[p]);
    ts.push_back(std::move(t));
    out.labels.push_back(vt.label);
  }
  if (v.source.size() != v.dimension || v.target.size() != v.dimension)
    throw StructuralError("VAS source/target has wrong dimension");
  out.net = PetriNet(std::move(places), std::move(ts));
  out.initial = v.source;
  out.final = v.target;
  out.validate();
  return out;
}

namespace {

template <class Step>
std::set<Word, LengthLex> bfs_words(const Marking& start, const Marking& goal, std::size_t n_moves,
                                    std::size_t max_len, std::size_t max_states, bool& cap_hit, Step step) {
  std::set<Word, LengthLex> words;
  std::set<std::pair<Marking, Word>> seen{{start, {}}};
  std::deque<std::pair<Marking, Word>> todo{{start, {}}};
  while (!todo.empty()) {
    auto [m, w] = std::move(todo.front());
    todo.pop_front();
    if (m == goal) words.insert(w);
    for (std::size_t t = 0; t < n_moves; ++t) {
      auto next = step(m, t, cap_hit);
      if (!next) continue;
      Word w2 = w;
      if (next->second) {
        if (w.size() == max_len) continue;
        w2.push_back(*next->second);
      }
      std::pair<Marking, Word> s{std::move(next->first), std::move(w2)};
      if (seen.insert(s).second) {
        if (seen.size() > max_states)
          throw BudgetError("enumerate_language: more than " + std::to_string(max_states) + " states");
        todo.push_back(std::move(s));
      }
    }
  }
  return words;
}

}  // namespace

std::set<Word, LengthLex> enumerate_vas_language(const Vas& v, std::size_t max_len, std::int64_t max_token,
                                                 std::size_t max_states) {
  bool cap_hit = false;
  return bfs_words(v.source, v.target, v.transitions.size(), max_len, max_states, cap_hit,
                   [&](const Marking& m, std::size_t t, bool& hit) -> std::optional<std::pair<Marking, std::optional<Symbol>>> {
                     Marking out(m);
                     for (std::size_t p = 0; p < m.size(); ++p) {
                       out[p] += v.transitions[t].delta[p];
                       if (out[p] < 0) return std::nullopt;
                       if (out[p] > max_token) {
                         hit = true;
                         return std::nullopt;
                       }
                     }
                     return std::make_pair(std::move(out), v.transitions[t].label);
                   });
}

Enumeration enumerate_language(const LabeledPetriNet& n, std::size_t max_len, std::int64_t max_token,
                               std::size_t max_states) {
  n.validate();
  Enumeration out;
  out.words = bfs_words(n.initial, n.final, n.net.transition_count(), max_len, max_states, out.token_cap_hit,
                        [&](const Marking& m, std::size_t t, bool& hit) -> std::optional<std::pair<Marking, std::optional<Symbol>>> {
                          auto next = fire(n.net, m, t);
                          if (!next) return std::nullopt;
                          if (std::any_of(next->begin(), next->end(), [&](auto v) { return v > max_token; })) {
                            hit = true;
                            return std::nullopt;
                          }
                          return std::make_pair(std::move(*next), n.labels[t]);
                        });
  return out;
}

FactorSearch oracle_factors(const LabeledPetriNet& n, const std::vector<Word>& tuple, std::int64_t max_token,
                            std::size_t max_states) {
  n.validate();
  struct Key {
    Marking m;
    std::size_t i;  // factor being matched
    std::size_t j;  // letters of it matched so far
    auto operator<=>(const Key&) const = default;
  };
  struct Node {
    Key key;
    std::size_t parent;
    std::optional<Symbol> letter;
  };
  auto normalize = [&](Key k) {
    while (k.i < tuple.size() && k.j == tuple[k.i].size()) ++k.i, k.j = 0;
    return k;
  };
  FactorSearch out;
  std::vector<Node> nodes;
  std::set<Key> seen;
  auto push = [&](Key k, std::size_t parent, std::optional<Symbol> letter) {
    if (!seen.insert(k).second) return;
    nodes.push_back({std::move(k), parent, std::move(letter)});
  };
  push(normalize({n.initial, 0, 0}), 0, std::nullopt);
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (nodes.size() > max_states) {
      out.status = SearchStatus::budget_exhausted;
      return out;
    }
    Key k = nodes[head].key;
    if (k.i == tuple.size() && k.m == n.final) {
      for (std::size_t v = head; v != 0; v = nodes[v].parent)
        if (nodes[v].letter) out.witness.push_back(*nodes[v].letter);
      std::reverse(out.witness.begin(), out.witness.end());
      out.status = SearchStatus::found;
      return out;
    }
    for (std::size_t t = 0; t < n.net.transition_count(); ++t) {
      auto m2 = fire(n.net, k.m, t);
      if (!m2) continue;
      if (std::any_of(m2->begin(), m2->end(), [&](auto v) { return v > max_token; })) {
        out.token_cap_hit = true;
        continue;
      }
      const auto& label = n.labels[t];
      if (!label) {
        push({*m2, k.i, k.j}, head, std::nullopt);
        continue;
      }
      bool matching = k.i < tuple.size() && tuple[k.i][k.j] == *label;
      if (k.j == 0 || k.i == tuple.size()) push({*m2, k.i, 0}, head, label);  // gap letter
      if (matching) push(normalize({*m2, k.i, k.j + 1}), head, label);
    }
  }
  out.status = out.token_cap_hit ? SearchStatus::budget_exhausted : SearchStatus::not_found;
  return out;
}

std::size_t f_count(const Word& w, const automata::Nfa& k) {
  if (automata::accepts(k, {})) throw PreconditionError("f_count: K must not contain the empty word");
  std::vector<std::size_t> best(w.size() + 1, 0);
  for (std::size_t i = 1; i <= w.size(); ++i) {
    best[i] = best[i - 1];
    for (std::size_t j = 0; j < i; ++j) {
      Word factor(w.begin() + static_cast<std::ptrdiff_t>(j), w.begin() + static_cast<std::ptrdiff_t>(i));
      if (automata::accepts(k, factor)) best[i] = std::max(best[i], best[j] + 1);
    }
  }
  return best.back();
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::int64_t parse_count(const std::string& s, std::size_t line) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("invalid token count '" + s + "'", line);
  if (s.size() > 15) throw ParseError("token count too large '" + s + "'", line);
  return std::stoll(s);
}

}  // namespace

LabeledPetriNet parse_net(std::istream& in) {
  std::vector<std::string> places;
  std::map<std::string, std::size_t> place_ids;
  std::vector<Transition> transitions;
  std::set<std::string> transition_names;
  LabeledPetriNet out;
  std::vector<std::pair<std::string, std::int64_t>> init, fin;

  auto entry = [&](const std::string& tok, std::size_t line) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw ParseError("expected place:count, got '" + tok + "'", line);
    std::string place = tok.substr(0, colon);
    if (!place_ids.count(place)) throw ParseError("undeclared place '" + place + "'", line);
    return std::make_pair(place, parse_count(tok.substr(colon + 1), line));
  };

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
    if (key == "places") {
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (tok[i].find(':') != std::string::npos) throw ParseError("place names cannot contain ':'", line_no);
        if (!place_ids.emplace(tok[i], places.size()).second)
          throw ParseError("duplicate place '" + tok[i] + "'", line_no);
        places.push_back(tok[i]);
      }
    } else if (key == "trans") {
      if (tok.size() < 2) throw ParseError("trans expects a name", line_no);
      if (!transition_names.insert(tok[1]).second) throw ParseError("duplicate transition '" + tok[1] + "'", line_no);
      Transition t{tok[1], {}, {}};
      std::map<std::string, std::int64_t> pre, post;
      std::optional<std::optional<Symbol>> label;
      std::map<std::string, std::int64_t>* section = nullptr;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        if (tok[i] == "pre") {
          section = &pre;
        } else if (tok[i] == "post") {
          section = &post;
        } else if (tok[i] == "label") {
          if (i + 1 >= tok.size()) throw ParseError("label expects a letter or '-'", line_no);
          if (label) throw ParseError("duplicate label", line_no);
          label = tok[i + 1] == "-" ? std::nullopt : std::optional<Symbol>(tok[i + 1]);
          ++i;
          section = nullptr;
        } else if (section) {
          auto [p, c] = entry(tok[i], line_no);
          if (section->count(p)) throw ParseError("place '" + p + "' listed twice", line_no);
          (*section)[p] = c;
        } else {
          throw ParseError("unknown key '" + tok[i] + "'", line_no);
        }
      }
      if (!label) throw ParseError("transition '" + tok[1] + "' has no label", line_no);
      t.pre.assign(places.size(), 0);
      t.post.assign(places.size(), 0);
      for (auto& [p, c] : pre) t.pre[place_ids[p]] = c;
      for (auto& [p, c] : post) t.post[place_ids[p]] = c;
      transitions.push_back(std::move(t));
      out.labels.push_back(*label);
    } else if (key == "init" || key == "final") {
      for (std::size_t i = 1; i < tok.size(); ++i) (key == "init" ? init : fin).push_back(entry(tok[i], line_no));
    } else {
      throw ParseError("unknown key '" + key + "'", line_no);
    }
  }
  // Places declared after a transition widen the earlier vectors with zeros.
  for (auto& t : transitions) {
    t.pre.resize(places.size(), 0);
    t.post.resize(places.size(), 0);
  }
  out.initial.assign(places.size(), 0);
  out.final.assign(places.size(), 0);
  for (auto& [p, c] : init) out.initial[place_ids[p]] += c;
  for (auto& [p, c] : fin) out.final[place_ids[p]] += c;
  out.net = PetriNet(std::move(places), std::move(transitions));
  out.validate();
  return out;
}

LabeledPetriNet parse_net_string(const std::string& text) {
  std::istringstream in(text);
  return parse_net(in);
}

LabeledPetriNet load_net(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_net(in);
}

std::string print_net(const LabeledPetriNet& n) {
  const auto& places = n.net.places();
  std::ostringstream os;
  auto entries = [&](const Marking& m) {
    std::string s;
    for (std::size_t p = 0; p < places.size(); ++p)
      if (m[p] != 0) s += " " + places[p] + ":" + std::to_string(m[p]);
    return s;
  };
  os << "places";
  for (const auto& p : places) os << ' ' << p;
  os << '\n';
  for (std::size_t t = 0; t < n.net.transition_count(); ++t) {
    const auto& tr = n.net.transitions()[t];
    os << "trans " << tr.name;
    if (auto s = entries(tr.pre); !s.empty()) os << " pre" << s;
    if (auto s = entries(tr.post); !s.empty()) os << " post" << s;
    os << " label " << (n.labels[t] ? *n.labels[t] : "-") << '\n';
  }
  os << "init" << entries(n.initial) << '\n';
  os << "final" << entries(n.final) << '\n';
  return os.str();
}

bool operator==(const LabeledPetriNet& a, const LabeledPetriNet& b) {
  if (a.net.places() != b.net.places() || a.labels != b.labels || a.initial != b.initial || a.final != b.final)
    return false;
  const auto& ta = a.net.transitions();
  const auto& tb = b.net.transitions();
  if (ta.size() != tb.size()) return false;
  for (std::size_t i = 0; i < ta.size(); ++i)
    if (ta[i].name != tb[i].name || ta[i].pre != tb[i].pre || ta[i].post != tb[i].post) return false;
  return true;
}

}  // namespace vasun::nets
