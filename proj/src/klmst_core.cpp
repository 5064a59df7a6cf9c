#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "graph.hpp"
#include "vasun/klmst.hpp"

namespace vasun::klmst {

using nets::Marking;
using nets::PetriNet;

OmegaMarking omega_of(const Marking& m) { return OmegaMarking(m.begin(), m.end()); }

OmegaMarking all_omega(std::size_t places) { return OmegaMarking(places, OmegaNat::omega()); }

bool leq_omega(const OmegaMarking& u, const OmegaMarking& v) {
  if (u.size() != v.size()) throw StructuralError("leq_omega: dimension mismatch");
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!(u[i] == v[i] || v[i].is_omega())) return false;
  return true;
}

bool leq_omega(const Marking& u, const OmegaMarking& v) { return leq_omega(omega_of(u), v); }

std::optional<OmegaMarking> meet(const OmegaMarking& u, const OmegaMarking& v) {
  if (u.size() != v.size()) throw StructuralError("meet: dimension mismatch");
  OmegaMarking out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_omega())
      out[i] = v[i];
    else if (v[i].is_omega() || u[i] == v[i])
      out[i] = u[i];
    else
      return std::nullopt;
  }
  return out;
}

std::size_t omega_count(const OmegaMarking& m) {
  return static_cast<std::size_t>(std::count_if(m.begin(), m.end(), [](OmegaNat v) { return v.is_omega(); }));
}

std::optional<OmegaMarking> fire_omega(const PetriNet& net, const OmegaMarking& m, std::size_t t) {
  const auto& tr = net.transitions().at(t);
  OmegaMarking out(m);
  for (std::size_t p = 0; p < m.size(); ++p) {
    if (!m[p].covers(tr.pre[p])) return std::nullopt;
    out[p] = m[p].plus(tr.post[p] - tr.pre[p]);
  }
  return out;
}

std::string to_string(const OmegaMarking& m) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
  os << ')';
  return os.str();
}

void PrecoveringGraph::validate(const PetriNet& net) const {
  const std::size_t places = net.place_count();
  if (vertices.empty() || distinguished >= vertices.size())
    throw StructuralError("precovering graph: no distinguished vertex");
  for (const auto& v : vertices)
    if (v.size() != places) throw StructuralError("precovering graph: vertex of wrong dimension");
  detail::Adjacency adj(vertices.size());
  for (const auto& e : edges) {
    if (e.from >= vertices.size() || e.to >= vertices.size() || e.transition >= net.transition_count())
      throw StructuralError("precovering graph: dangling edge");
    adj[e.from].push_back(e.to);
    auto m3 = fire_omega(net, vertices[e.from], e.transition);
    if (!m3 || !leq_omega(*m3, vertices[e.to]))
      throw StructuralError("precovering graph: edge " + std::to_string(e.from) + " -" +
                            net.transitions()[e.transition].name + "-> " + std::to_string(e.to) +
                            " is inconsistent with its labels");
  }
  if (detail::strongly_connected(adj).members.size() != 1)
    throw StructuralError("precovering graph: not strongly connected");
  if (!leq_omega(initial, m()) || !leq_omega(final, m()))
    throw StructuralError("precovering graph: init/fin not below the distinguished vector");
}

void Mgts::validate(const nets::LabeledPetriNet& n) const {
  if (components.empty() || links.size() + 1 != components.size())
    throw StructuralError("MGTS: components and links do not alternate");
  for (const auto& c : components) c.validate(n.net);
  for (auto t : links)
    if (t >= n.net.transition_count()) throw StructuralError("MGTS: unknown link transition");
}

namespace {

std::vector<Symbol> transition_names(const PetriNet& net) {
  std::vector<Symbol> out;
  for (const auto& t : net.transitions()) out.push_back(t.name);
  return out;
}

}  // namespace

automata::Nfa component_language(const PetriNet& net, const PrecoveringGraph& c, std::size_t from, std::size_t to) {
  automata::Nfa a(transition_names(net));
  for (std::size_t v = 0; v < c.vertices.size(); ++v) a.add_state(v == from, v == to);
  for (const auto& e : c.edges) a.add_edge(e.from, net.transitions()[e.transition].name, e.to);
  return a;
}

automata::Nfa component_language(const PetriNet& net, const PrecoveringGraph& c) {
  return component_language(net, c, c.distinguished, c.distinguished);
}

bool mgts_member(const nets::LabeledPetriNet& n, const Mgts& g, const Word& transitions) {
  std::vector<std::size_t> word;
  for (const auto& s : transitions) {
    auto t = n.net.find_transition(s);
    if (!t) return false;
    word.push_back(*t);
  }
  // The concrete marking is determined by the prefix; track the possible
  // (component, vertex) positions.
  const auto& first = g.components.front();
  if (!leq_omega(n.initial, first.initial)) return false;
  Marking mu = n.initial;
  std::set<std::pair<std::size_t, std::size_t>> at{{0, first.distinguished}};
  for (auto t : word) {
    auto next_mu = nets::fire(n.net, mu, t);
    if (!next_mu) return false;
    std::set<std::pair<std::size_t, std::size_t>> next;
    for (auto [j, v] : at) {
      const auto& c = g.components[j];
      for (const auto& e : c.edges)
        if (e.from == v && e.transition == t) next.emplace(j, e.to);
      if (j + 1 < g.components.size() && g.links[j] == t && v == c.distinguished && leq_omega(mu, c.final) &&
          leq_omega(*next_mu, g.components[j + 1].initial))
        next.emplace(j + 1, g.components[j + 1].distinguished);
    }
    if (next.empty()) return false;
    at = std::move(next);
    mu = std::move(*next_mu);
  }
  const std::size_t last = g.components.size() - 1;
  return at.count({last, g.components[last].distinguished}) && leq_omega(mu, g.components[last].final);
}

Mgts initial_mgts(const nets::LabeledPetriNet& n) {
  PrecoveringGraph c;
  c.vertices.push_back(all_omega(n.net.place_count()));
  for (std::size_t t = 0; t < n.net.transition_count(); ++t) c.edges.push_back({0, 0, t});
  c.initial = omega_of(n.initial);
  c.final = omega_of(n.final);
  return Mgts{{c}, {}};
}

PetriNet reverse_net(const PetriNet& net) {
  std::vector<nets::Transition> ts;
  for (const auto& t : net.transitions()) ts.push_back({t.name, t.post, t.pre});
  return PetriNet(net.places(), ts);
}

PrecoveringGraph reverse_component(const PrecoveringGraph& c) {
  PrecoveringGraph r = c;
  for (auto& e : r.edges) std::swap(e.from, e.to);
  std::swap(r.initial, r.final);
  return r;
}

std::vector<RankTuple> rank(const Mgts& g) {
  std::vector<RankTuple> out;
  for (const auto& c : g.components)
    out.push_back({omega_count(c.m()), c.edges.size(), omega_count(c.initial) + omega_count(c.final)});
  return out;
}

bool rank_less(const std::vector<RankTuple>& a, const std::vector<RankTuple>& b) {
  std::multiset<RankTuple> ma(a.begin(), a.end()), mb(b.begin(), b.end());
  if (ma == mb) return false;
  // Remove the common part, then every remaining element of a must be
  // dominated by a remaining element of b.
  std::multiset<RankTuple> ra, rb;
  std::set_difference(ma.begin(), ma.end(), mb.begin(), mb.end(), std::inserter(ra, ra.end()));
  std::set_difference(mb.begin(), mb.end(), ma.begin(), ma.end(), std::inserter(rb, rb.end()));
  if (rb.empty()) return false;
  for (const auto& x : ra)
    if (!std::any_of(rb.begin(), rb.end(), [&](const RankTuple& y) { return x < y; })) return false;
  return true;
}

std::string dump(const nets::LabeledPetriNet& n, const Mgts& g) {
  std::ostringstream os;
  const auto& ts = n.net.transitions();
  for (std::size_t j = 0; j < g.components.size(); ++j) {
    const auto& c = g.components[j];
    if (j > 0) os << "link " << ts[g.links[j - 1]].name << '\n';
    os << "component " << j << '\n';
    for (std::size_t v = 0; v < c.vertices.size(); ++v) os << "  vertex v" << v << ' ' << to_string(c.vertices[v]) << '\n';
    for (const auto& e : c.edges) os << "  v" << e.from << " -" << ts[e.transition].name << "-> v" << e.to << '\n';
    os << "  m=v" << c.distinguished << ' ' << to_string(c.m()) << '\n';
    os << "  init=" << to_string(c.initial) << '\n';
    os << "  fin=" << to_string(c.final) << '\n';
  }
  return os.str();
}

}  // namespace vasun::klmst
