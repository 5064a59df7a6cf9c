#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "vasun/klmst.hpp"

namespace vasun::klmst {

using nets::PetriNet;

namespace {

bool below(const OmegaMarking& a, const OmegaMarking& b) {
  for (std::size_t p = 0; p < a.size(); ++p)
    if (!(a[p] <= b[p])) return false;
  return true;
}

// Vertices reachable from the distinguished vertex by reading u.
std::set<std::size_t> walk(const PrecoveringGraph& c, const std::vector<std::size_t>& u) {
  std::set<std::size_t> at{c.distinguished};
  for (auto t : u) {
    std::set<std::size_t> next;
    for (const auto& e : c.edges)
      if (e.transition == t && at.count(e.from)) next.insert(e.to);
    at = std::move(next);
  }
  return at;
}

bool in_language(const PrecoveringGraph& c, const std::vector<std::size_t>& u) {
  return walk(c, u).count(c.distinguished) > 0;
}

}  // namespace

KmGraph coverability_graph(const PetriNet& net, const PrecoveringGraph& c, const OmegaMarking& start,
                           std::size_t max_nodes) {
  KmGraph g;
  std::vector<std::size_t> parent;
  std::map<std::pair<std::size_t, OmegaMarking>, std::size_t> index;
  constexpr std::size_t kRoot = static_cast<std::size_t>(-1);
  auto add = [&](std::size_t vertex, OmegaMarking m, std::size_t from) {
    auto [it, fresh] = index.try_emplace({vertex, m}, g.nodes.size());
    if (fresh) {
      if (g.nodes.size() >= max_nodes)
        throw BudgetError("coverability graph exceeds " + std::to_string(max_nodes) + " nodes");
      g.nodes.push_back({vertex, std::move(m)});
      parent.push_back(from);
    }
    return std::make_pair(it->second, fresh);
  };
  add(c.distinguished, start, kRoot);
  std::deque<std::size_t> todo{0};
  while (!todo.empty()) {
    std::size_t i = todo.front();
    todo.pop_front();
    for (const auto& e : c.edges) {
      if (e.from != g.nodes[i].vertex) continue;
      auto m2 = fire_omega(net, g.nodes[i].marking, e.transition);
      if (!m2) continue;
      for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t a = i; a != kRoot; a = parent[a]) {
          const auto& anc = g.nodes[a];
          if (anc.vertex != e.to || anc.marking == *m2 || !below(anc.marking, *m2)) continue;
          for (std::size_t p = 0; p < m2->size(); ++p)
            if (anc.marking[p] < (*m2)[p] && !(*m2)[p].is_omega()) (*m2)[p] = OmegaNat::omega(), changed = true;
        }
      }
      auto [j, fresh] = add(e.to, std::move(*m2), i);
      g.edges.push_back({i, j, e.transition});
      if (fresh) todo.push_back(j);
    }
  }
  return g;
}

bool is_covering(const PetriNet& net, const PrecoveringGraph& c, const std::vector<std::size_t>& u) {
  if (!in_language(c, u)) return false;
  OmegaMarking m = c.initial;
  std::vector<std::int64_t> delta(net.place_count(), 0);
  for (auto t : u) {
    auto next = fire_omega(net, m, t);
    if (!next) return false;
    m = std::move(*next);
    auto d = net.delta(t);
    for (std::size_t p = 0; p < d.size(); ++p) delta[p] += d[p];
  }
  for (std::size_t p = 0; p < net.place_count(); ++p) {
    if (c.initial[p].is_omega()) continue;
    if (c.m()[p] == c.initial[p] && delta[p] == 0) continue;
    if (c.m()[p].is_omega() && delta[p] > 0) continue;
    return false;
  }
  return true;
}

CoverResult covering_sequence(const PetriNet& net, const PrecoveringGraph& c, const Limits& limits) {
  const std::size_t places = net.place_count();
  const auto& m = c.m();
  auto km = coverability_graph(net, c, c.initial, limits.max_km_nodes);
  bool full = std::any_of(km.nodes.begin(), km.nodes.end(), [&](const KmNode& node) {
    if (node.vertex != c.distinguished) return false;
    for (std::size_t p = 0; p < places; ++p)
      if (m[p].is_omega() && !node.marking[p].is_omega()) return false;
    return true;
  });
  if (!full) return {};

  // Breadth-first search over concrete values on the places where m_init is
  // finite; ω places of m_init are unconstrained.
  std::vector<bool> tracked(places);
  std::vector<std::int64_t> start(places, 0);
  for (std::size_t p = 0; p < places; ++p) {
    tracked[p] = !c.initial[p].is_omega();
    if (tracked[p]) start[p] = c.initial[p].value();
  }
  auto goal = [&](std::size_t v, const std::vector<std::int64_t>& val) {
    if (v != c.distinguished) return false;
    for (std::size_t p = 0; p < places; ++p) {
      if (!tracked[p]) continue;
      if (m[p].is_omega() ? val[p] <= start[p] : val[p] != start[p]) return false;
    }
    return true;
  };
  struct Node {
    std::size_t vertex;
    std::vector<std::int64_t> values;
    std::size_t parent;
    std::size_t transition;
  };
  std::vector<Node> nodes{{c.distinguished, start, 0, 0}};
  std::set<std::pair<std::size_t, std::vector<std::int64_t>>> seen{{c.distinguished, start}};
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (goal(nodes[head].vertex, nodes[head].values)) {
      CoverResult r{CoverStatus::found, {}};
      for (std::size_t i = head; i != 0; i = nodes[i].parent) r.word.push_back(nodes[i].transition);
      std::reverse(r.word.begin(), r.word.end());
      return r;
    }
    for (const auto& e : c.edges) {
      if (e.from != nodes[head].vertex) continue;
      const auto& tr = net.transitions()[e.transition];
      auto val = nodes[head].values;
      bool ok = true;
      for (std::size_t p = 0; p < places && ok; ++p) {
        if (!tracked[p]) continue;
        if (val[p] < tr.pre[p]) ok = false;
        val[p] += tr.post[p] - tr.pre[p];
        if (val[p] > limits.max_token) ok = false;
      }
      if (!ok || !seen.emplace(e.to, val).second) continue;
      if (seen.size() > limits.max_states) throw BudgetError("covering sequence search exceeds the state budget");
      nodes.push_back({e.to, std::move(val), head, e.transition});
    }
  }
  throw BudgetError("covering sequence exists but none was found below the token cap " +
                    std::to_string(limits.max_token));
}

CoverResult backward_covering_sequence(const PetriNet& net, const PrecoveringGraph& c, const Limits& limits) {
  auto r = covering_sequence(reverse_net(net), reverse_component(c), limits);
  std::reverse(r.word.begin(), r.word.end());
  return r;
}

std::vector<std::size_t> covering_with_suffix(const PetriNet& net, const PrecoveringGraph& c,
                                              const std::vector<std::size_t>& s,
                                              const std::vector<std::size_t>& v) {
  if (!is_covering(net, c, s)) throw PreconditionError("covering_with_suffix: s is not a covering sequence");
  if (!in_language(c, v)) throw PreconditionError("covering_with_suffix: v is not in L(C)");
  std::int64_t drop = 0;
  std::vector<std::int64_t> delta(net.place_count(), 0);
  for (auto t : v) {
    auto d = net.delta(t);
    for (std::size_t p = 0; p < d.size(); ++p) {
      delta[p] += d[p];
      if (c.m()[p].is_omega()) drop = std::max(drop, -delta[p]);
    }
  }
  std::vector<std::size_t> out;
  for (std::int64_t i = 0; i < drop + 1; ++i) out.insert(out.end(), s.begin(), s.end());
  out.insert(out.end(), v.begin(), v.end());
  if (!is_covering(net, c, out)) throw std::logic_error("covering_with_suffix: result fails re-validation");
  return out;
}

}  // namespace vasun::klmst
