#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "graph.hpp"
#include "vasun/klmst.hpp"

namespace vasun::klmst {

namespace {

// A labeled graph whose strongly connected pieces become components.
struct LabeledGraph {
  std::vector<OmegaMarking> labels;
  std::vector<PgEdge> edges;
};

struct Chain {
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> links;  // transitions between consecutive nodes
};

class ChainBuilder {
 public:
  ChainBuilder(const LabeledGraph& g, const Limits& limits) : g_(g), limits_(limits) {
    detail::Adjacency adj(g.labels.size());
    for (const auto& e : g.edges) adj[e.from].push_back(e.to);
    sccs_ = detail::strongly_connected(adj);
  }

  /// Every simple path from `source` to a node satisfying `target`.
  std::vector<Chain> simple_paths(std::size_t source, const std::function<bool(std::size_t)>& target) const {
    std::vector<Chain> out;
    Chain cur{{source}, {}};
    std::vector<bool> on_path(g_.labels.size(), false);
    on_path[source] = true;
    std::function<void()> go = [&] {
      std::size_t v = cur.nodes.back();
      if (target(v)) {
        out.push_back(cur);
        if (out.size() > limits_.max_chains)
          throw BudgetError("refine: more than " + std::to_string(limits_.max_chains) + " chains");
      }
      for (const auto& e : g_.edges) {
        if (e.from != v || on_path[e.to]) continue;
        on_path[e.to] = true;
        cur.nodes.push_back(e.to);
        cur.links.push_back(e.transition);
        go();
        cur.nodes.pop_back();
        cur.links.pop_back();
        on_path[e.to] = false;
      }
    };
    go();
    return out;
  }

  /// The strongly connected piece of `node` with `node` distinguished.
  PrecoveringGraph component_at(std::size_t node) const {
    PrecoveringGraph c;
    const auto& members = sccs_.members[sccs_.comp[node]];
    std::vector<std::size_t> local(g_.labels.size(), static_cast<std::size_t>(-1));
    for (auto v : members) {
      local[v] = c.vertices.size();
      c.vertices.push_back(g_.labels[v]);
    }
    for (const auto& e : g_.edges)
      if (local[e.from] != static_cast<std::size_t>(-1) && local[e.to] != static_cast<std::size_t>(-1))
        c.edges.push_back({local[e.from], local[e.to], e.transition});
    c.distinguished = local[node];
    c.initial = c.final = g_.labels[node];
    return c;
  }

 private:
  const LabeledGraph& g_;
  const Limits& limits_;
  detail::Sccs sccs_;
};

struct Piece {
  std::vector<PrecoveringGraph> components;
  std::vector<std::size_t> links;

  void append(const Piece& other, std::optional<std::size_t> joint) {
    if (joint) links.push_back(*joint);
    components.insert(components.end(), other.components.begin(), other.components.end());
    links.insert(links.end(), other.links.begin(), other.links.end());
  }
};

Piece to_piece(const ChainBuilder& builder, const Chain& chain) {
  Piece p;
  for (auto v : chain.nodes) p.components.push_back(builder.component_at(v));
  p.links = chain.links;
  return p;
}

Mgts splice(const Mgts& g, std::size_t j, const Piece& piece) {
  Mgts out;
  out.components.assign(g.components.begin(), g.components.begin() + static_cast<std::ptrdiff_t>(j));
  out.links.assign(g.links.begin(), g.links.begin() + static_cast<std::ptrdiff_t>(j));
  out.components.insert(out.components.end(), piece.components.begin(), piece.components.end());
  out.links.insert(out.links.end(), piece.links.begin(), piece.links.end());
  out.components.insert(out.components.end(), g.components.begin() + static_cast<std::ptrdiff_t>(j + 1),
                        g.components.end());
  out.links.insert(out.links.end(), g.links.begin() + static_cast<std::ptrdiff_t>(j), g.links.end());
  return out;
}

Piece reversed(const Piece& p) {
  Piece r;
  for (auto it = p.components.rbegin(); it != p.components.rend(); ++it) r.components.push_back(reverse_component(*it));
  r.links.assign(p.links.rbegin(), p.links.rend());
  return r;
}

// Runs through c decompose along the coverability graph: closed walks at the
// nodes of a simple path from the root, joined by the path's edges.
std::vector<Piece> coverability_pieces(const nets::PetriNet& net, const PrecoveringGraph& c, const Limits& limits) {
  auto km = coverability_graph(net, c, c.initial, limits.max_km_nodes);
  LabeledGraph lg;
  for (const auto& node : km.nodes) lg.labels.push_back(node.marking);
  lg.edges = km.edges;
  ChainBuilder builder(lg, limits);
  std::vector<Piece> out;
  auto chains = builder.simple_paths(0, [&](std::size_t v) {
    return km.nodes[v].vertex == c.distinguished && meet(c.final, km.nodes[v].marking).has_value();
  });
  for (const auto& chain : chains) {
    Piece p = to_piece(builder, chain);
    p.components.front().initial = c.initial;
    p.components.back().final = *meet(c.final, km.nodes[chain.nodes.back()].marking);
    out.push_back(std::move(p));
  }
  return out;
}

// Runs through c using edge `edge` exactly `times` times.
std::vector<Piece> edge_pieces(const PrecoveringGraph& c, std::size_t edge, std::size_t times, const Limits& limits) {
  LabeledGraph lg;
  lg.labels = c.vertices;
  for (std::size_t e = 0; e < c.edges.size(); ++e)
    if (e != edge) lg.edges.push_back(c.edges[e]);
  ChainBuilder builder(lg, limits);
  const std::size_t m = c.distinguished, src = c.edges[edge].from, dst = c.edges[edge].to;
  const std::size_t t = c.edges[edge].transition;

  auto segment = [&](std::size_t from, std::size_t to) {
    std::vector<Piece> out;
    for (const auto& chain : builder.simple_paths(from, [&](std::size_t v) { return v == to; }))
      out.push_back(to_piece(builder, chain));
    return out;
  };
  std::vector<Piece> partial;
  if (times == 0) {
    partial = segment(m, m);
  } else {
    partial = segment(m, src);
    auto middle = segment(dst, src);
    for (std::size_t i = 1; i < times; ++i) {
      std::vector<Piece> next;
      for (const auto& a : partial)
        for (const auto& b : middle) {
          Piece p = a;
          p.append(b, t);
          next.push_back(std::move(p));
          if (next.size() > limits.max_chains) throw BudgetError("refine: too many edge unfoldings");
        }
      partial = std::move(next);
    }
    std::vector<Piece> next;
    for (const auto& a : partial)
      for (const auto& b : segment(dst, m)) {
        Piece p = a;
        p.append(b, t);
        next.push_back(std::move(p));
        if (next.size() > limits.max_chains) throw BudgetError("refine: too many edge unfoldings");
      }
    partial = std::move(next);
  }
  for (auto& p : partial) {
    p.components.front().initial = c.initial;
    p.components.back().final = c.final;
  }
  return partial;
}

}  // namespace

std::vector<Mgts> refine(const nets::LabeledPetriNet& n, const Mgts& g, const Defect& defect, const Limits& limits) {
  std::vector<Mgts> out;
  switch (defect.kind) {
    case Defect::Kind::forward_cover: {
      const auto& c = g.components.at(defect.component);
      for (const auto& piece : coverability_pieces(n.net, c, limits)) out.push_back(splice(g, defect.component, piece));
      break;
    }
    case Defect::Kind::backward_cover: {
      const auto& c = g.components.at(defect.component);
      for (const auto& piece : coverability_pieces(reverse_net(n.net), reverse_component(c), limits))
        out.push_back(splice(g, defect.component, reversed(piece)));
      break;
    }
    case Defect::Kind::unsolvable:
      break;
    case Defect::Kind::bounded_edge: {
      const auto& c = g.components.at(defect.variable.component);
      for (const auto& value : defect.values)
        for (const auto& piece : edge_pieces(c, defect.variable.index, static_cast<std::size_t>(value), limits))
          out.push_back(splice(g, defect.variable.component, piece));
      break;
    }
    case Defect::Kind::bounded_link: {
      const auto& var = defect.variable;
      const std::size_t p = var.index;
      for (const auto& value : defect.values) {
        Mgts copy = g;
        auto v = static_cast<std::int64_t>(value);
        if (var.kind == CharVariable::Kind::link) {
          const auto& tr = n.net.transitions().at(g.links.at(var.component));
          copy.components[var.component].final[p] = v + tr.pre[p];
          copy.components[var.component + 1].initial[p] = v + tr.post[p];
        } else if (var.entry) {
          copy.components.front().initial[p] = v;
        } else {
          copy.components.back().final[p] = v;
        }
        out.push_back(std::move(copy));
      }
      break;
    }
  }
  return out;
}

Decomposition decompose(const nets::LabeledPetriNet& n, const Limits& limits, const RefineObserver& observer) {
  Decomposition d;
  std::deque<Mgts> todo{initial_mgts(n)};
  std::set<std::string> seen{dump(n, todo.front())};
  std::set<std::string> kept;
  while (!todo.empty()) {
    Mgts g = std::move(todo.front());
    todo.pop_front();
    if (++d.processed > limits.max_worklist)
      throw BudgetError("decompose: processed " + std::to_string(limits.max_worklist) + " MGTS, " +
                        std::to_string(d.perfect.size()) + " perfect so far");
    auto report = is_perfect(n, g, limits);
    if (report.perfect()) {
      if (kept.insert(dump(n, g)).second) d.perfect.push_back(std::move(g));
      continue;
    }
    auto children = refine(n, g, *report.defect, limits);
    ++d.refinements;
    if (observer) observer(g, *report.defect, children);
    const auto parent_rank = rank(g);
    for (auto& child : children) {
      child.validate(n);
      if (!rank_less(rank(child), parent_rank))
        throw std::logic_error("decompose: refinement did not decrease the rank (" + report.defect->describe(n) + ")");
      if (seen.insert(dump(n, child)).second) todo.push_back(std::move(child));
    }
  }
  if (limits.usage) {
    limits.usage->mgts_processed += d.processed;
    limits.usage->refinements += d.refinements;
    limits.usage->perfect += d.perfect.size();
  }
  return d;
}

}  // namespace vasun::klmst
