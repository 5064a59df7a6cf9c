#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace vasun::detail {

using Adjacency = std::vector<std::vector<std::size_t>>;

// Tarjan's algorithm, iterative. Components come out in reverse topological
// order (sinks first); comp[v] indexes into that order.
struct Sccs {
  std::vector<std::size_t> comp;
  std::vector<std::vector<std::size_t>> members;
};

inline Sccs strongly_connected(const Adjacency& adj) {
  const std::size_t n = adj.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  Sccs out;
  out.comp.assign(n, kUnset);
  std::size_t counter = 0;
  std::vector<std::pair<std::size_t, std::size_t>> call;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, i] = call.back();
      if (i == 0) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (i < adj[v].size()) {
        std::size_t w = adj[v][i++];
        if (index[w] == kUnset) {
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<std::size_t> members;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          out.comp[w] = out.members.size();
          members.push_back(w);
        } while (w != v);
        std::sort(members.begin(), members.end());
        out.members.push_back(std::move(members));
      }
      std::size_t done = v;
      call.pop_back();
      if (!call.empty()) {
        std::size_t parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return out;
}

inline std::vector<bool> reachable_from(const Adjacency& adj, const std::vector<std::size_t>& sources) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::size_t> todo;
  for (auto s : sources)
    if (!seen[s]) seen[s] = true, todo.push_back(s);
  while (!todo.empty()) {
    auto v = todo.back();
    todo.pop_back();
    for (auto w : adj[v])
      if (!seen[w]) seen[w] = true, todo.push_back(w);
  }
  return seen;
}

inline Adjacency reversed(const Adjacency& adj) {
  Adjacency r(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v)
    for (auto w : adj[v]) r[w].push_back(v);
  return r;
}

}  // namespace vasun::detail
