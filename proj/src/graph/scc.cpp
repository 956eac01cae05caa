/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "splforge/graph/scc.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <queue>

namespace splforge::graph {

std::vector<std::vector<std::size_t>> stronglyConnectedComponents(const Adjacency& adjacency) {
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  const std::size_t n = adjacency.size();
  std::vector<std::size_t> index(n, kUnvisited);
  std::vector<std::size_t> lowlink(n, 0);
  std::vector<bool> onStack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t nextIndex = 0;

  struct Frame {
    std::size_t vertex;
    std::size_t edge;
  };
  std::vector<Frame> calls;

  for (std::size_t start = 0; start < n; ++start) {
    if (index[start] != kUnvisited) {
      continue;
    }
    calls.push_back({start, 0});
    index[start] = lowlink[start] = nextIndex++;
    stack.push_back(start);
    onStack[start] = true;

    while (!calls.empty()) {
      Frame& frame = calls.back();
      const std::size_t v = frame.vertex;
      if (frame.edge < adjacency[v].size()) {
        const std::size_t w = adjacency[v][frame.edge++];
        if (index[w] == kUnvisited) {
          index[w] = lowlink[w] = nextIndex++;
          stack.push_back(w);
          onStack[w] = true;
          calls.push_back({w, 0});
        } else if (onStack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
        continue;
      }
      if (lowlink[v] == index[v]) {
        std::vector<std::size_t> component;
        std::size_t w = 0;
        do {
          w = stack.back();
          stack.pop_back();
          onStack[w] = false;
          component.push_back(w);
        } while (w != v);
        components.push_back(std::move(component));
      }
      calls.pop_back();
      if (!calls.empty()) {
        const std::size_t parent = calls.back().vertex;
        lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
      }
    }
  }
  return components;
}

namespace {

struct IndexedGraph {
  std::vector<std::string> names;
  Adjacency adjacency;
};

IndexedGraph index(const std::set<std::string>& nodes, const NamedEdges& edges) {
  IndexedGraph g;
  g.names.assign(nodes.begin(), nodes.end());
  g.adjacency.resize(g.names.size());
  auto position = [&g](const std::string& name) -> std::optional<std::size_t> {
    auto it = std::lower_bound(g.names.begin(), g.names.end(), name);
    if (it == g.names.end() || *it != name) {
      return std::nullopt;
    }
    return std::size_t(it - g.names.begin());
  };
  for (const auto& [from, to] : edges) {
    auto a = position(from);
    auto b = position(to);
    if (a && b) {
      g.adjacency[*a].push_back(*b);
    }
  }
  return g;
}

}  // namespace

std::vector<std::vector<std::string>> cyclicComponents(const std::set<std::string>& nodes,
                                                       const NamedEdges& edges) {
  IndexedGraph g = index(nodes, edges);
  std::vector<std::vector<std::string>> out;
  for (const auto& component : stronglyConnectedComponents(g.adjacency)) {
    if (component.size() < 2) {
      continue;
    }
    std::vector<std::string> names;
    for (std::size_t v : component) {
      names.push_back(g.names[v]);
    }
    std::sort(names.begin(), names.end());
    out.push_back(std::move(names));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<std::string>> dependencyOrder(const std::set<std::string>& nodes,
                                                        const NamedEdges& edges) {
  IndexedGraph g = index(nodes, edges);
  const std::size_t n = g.names.size();
  // Reverse the edges: a dependency (edge target) is released first.
  Adjacency dependents(n);
  std::vector<std::size_t> pending(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> targets = g.adjacency[v];
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (std::size_t w : targets) {
      if (w == v) {
        continue;
      }
      dependents[w].push_back(v);
      ++pending[v];
    }
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (pending[v] == 0) {
      ready.push(v);
    }
  }
  std::vector<std::string> order;
  while (!ready.empty()) {
    std::size_t v = ready.top();
    ready.pop();
    order.push_back(g.names[v]);
    for (std::size_t d : dependents[v]) {
      if (--pending[d] == 0) {
        ready.push(d);
      }
    }
  }
  if (order.size() != n) {
    return std::nullopt;
  }
  return order;
}

}  // namespace splforge::graph
