/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef SPLFORGE_GRAPH_SCC_HPP
#define SPLFORGE_GRAPH_SCC_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace splforge::graph {

using Adjacency = std::vector<std::vector<std::size_t>>;

/// Tarjan's algorithm (iterative). Every vertex appears in exactly one
/// component; components come out in reverse topological order.
std::vector<std::vector<std::size_t>> stronglyConnectedComponents(const Adjacency& adjacency);

using NamedEdges = std::set<std::pair<std::string, std::string>>;

/// Components with at least two nodes. Each component is sorted by name and
/// the list is ordered by smallest member.
std::vector<std::vector<std::string>> cyclicComponents(const std::set<std::string>& nodes,
                                                       const NamedEdges& edges);

/// Order in which every edge target precedes its source (dependencies before
/// dependents), ties broken by name. nullopt when the graph has a cycle.
std::optional<std::vector<std::string>> dependencyOrder(const std::set<std::string>& nodes,
                                                        const NamedEdges& edges);

}  // namespace splforge::graph

#endif  // SPLFORGE_GRAPH_SCC_HPP
