/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "splforge/metrics/measure.hpp"

namespace splforge::metrics {

PackageGraph packageGraph(std::span<const SourceUnit> units) {
  PackageGraph g;
  for (const SourceUnit& u : units) {
    if (!u.packageName.empty()) {
      g.nodes.insert(u.packageName);
    }
  }
  for (const SourceUnit& u : units) {
    if (u.packageName.empty()) {
      continue;
    }
    for (const std::string& imported : u.imports) {
      // "a.b" names the package itself; "a.b.Thing" a member of package a.b.
      std::string target;
      if (g.nodes.contains(imported)) {
        target = imported;
      } else if (auto dot = imported.rfind('.'); dot != std::string::npos &&
                                                  g.nodes.contains(imported.substr(0, dot))) {
        target = imported.substr(0, dot);
      }
      if (!target.empty() && target != u.packageName) {
        g.edges.emplace(u.packageName, target);
      }
    }
  }
  return g;
}

PackageCycles packageCycles(std::span<const SourceUnit> units) {
  PackageGraph g = packageGraph(units);
  PackageCycles result;
  result.components = graph::cyclicComponents(g.nodes, g.edges);
  result.count = std::int64_t(result.components.size());
  return result;
}

}  // namespace splforge::metrics
