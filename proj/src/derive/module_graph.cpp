/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "splforge/derive/product.hpp"
#include "splforge/error.hpp"

namespace splforge::derive {

namespace {

const std::string& moduleOf(const fm::FeatureModel& model, fm::FeatureId id) {
  const fm::Feature& f = model.feature(id);
  if (!f.asset) {
    throw Error(ErrorCode::MissingBinding,
                "selected feature '" + f.name + "' has no module binding");
  }
  return f.asset->moduleId;
}

}  // namespace

ModuleGraph buildModuleGraph(const fm::FeatureModel& model, const fm::Configuration& config) {
  ModuleGraph graph;
  auto addEdge = [&graph](const std::string& from, const std::string& to) {
    if (from != to) {
      graph.edges.emplace(from, to);
    }
  };

  for (fm::FeatureId id : config.selected) {
    graph.nodes.insert(moduleOf(model, id));
  }
  for (fm::FeatureId id : config.selected) {
    const fm::Feature& f = model.feature(id);
    if (f.parent && config.selected.contains(*f.parent)) {
      addEdge(moduleOf(model, id), moduleOf(model, *f.parent));
    }
  }
  for (const fm::CrossTreeConstraint& c : model.constraints()) {
    if (c.kind == fm::ConstraintKind::Requires && config.selected.contains(c.from) &&
        config.selected.contains(c.to)) {
      addEdge(moduleOf(model, c.from), moduleOf(model, c.to));
    }
  }
  return graph;
}

std::vector<std::vector<std::string>> detectCycles(const ModuleGraph& graph) {
  return graph::cyclicComponents(graph.nodes, graph.edges);
}

}  // namespace splforge::derive
