/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef SPLFORGE_DERIVE_PRODUCT_HPP
#define SPLFORGE_DERIVE_PRODUCT_HPP

#include "splforge/fm/analysis.hpp"
#include "splforge/fm/model.hpp"
#include "splforge/graph/scc.hpp"

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace splforge::derive {

/// Modules of a product and their build dependencies. An edge (a, b) means
/// module a depends on module b.
struct ModuleGraph {
  std::set<std::string> nodes;
  graph::NamedEdges edges;

  bool operator==(const ModuleGraph&) const = default;
};

/// Nodes are the modules of selected features. Edges run from a child's
/// module to its parent's module and along every Requires constraint whose
/// ends are both selected. Throws Error(MissingBinding).
ModuleGraph buildModuleGraph(const fm::FeatureModel& model, const fm::Configuration& config);

/// Strongly connected components with at least two modules.
std::vector<std::vector<std::string>> detectCycles(const ModuleGraph& graph);

struct ManifestModule {
  std::string moduleId;
  fm::LayerSet layers;

  bool operator==(const ManifestModule&) const = default;
};

struct ProductManifest {
  std::string productName;
  std::string modelName;
  int version = 1;
  std::vector<std::string> features;      // sorted
  std::vector<ManifestModule> modules;    // dependencies first
  std::vector<std::string> languages;     // locale tags, group member order
  std::size_t cycleCount = 0;

  bool operator==(const ProductManifest&) const = default;
};

/// Maps a language feature name to a locale tag: "PtBR" -> "pt_BR".
std::string localeTag(std::string_view featureName);

/// Derives the product of `config` (decisions over `model`) restricted to the
/// features available at `version`.
///
/// Throws Error(InvalidConfiguration) when the configuration is not a valid
/// product of the filtered model. A module cycle does not throw: the manifest
/// is produced with modules in name order and cycleCount > 0.
ProductManifest deriveProduct(const fm::FeatureModel& model, const fm::Configuration& config,
                              const std::string& productName, int version);

std::string writeManifest(const ProductManifest& manifest);

/// Throws Error(Syntax) naming the offending line.
ProductManifest readManifest(std::string_view text);

}  // namespace splforge::derive

#endif  // SPLFORGE_DERIVE_PRODUCT_HPP
