/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "splforge/derive/product.hpp"
#include "splforge/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace splforge::derive {

namespace {

constexpr std::string_view kLanguageGroup = "Languages";

bool isProductName(std::string_view name) {
  return !name.empty() && std::none_of(name.begin(), name.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == ',';
  });
}

}  // namespace

std::string localeTag(std::string_view name) {
  // Leading capitalised word is the language, the remaining capitals the region.
  std::size_t split = 1;
  while (split < name.size() && std::islower(static_cast<unsigned char>(name[split]))) {
    ++split;
  }
  const bool shaped =
      name.size() > split && split > 1 && std::isupper(static_cast<unsigned char>(name[0])) &&
      std::all_of(name.begin() + std::ptrdiff_t(split), name.end(),
                  [](char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; });
  if (!shaped) {
    return std::string(name);
  }
  std::string tag;
  for (std::size_t i = 0; i < split; ++i) {
    tag += char(std::tolower(static_cast<unsigned char>(name[i])));
  }
  tag += '_';
  tag += name.substr(split);
  return tag;
}

ProductManifest deriveProduct(const fm::FeatureModel& model, const fm::Configuration& config,
                              const std::string& productName, int version) {
  if (!isProductName(productName)) {
    throw Error(ErrorCode::InvalidArgument,
                "product name '" + productName + "' must be non-empty without spaces or commas");
  }
  const fm::FeatureModel scoped = fm::filterByVersion(model, version);

  fm::Configuration local;
  for (fm::FeatureId id : config.selected) {
    auto mapped = scoped.find(model.nameOf(id));
    if (!mapped) {
      throw Error(ErrorCode::InvalidConfiguration,
                  "feature '" + model.nameOf(id) + "' (v" +
                      std::to_string(model.feature(id).version) + ") is not available at v" +
                      std::to_string(version));
    }
    local.selected.insert(*mapped);
  }
  for (fm::FeatureId id : config.deselected) {
    if (auto mapped = scoped.find(model.nameOf(id))) {
      local.deselected.insert(*mapped);
    }
  }
  local.refreshTotal(scoped);

  fm::ValidationResult check = fm::validate(scoped, local);
  if (!check.valid) {
    std::string message = "configuration is not a valid product of '" + scoped.name() + "' at v" +
                          std::to_string(version) + ":";
    for (const fm::Violation& v : check.violations) {
      message += "\n  " + v.message;
    }
    throw Error(ErrorCode::InvalidConfiguration, message);
  }

  ModuleGraph graph = buildModuleGraph(scoped, local);

  ProductManifest manifest;
  manifest.productName = productName;
  manifest.modelName = scoped.name();
  manifest.version = version;
  manifest.features = scoped.namesOf(local.selected);

  std::map<std::string, fm::LayerSet> layers;
  for (fm::FeatureId id : local.selected) {
    const fm::AssetBinding& binding = *scoped.feature(id).asset;
    layers[binding.moduleId] |= binding.layers;
  }
  manifest.cycleCount = detectCycles(graph).size();
  std::vector<std::string> order;
  if (auto sorted = graph::dependencyOrder(graph.nodes, graph.edges)) {
    order = std::move(*sorted);
  } else {
    order.assign(graph.nodes.begin(), graph.nodes.end());
  }
  for (const std::string& id : order) {
    manifest.modules.push_back({id, layers.at(id)});
  }

  for (const fm::Group& g : scoped.groups()) {
    if (g.name != kLanguageGroup) {
      continue;
    }
    for (fm::FeatureId m : g.members) {
      if (local.selected.contains(m)) {
        manifest.languages.push_back(localeTag(scoped.nameOf(m)));
      }
    }
  }
  return manifest;
}

}  // namespace splforge::derive
