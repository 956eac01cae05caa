/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef SPLFORGE_FM_ANALYSIS_HPP
#define SPLFORGE_FM_ANALYSIS_HPP

#include "splforge/fm/encoding.hpp"
#include "splforge/fm/model.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace splforge::fm {

/// Largest model (in features) analysed by exhaustive enumeration.
inline constexpr std::size_t kExactBound = 24;

/// Explicit feature decisions. Features in neither set are undecided.
struct Configuration {
  std::set<FeatureId> selected;
  std::set<FeatureId> deselected;
  bool total = false;

  /// Recomputes `total` against the model.
  void refreshTotal(const FeatureModel& model);

  bool operator==(const Configuration&) const = default;
};

/// Builds a configuration from feature names; throws Error(UnknownFeature)
/// or Error(DuplicateDecision).
Configuration makeConfiguration(const FeatureModel& model,
                                const std::vector<std::string>& selected,
                                const std::vector<std::string>& deselected = {});

struct Violation {
  ClauseKind kind;
  std::vector<FeatureId> features;
  std::string message;

  bool operator==(const Violation&) const = default;
};

struct ValidationResult {
  bool valid = true;
  std::vector<Violation> violations;  // sorted by (kind, feature names)
};

/// Checks a configuration against every clause of encode(model). Undecided
/// features are treated as deselected, so a list of selections describes the
/// product made of exactly those features.
ValidationResult validate(const FeatureModel& model, const Configuration& config);

struct PropagationResult {
  std::set<FeatureId> forcedSelected;
  std::set<FeatureId> forcedDeselected;
  std::set<FeatureId> openFeatures;
  bool conflict = false;

  bool operator==(const PropagationResult&) const = default;
};

/// Decision propagation. Exact (sound and complete) up to kExactBound
/// features, sound unit propagation beyond.
PropagationResult propagate(const FeatureModel& model, const Configuration& partial);

/// Valid total configurations in lexicographic order of their sorted
/// feature-name lists. A missing limit means "all" and requires the model to
/// stay within kExactBound features.
std::vector<Configuration> enumerate(const FeatureModel& model,
                                     std::optional<std::size_t> limit = std::nullopt);

/// Number of valid total configurations; throws ExactBoundExceeded.
std::uint64_t count(const FeatureModel& model);

/// Number of valid total extensions of a partial configuration.
std::uint64_t countExtensions(const FeatureModel& model, const Configuration& partial);

struct ModelDiagnostics {
  bool isVoid = false;
  std::set<FeatureId> deadFeatures;
  std::set<FeatureId> coreFeatures;
  std::set<FeatureId> falseOptional;
  std::uint64_t productCount = 0;
};

ModelDiagnostics diagnostics(const FeatureModel& model);

/// Sub-model made of the features introduced at or before `version`.
FeatureModel filterByVersion(const FeatureModel& model, int version);

}  // namespace splforge::fm

#endif  // SPLFORGE_FM_ANALYSIS_HPP
