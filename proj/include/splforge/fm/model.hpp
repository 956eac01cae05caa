/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef SPLFORGE_FM_MODEL_HPP
#define SPLFORGE_FM_MODEL_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace splforge::fm {

/// Index of a feature inside its model. Ids follow the pre-order walk of the
/// feature tree, so a parent always has a smaller id than its children.
struct FeatureId {
  std::uint32_t value = 0;

  auto operator<=>(const FeatureId&) const = default;
};

enum class Variability { Mandatory, Optional, GroupMember };
enum class GroupKind { Alternative, Or };
enum class ConstraintKind { Requires, Excludes };

/// Architectural layer a feature's module contributes to.
enum class Layer : std::uint8_t { XHTML = 0, Controller = 1, Service = 2, DAO = 3 };

inline constexpr Layer kAllLayers[] = {Layer::XHTML, Layer::Controller, Layer::Service,
                                       Layer::DAO};

std::string_view layerName(Layer layer) noexcept;
std::optional<Layer> parseLayer(std::string_view text) noexcept;
std::string_view variabilityName(Variability v) noexcept;
std::string_view groupKindName(GroupKind k) noexcept;
std::string_view constraintKindName(ConstraintKind k) noexcept;

class LayerSet {
public:
  constexpr LayerSet() = default;

  static constexpr LayerSet all() { return LayerSet(0x0f); }

  constexpr void insert(Layer l) { bits_ |= bit(l); }
  constexpr bool contains(Layer l) const { return (bits_ & bit(l)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool isAll() const { return bits_ == 0x0f; }
  constexpr LayerSet& operator|=(LayerSet other) {
    bits_ |= other.bits_;
    return *this;
  }

  /// Layer names in canonical order, comma separated ("XHTML,Controller").
  std::string str() const;

  auto operator<=>(const LayerSet&) const = default;

private:
  constexpr explicit LayerSet(std::uint8_t bits) : bits_(bits) {}
  static constexpr std::uint8_t bit(Layer l) { return std::uint8_t(1u << std::uint8_t(l)); }

  std::uint8_t bits_ = 0;
};

/// Binds a feature to the module (project) implementing it.
struct AssetBinding {
  std::string moduleId;
  LayerSet layers = LayerSet::all();

  bool operator==(const AssetBinding&) const = default;
};

struct Feature {
  FeatureId id;
  std::string name;
  std::optional<FeatureId> parent;
  Variability variability = Variability::Optional;
  int version = 1;
  std::optional<AssetBinding> asset;
  std::vector<FeatureId> children;  // declaration order

  bool operator==(const Feature&) const = default;
};

struct Group {
  std::string name;
  FeatureId parent;
  GroupKind kind = GroupKind::Or;
  std::vector<FeatureId> members;

  bool operator==(const Group&) const = default;
};

struct CrossTreeConstraint {
  ConstraintKind kind = ConstraintKind::Requires;
  FeatureId from;
  FeatureId to;

  bool operator==(const CrossTreeConstraint&) const = default;
};

// Name-based description of a model, used to construct FeatureModel values.
// Features are listed parent-before-child or in any order; children keep the
// relative order in which they are listed.
struct FeatureDraft {
  std::string name;
  std::optional<std::string> parent;
  Variability variability = Variability::Optional;
  int version = 1;
  std::optional<AssetBinding> asset;
};

struct GroupDraft {
  std::string name;
  std::string parent;
  GroupKind kind = GroupKind::Or;
  std::vector<std::string> members;
};

struct ConstraintDraft {
  ConstraintKind kind = ConstraintKind::Requires;
  std::string from;
  std::string to;
};

struct ModelDraft {
  std::string name;
  std::vector<FeatureDraft> features;
  std::vector<GroupDraft> groups;
  std::vector<ConstraintDraft> constraints;
};

/// Immutable rooted feature tree with groups and cross-tree constraints.
///
/// Construction validates every structural invariant and canonicalizes the
/// representation: features are renumbered in pre-order, groups are ordered by
/// the position of their first member and constraints are sorted by
/// (kind, from name, to name) with duplicates removed. Two models built from
/// drafts describing the same structure therefore compare equal.
class FeatureModel {
public:
  /// Throws Error(InvalidModel) listing every violated invariant.
  static FeatureModel fromDraft(const ModelDraft& draft);

  ModelDraft toDraft() const;

  const std::string& name() const noexcept { return name_; }
  FeatureId root() const noexcept { return FeatureId{0}; }
  std::size_t size() const noexcept { return features_.size(); }

  std::span<const Feature> features() const noexcept { return features_; }
  const Feature& feature(FeatureId id) const { return features_.at(id.value); }
  const std::string& nameOf(FeatureId id) const { return feature(id).name; }
  std::optional<FeatureId> find(std::string_view name) const;

  std::span<const Group> groups() const noexcept { return groups_; }
  std::span<const CrossTreeConstraint> constraints() const noexcept { return constraints_; }

  /// Group the feature belongs to as a member, or nullptr.
  const Group* groupOf(FeatureId id) const;

  int maxVersion() const noexcept;

  /// Features sorted by name.
  std::vector<FeatureId> sortedByName(const std::set<FeatureId>& ids) const;
  std::vector<std::string> namesOf(const std::set<FeatureId>& ids) const;
  std::vector<FeatureId> allSortedByName() const;

  bool operator==(const FeatureModel& other) const {
    return name_ == other.name_ && features_ == other.features_ && groups_ == other.groups_ &&
           constraints_ == other.constraints_;
  }

private:
  FeatureModel() = default;

  std::string name_;
  std::vector<Feature> features_;
  std::vector<Group> groups_;
  std::vector<CrossTreeConstraint> constraints_;
  std::map<std::string, FeatureId, std::less<>> byName_;
  std::vector<int> groupIndex_;  // per feature, -1 when not a group member
};

/// Fluent helper for assembling drafts in code.
class ModelBuilder {
public:
  ModelBuilder(std::string modelName, std::string rootName, int rootVersion = 1);

  ModelBuilder& mandatory(std::string_view parent, std::string name, int version = 1);
  ModelBuilder& optional(std::string_view parent, std::string name, int version = 1);
  /// Declares the members as children of parent and groups them.
  ModelBuilder& group(std::string_view parent, GroupKind kind, std::string groupName,
                      std::vector<std::string> members, int version = 1);
  ModelBuilder& requires_(std::string from, std::string to);
  ModelBuilder& excludes(std::string from, std::string to);
  ModelBuilder& bind(std::string_view feature, std::string moduleId,
                     LayerSet layers = LayerSet::all());

  const ModelDraft& draft() const noexcept { return draft_; }
  FeatureModel build() const { return FeatureModel::fromDraft(draft_); }

private:
  FeatureDraft& draftOf(std::string_view name);

  ModelDraft draft_;
};

}  // namespace splforge::fm

#endif  // SPLFORGE_FM_MODEL_HPP
