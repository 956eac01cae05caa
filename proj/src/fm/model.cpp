/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "splforge/fm/model.hpp"

#include "splforge/error.hpp"
#include "splforge/identifier.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace splforge::fm {

std::string_view layerName(Layer layer) noexcept {
  switch (layer) {
    case Layer::XHTML: return "XHTML";
    case Layer::Controller: return "Controller";
    case Layer::Service: return "Service";
    case Layer::DAO: return "DAO";
  }
  return "?";
}

std::optional<Layer> parseLayer(std::string_view text) noexcept {
  for (Layer l : kAllLayers) {
    if (layerName(l) == text) {
      return l;
    }
  }
  return std::nullopt;
}

std::string_view variabilityName(Variability v) noexcept {
  switch (v) {
    case Variability::Mandatory: return "mandatory";
    case Variability::Optional: return "optional";
    case Variability::GroupMember: return "member";
  }
  return "?";
}

std::string_view groupKindName(GroupKind k) noexcept {
  return k == GroupKind::Alternative ? "alt" : "or";
}

std::string_view constraintKindName(ConstraintKind k) noexcept {
  return k == ConstraintKind::Requires ? "requires" : "excludes";
}

std::string LayerSet::str() const {
  std::string out;
  for (Layer l : kAllLayers) {
    if (contains(l)) {
      if (!out.empty()) {
        out += ',';
      }
      out += layerName(l);
    }
  }
  return out;
}

namespace {

struct DraftIndex {
  std::map<std::string, std::size_t, std::less<>> byName;
  std::vector<std::vector<std::size_t>> children;
  std::optional<std::size_t> root;
};

}  // namespace

FeatureModel FeatureModel::fromDraft(const ModelDraft& draft) {
  std::vector<std::string> problems;
  auto problem = [&problems](std::string text) { problems.push_back(std::move(text)); };

  if (!isIdentifier(draft.name)) {
    problem("model name '" + draft.name + "' is not an identifier");
  }

  DraftIndex index;
  index.children.resize(draft.features.size());
  for (std::size_t i = 0; i < draft.features.size(); ++i) {
    const FeatureDraft& f = draft.features[i];
    if (!isIdentifier(f.name)) {
      problem("feature name '" + f.name + "' is not an identifier");
    }
    if (!index.byName.emplace(f.name, i).second) {
      problem("duplicate feature name '" + f.name + "'");
    }
    if (f.version < 1) {
      problem("feature '" + f.name + "' has version " + std::to_string(f.version) + " < 1");
    }
    if (f.asset && (f.asset->moduleId.empty() || f.asset->layers.empty())) {
      problem("feature '" + f.name + "' has an empty asset binding");
    }
  }

  for (std::size_t i = 0; i < draft.features.size(); ++i) {
    const FeatureDraft& f = draft.features[i];
    if (!f.parent) {
      if (index.root) {
        problem("multiple roots: '" + draft.features[*index.root].name + "' and '" + f.name + "'");
      } else {
        index.root = i;
      }
      if (f.variability != Variability::Mandatory) {
        problem("root '" + f.name + "' must be mandatory");
      }
      continue;
    }
    auto it = index.byName.find(*f.parent);
    if (it == index.byName.end()) {
      problem("feature '" + f.name + "' has unknown parent '" + *f.parent + "'");
    } else if (it->second == i) {
      problem("feature '" + f.name + "' is its own parent");
    } else {
      index.children[it->second].push_back(i);
    }
  }
  if (!index.root) {
    problem("model has no root feature");
  }

  // Pre-order walk; anything unreached sits on a parent cycle.
  std::vector<std::size_t> order;
  if (index.root) {
    std::vector<bool> seen(draft.features.size(), false);
    std::vector<std::size_t> stack{*index.root};
    while (!stack.empty()) {
      std::size_t cur = stack.back();
      stack.pop_back();
      if (seen[cur]) {
        continue;
      }
      seen[cur] = true;
      order.push_back(cur);
      const auto& kids = index.children[cur];
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
        stack.push_back(*it);
      }
    }
    for (std::size_t i = 0; i < draft.features.size(); ++i) {
      if (!seen[i] && draft.features[i].parent) {
        problem("feature '" + draft.features[i].name + "' is not reachable from the root");
      }
    }
  }

  std::vector<int> memberOf(draft.features.size(), -1);
  for (std::size_t g = 0; g < draft.groups.size(); ++g) {
    const GroupDraft& group = draft.groups[g];
    auto parentIt = index.byName.find(group.parent);
    if (parentIt == index.byName.end()) {
      problem("group '" + group.name + "' has unknown parent '" + group.parent + "'");
    }
    std::set<std::string> distinct(group.members.begin(), group.members.end());
    if (distinct.size() != group.members.size()) {
      problem("group '" + group.name + "' lists a member twice");
    }
    if (distinct.size() < 2) {
      problem("group '" + group.name + "' needs at least two members");
    }
    for (const std::string& member : group.members) {
      auto it = index.byName.find(member);
      if (it == index.byName.end()) {
        problem("group '" + group.name + "' has unknown member '" + member + "'");
        continue;
      }
      const FeatureDraft& f = draft.features[it->second];
      if (f.parent != group.parent) {
        problem("group member '" + member + "' is not a child of '" + group.parent + "'");
      }
      if (f.variability != Variability::GroupMember) {
        problem("group member '" + member + "' must have group-member variability");
      }
      if (memberOf[it->second] >= 0 && memberOf[it->second] != int(g)) {
        problem("feature '" + member + "' belongs to more than one group");
      }
      memberOf[it->second] = int(g);
    }
  }
  for (std::size_t i = 0; i < draft.features.size(); ++i) {
    if (draft.features[i].variability == Variability::GroupMember && memberOf[i] < 0) {
      problem("feature '" + draft.features[i].name + "' is a group member outside any group");
    }
  }

  for (const ConstraintDraft& c : draft.constraints) {
    bool known = true;
    for (const std::string* end : {&c.from, &c.to}) {
      if (!index.byName.contains(*end)) {
        problem(std::string(constraintKindName(c.kind)) + " constraint names unknown feature '" +
                *end + "'");
        known = false;
      }
    }
    if (known && c.from == c.to) {
      problem(std::string(constraintKindName(c.kind)) + " constraint references '" + c.from +
              "' twice");
    }
  }

  if (!problems.empty()) {
    std::ostringstream msg;
    msg << "invalid feature model '" << draft.name << "':";
    for (const auto& p : problems) {
      msg << "\n  " << p;
    }
    throw Error(ErrorCode::InvalidModel, msg.str());
  }

  FeatureModel model;
  model.name_ = draft.name;
  std::vector<std::uint32_t> newId(draft.features.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    newId[order[pos]] = std::uint32_t(pos);
  }
  model.features_.reserve(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const FeatureDraft& f = draft.features[order[pos]];
    Feature feature;
    feature.id = FeatureId{std::uint32_t(pos)};
    feature.name = f.name;
    if (f.parent) {
      feature.parent = FeatureId{newId[index.byName.find(*f.parent)->second]};
    }
    feature.variability = f.variability;
    feature.version = f.version;
    feature.asset = f.asset;
    for (std::size_t child : index.children[order[pos]]) {
      feature.children.push_back(FeatureId{newId[child]});
    }
    model.byName_.emplace(feature.name, feature.id);
    model.features_.push_back(std::move(feature));
  }

  for (const GroupDraft& g : draft.groups) {
    Group group;
    group.name = g.name;
    group.parent = *model.find(g.parent);
    group.kind = g.kind;
    for (const std::string& m : g.members) {
      group.members.push_back(*model.find(m));
    }
    model.groups_.push_back(std::move(group));
  }
  std::sort(model.groups_.begin(), model.groups_.end(), [](const Group& a, const Group& b) {
    return *std::min_element(a.members.begin(), a.members.end()) <
           *std::min_element(b.members.begin(), b.members.end());
  });
  model.groupIndex_.assign(model.features_.size(), -1);
  for (std::size_t g = 0; g < model.groups_.size(); ++g) {
    for (FeatureId m : model.groups_[g].members) {
      model.groupIndex_[m.value] = int(g);
    }
  }

  for (const ConstraintDraft& c : draft.constraints) {
    model.constraints_.push_back({c.kind, *model.find(c.from), *model.find(c.to)});
  }
  auto key = [&model](const CrossTreeConstraint& c) {
    return std::tie(c.kind, model.nameOf(c.from), model.nameOf(c.to));
  };
  std::sort(model.constraints_.begin(), model.constraints_.end(),
            [&key](const auto& a, const auto& b) { return key(a) < key(b); });
  model.constraints_.erase(std::unique(model.constraints_.begin(), model.constraints_.end()),
                           model.constraints_.end());
  return model;
}

ModelDraft FeatureModel::toDraft() const {
  ModelDraft draft;
  draft.name = name_;
  for (const Feature& f : features_) {
    FeatureDraft d;
    d.name = f.name;
    if (f.parent) {
      d.parent = nameOf(*f.parent);
    }
    d.variability = f.variability;
    d.version = f.version;
    d.asset = f.asset;
    draft.features.push_back(std::move(d));
  }
  for (const Group& g : groups_) {
    GroupDraft d{g.name, nameOf(g.parent), g.kind, {}};
    for (FeatureId m : g.members) {
      d.members.push_back(nameOf(m));
    }
    draft.groups.push_back(std::move(d));
  }
  for (const CrossTreeConstraint& c : constraints_) {
    draft.constraints.push_back({c.kind, nameOf(c.from), nameOf(c.to)});
  }
  return draft;
}

std::optional<FeatureId> FeatureModel::find(std::string_view name) const {
  auto it = byName_.find(name);
  if (it == byName_.end()) {
    return std::nullopt;
  }
  return it->second;
}

const Group* FeatureModel::groupOf(FeatureId id) const {
  int g = groupIndex_.at(id.value);
  return g < 0 ? nullptr : &groups_[std::size_t(g)];
}

int FeatureModel::maxVersion() const noexcept {
  int v = 1;
  for (const Feature& f : features_) {
    v = std::max(v, f.version);
  }
  return v;
}

std::vector<FeatureId> FeatureModel::sortedByName(const std::set<FeatureId>& ids) const {
  std::vector<FeatureId> out(ids.begin(), ids.end());
  std::sort(out.begin(), out.end(),
            [this](FeatureId a, FeatureId b) { return nameOf(a) < nameOf(b); });
  return out;
}

std::vector<std::string> FeatureModel::namesOf(const std::set<FeatureId>& ids) const {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (FeatureId id : sortedByName(ids)) {
    out.push_back(nameOf(id));
  }
  return out;
}

std::vector<FeatureId> FeatureModel::allSortedByName() const {
  std::vector<FeatureId> out;
  out.reserve(byName_.size());
  for (const auto& [name, id] : byName_) {
    out.push_back(id);
  }
  return out;
}

ModelBuilder::ModelBuilder(std::string modelName, std::string rootName, int rootVersion) {
  draft_.name = std::move(modelName);
  draft_.features.push_back(
      {std::move(rootName), std::nullopt, Variability::Mandatory, rootVersion, std::nullopt});
}

ModelBuilder& ModelBuilder::mandatory(std::string_view parent, std::string name, int version) {
  draft_.features.push_back(
      {std::move(name), std::string(parent), Variability::Mandatory, version, std::nullopt});
  return *this;
}

ModelBuilder& ModelBuilder::optional(std::string_view parent, std::string name, int version) {
  draft_.features.push_back(
      {std::move(name), std::string(parent), Variability::Optional, version, std::nullopt});
  return *this;
}

ModelBuilder& ModelBuilder::group(std::string_view parent, GroupKind kind, std::string groupName,
                                  std::vector<std::string> members, int version) {
  for (const std::string& m : members) {
    draft_.features.push_back(
        {m, std::string(parent), Variability::GroupMember, version, std::nullopt});
  }
  draft_.groups.push_back({std::move(groupName), std::string(parent), kind, std::move(members)});
  return *this;
}

ModelBuilder& ModelBuilder::requires_(std::string from, std::string to) {
  draft_.constraints.push_back({ConstraintKind::Requires, std::move(from), std::move(to)});
  return *this;
}

ModelBuilder& ModelBuilder::excludes(std::string from, std::string to) {
  draft_.constraints.push_back({ConstraintKind::Excludes, std::move(from), std::move(to)});
  return *this;
}

ModelBuilder& ModelBuilder::bind(std::string_view feature, std::string moduleId,
                                 LayerSet layers) {
  draftOf(feature).asset = AssetBinding{std::move(moduleId), layers};
  return *this;
}

FeatureDraft& ModelBuilder::draftOf(std::string_view name) {
  for (FeatureDraft& f : draft_.features) {
    if (f.name == name) {
      return f;
    }
  }
  throw Error(ErrorCode::UnknownFeature, "unknown feature '" + std::string(name) + "'");
}

}  // namespace splforge::fm
