/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "splforge/fm/analysis.hpp"

#include "search.hpp"
#include "splforge/error.hpp"

#include <algorithm>
#include <map>

namespace splforge::fm {

using detail::ExactSearch;
using detail::Mask;
using detail::UnitSolver;
using detail::Value;

namespace {

void checkIds(const FeatureModel& model, const Configuration& config) {
  for (const auto* set : {&config.selected, &config.deselected}) {
    for (FeatureId id : *set) {
      if (id.value >= model.size()) {
        throw Error(ErrorCode::UnknownFeature,
                    "configuration names feature #" + std::to_string(id.value) +
                        " absent from model '" + model.name() + "'");
      }
    }
  }
  for (FeatureId id : config.selected) {
    if (config.deselected.contains(id)) {
      throw Error(ErrorCode::DuplicateDecision,
                  "feature '" + model.nameOf(id) + "' is both selected and deselected");
    }
  }
}

void requireExact(const FeatureModel& model, std::string_view what) {
  if (model.size() > kExactBound) {
    throw Error(ErrorCode::ExactBoundExceeded,
                std::string(what) + " needs exhaustive enumeration, but model '" + model.name() +
                    "' has " + std::to_string(model.size()) + " features (bound " +
                    std::to_string(kExactBound) + ")");
  }
}

Mask toMask(const std::set<FeatureId>& ids) {
  Mask m = 0;
  for (FeatureId id : ids) {
    m |= Mask(1) << id.value;
  }
  return m;
}

std::set<FeatureId> fromMask(Mask m, std::size_t n) {
  std::set<FeatureId> out;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (m & (Mask(1) << i)) {
      out.insert(FeatureId{i});
    }
  }
  return out;
}

Mask fullMask(std::size_t n) { return n >= 32 ? ~Mask(0) : (Mask(1) << n) - 1; }

Configuration totalConfiguration(const std::vector<bool>& selected) {
  Configuration c;
  for (std::uint32_t i = 0; i < selected.size(); ++i) {
    (selected[i] ? c.selected : c.deselected).insert(FeatureId{i});
  }
  c.total = true;
  return c;
}

struct Summary {
  std::uint64_t count = 0;
  Mask allOn = ~Mask(0);
  Mask anyOn = 0;
};

Summary summarize(const FeatureModel& model, Mask fixedOn, Mask fixedOff) {
  ExactSearch search(encode(model));
  Summary s;
  search.run(fixedOn, fixedOff, [&s](Mask m) {
    ++s.count;
    s.allOn &= m;
    s.anyOn |= m;
  });
  return s;
}

}  // namespace

void Configuration::refreshTotal(const FeatureModel& model) {
  total = selected.size() + deselected.size() == model.size();
}

Configuration makeConfiguration(const FeatureModel& model,
                                const std::vector<std::string>& selected,
                                const std::vector<std::string>& deselected) {
  Configuration config;
  auto add = [&](const std::vector<std::string>& names, std::set<FeatureId>& into) {
    for (const std::string& name : names) {
      auto id = model.find(name);
      if (!id) {
        throw Error(ErrorCode::UnknownFeature,
                    "unknown feature '" + name + "' in model '" + model.name() + "'");
      }
      if (config.selected.contains(*id) || config.deselected.contains(*id)) {
        throw Error(ErrorCode::DuplicateDecision, "feature '" + name + "' is decided twice");
      }
      into.insert(*id);
    }
  };
  add(selected, config.selected);
  add(deselected, config.deselected);
  config.refreshTotal(model);
  return config;
}

ValidationResult validate(const FeatureModel& model, const Configuration& config) {
  checkIds(model, config);
  std::vector<bool> selected(model.size(), false);
  for (FeatureId id : config.selected) {
    selected[id.value] = true;
  }

  ValidationResult result;
  for (const Clause& clause : encode(model).clauses) {
    if (!clause.satisfiedBy(selected)) {
      result.violations.push_back({clause.kind, clause.features, describeClause(model, clause)});
    }
  }
  auto key = [&model](const Violation& v) {
    std::vector<std::string_view> names;
    for (FeatureId f : v.features) {
      names.push_back(model.nameOf(f));
    }
    return std::make_pair(v.kind, names);
  };
  std::stable_sort(result.violations.begin(), result.violations.end(),
                   [&key](const Violation& a, const Violation& b) { return key(a) < key(b); });
  result.valid = result.violations.empty();
  return result;
}

PropagationResult propagate(const FeatureModel& model, const Configuration& partial) {
  checkIds(model, partial);
  const std::size_t n = model.size();
  PropagationResult result;

  auto decided = [&partial](FeatureId id) {
    return partial.selected.contains(id) || partial.deselected.contains(id);
  };

  if (n <= kExactBound) {
    Summary s = summarize(model, toMask(partial.selected), toMask(partial.deselected));
    if (s.count == 0) {
      result.conflict = true;
      return result;
    }
    for (std::uint32_t i = 0; i < n; ++i) {
      FeatureId id{i};
      if (decided(id)) {
        continue;
      }
      const Mask bit = Mask(1) << i;
      if (s.allOn & bit) {
        result.forcedSelected.insert(id);
      } else if (!(s.anyOn & bit)) {
        result.forcedDeselected.insert(id);
      } else {
        result.openFeatures.insert(id);
      }
    }
    return result;
  }

  ConstraintSet constraints = encode(model);
  UnitSolver solver(constraints);
  std::vector<Value> assignment(n, Value::Unknown);
  for (FeatureId id : partial.selected) {
    assignment[id.value] = Value::True;
  }
  for (FeatureId id : partial.deselected) {
    assignment[id.value] = Value::False;
  }
  if (!solver.propagate(assignment)) {
    result.conflict = true;
    return result;
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    FeatureId id{i};
    if (decided(id)) {
      continue;
    }
    switch (assignment[i]) {
      case Value::True: result.forcedSelected.insert(id); break;
      case Value::False: result.forcedDeselected.insert(id); break;
      case Value::Unknown: result.openFeatures.insert(id); break;
    }
  }
  return result;
}

std::vector<Configuration> enumerate(const FeatureModel& model, std::optional<std::size_t> limit) {
  const std::size_t n = model.size();
  std::vector<Configuration> out;
  if (n > kExactBound) {
    if (!limit) {
      requireExact(model, "unbounded enumeration");
    }
    for (const auto& selected : detail::enumerateLexicographic(model, encode(model), *limit)) {
      out.push_back(totalConfiguration(selected));
    }
    return out;
  }

  std::vector<std::uint32_t> rank(n);
  {
    std::vector<FeatureId> byName = model.allSortedByName();
    for (std::uint32_t r = 0; r < byName.size(); ++r) {
      rank[byName[r].value] = r;
    }
  }
  std::vector<std::pair<std::vector<std::uint32_t>, Mask>> products;
  ExactSearch(encode(model)).run(0, 0, [&](Mask m) {
    std::vector<std::uint32_t> ranks;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (m & (Mask(1) << i)) {
        ranks.push_back(rank[i]);
      }
    }
    std::sort(ranks.begin(), ranks.end());
    products.emplace_back(std::move(ranks), m);
  });
  std::sort(products.begin(), products.end());
  const std::size_t take = limit ? std::min(*limit, products.size()) : products.size();
  out.reserve(take);
  for (std::size_t i = 0; i < take; ++i) {
    Configuration c;
    c.selected = fromMask(products[i].second, n);
    c.deselected = fromMask(~products[i].second & fullMask(n), n);
    c.total = true;
    out.push_back(std::move(c));
  }
  return out;
}

std::uint64_t count(const FeatureModel& model) {
  requireExact(model, "count");
  return summarize(model, 0, 0).count;
}

std::uint64_t countExtensions(const FeatureModel& model, const Configuration& partial) {
  checkIds(model, partial);
  requireExact(model, "count");
  return summarize(model, toMask(partial.selected), toMask(partial.deselected)).count;
}

ModelDiagnostics diagnostics(const FeatureModel& model) {
  requireExact(model, "diagnostics");
  const std::size_t n = model.size();
  Summary s = summarize(model, 0, 0);
  ModelDiagnostics d;
  d.productCount = s.count;
  d.isVoid = s.count == 0;
  if (d.isVoid) {
    d.deadFeatures = fromMask(fullMask(n), n);
    return d;
  }
  d.coreFeatures = fromMask(s.allOn & fullMask(n), n);
  d.deadFeatures = fromMask(~s.anyOn & fullMask(n), n);
  for (FeatureId id : d.coreFeatures) {
    if (model.feature(id).variability == Variability::Optional) {
      d.falseOptional.insert(id);
    }
  }
  return d;
}

FeatureModel filterByVersion(const FeatureModel& model, int version) {
  if (version < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "version must be >= 1, got " + std::to_string(version));
  }
  const Feature& root = model.feature(model.root());
  if (root.version > version) {
    throw Error(ErrorCode::RootRemoved, "root '" + root.name + "' was introduced in v" +
                                            std::to_string(root.version) + ", after v" +
                                            std::to_string(version));
  }

  // A feature survives when it and all of its ancestors are old enough.
  std::vector<bool> keep(model.size(), false);
  for (const Feature& f : model.features()) {
    keep[f.id.value] = f.version <= version && (!f.parent || keep[f.parent->value]);
  }

  ModelDraft full = model.toDraft();
  ModelDraft draft;
  draft.name = full.name;
  for (std::size_t i = 0; i < full.features.size(); ++i) {
    if (keep[i]) {
      draft.features.push_back(full.features[i]);
    }
  }
  auto survivorIndex = [&draft](const std::string& name) -> FeatureDraft* {
    for (FeatureDraft& f : draft.features) {
      if (f.name == name) {
        return &f;
      }
    }
    return nullptr;
  };
  for (const GroupDraft& g : full.groups) {
    GroupDraft kept{g.name, g.parent, g.kind, {}};
    for (const std::string& m : g.members) {
      if (survivorIndex(m)) {
        kept.members.push_back(m);
      }
    }
    if (kept.members.size() >= 2) {
      draft.groups.push_back(std::move(kept));
    } else {
      for (const std::string& m : kept.members) {
        survivorIndex(m)->variability = Variability::Optional;
      }
    }
  }
  for (const ConstraintDraft& c : full.constraints) {
    if (survivorIndex(c.from) && survivorIndex(c.to)) {
      draft.constraints.push_back(c);
    }
  }
  return FeatureModel::fromDraft(draft);
}

}  // namespace splforge::fm
