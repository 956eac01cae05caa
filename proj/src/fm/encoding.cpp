/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "splforge/fm/encoding.hpp"

namespace splforge::fm {

std::string_view clauseKindName(ClauseKind kind) noexcept {
  switch (kind) {
    case ClauseKind::Root: return "root";
    case ClauseKind::ParentOfSelected: return "parent";
    case ClauseKind::MandatoryChild: return "mandatory";
    case ClauseKind::OrGroup: return "or-group";
    case ClauseKind::AlternativeNone: return "alt-group";
    case ClauseKind::AlternativeExclusive: return "alt-exclusive";
    case ClauseKind::Requires: return "requires";
    case ClauseKind::Excludes: return "excludes";
  }
  return "?";
}

bool Clause::satisfiedBy(const std::vector<bool>& selected) const {
  for (const Literal& lit : literals) {
    if (selected[lit.feature.value] == lit.positive) {
      return true;
    }
  }
  return false;
}

ConstraintSet encode(const FeatureModel& model) {
  ConstraintSet cs;
  cs.variableCount = model.size();
  auto pos = [](FeatureId f) { return Literal{f, true}; };
  auto neg = [](FeatureId f) { return Literal{f, false}; };

  cs.clauses.push_back({ClauseKind::Root, {pos(model.root())}, {model.root()}});

  for (const Feature& f : model.features()) {
    if (!f.parent) {
      continue;
    }
    FeatureId parent = *f.parent;
    cs.clauses.push_back({ClauseKind::ParentOfSelected, {neg(f.id), pos(parent)}, {f.id, parent}});
    if (f.variability == Variability::Mandatory) {
      cs.clauses.push_back({ClauseKind::MandatoryChild, {neg(parent), pos(f.id)}, {parent, f.id}});
    }
  }

  for (const Group& g : model.groups()) {
    Clause atLeastOne;
    atLeastOne.kind =
        g.kind == GroupKind::Or ? ClauseKind::OrGroup : ClauseKind::AlternativeNone;
    atLeastOne.literals.push_back(neg(g.parent));
    atLeastOne.features.push_back(g.parent);
    for (FeatureId m : g.members) {
      atLeastOne.literals.push_back(pos(m));
      atLeastOne.features.push_back(m);
    }
    cs.clauses.push_back(std::move(atLeastOne));

    if (g.kind == GroupKind::Alternative) {
      for (std::size_t i = 0; i < g.members.size(); ++i) {
        for (std::size_t j = i + 1; j < g.members.size(); ++j) {
          cs.clauses.push_back({ClauseKind::AlternativeExclusive,
                                {neg(g.members[i]), neg(g.members[j])},
                                {g.members[i], g.members[j]}});
        }
      }
    }
  }

  for (const CrossTreeConstraint& c : model.constraints()) {
    if (c.kind == ConstraintKind::Requires) {
      cs.clauses.push_back({ClauseKind::Requires, {neg(c.from), pos(c.to)}, {c.from, c.to}});
    } else {
      cs.clauses.push_back({ClauseKind::Excludes, {neg(c.from), neg(c.to)}, {c.from, c.to}});
    }
  }
  return cs;
}

std::string describeClause(const FeatureModel& model, const Clause& clause) {
  auto name = [&](std::size_t i) { return model.nameOf(clause.features.at(i)); };
  auto memberList = [&] {
    std::string out;
    for (std::size_t i = 1; i < clause.features.size(); ++i) {
      out += (i > 1 ? "," : "") + name(i);
    }
    return out;
  };
  switch (clause.kind) {
    case ClauseKind::Root:
      return "root feature " + name(0) + " must be selected";
    case ClauseKind::ParentOfSelected:
      return name(0) + " is selected without its parent " + name(1);
    case ClauseKind::MandatoryChild:
      return name(1) + " is a mandatory child of selected parent " + name(0);
    case ClauseKind::OrGroup:
      return "or-group of " + name(0) + " needs at least one of " + memberList();
    case ClauseKind::AlternativeNone:
      return "alternative group of " + name(0) + " needs exactly one of " + memberList();
    case ClauseKind::AlternativeExclusive:
      return name(0) + " and " + name(1) + " are alternatives and exclude each other";
    case ClauseKind::Requires:
      return name(0) + " requires " + name(1);
    case ClauseKind::Excludes:
      return name(0) + " excludes " + name(1);
  }
  return {};
}

}  // namespace splforge::fm
