/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef SPLFORGE_FM_ENCODING_HPP
#define SPLFORGE_FM_ENCODING_HPP

#include "splforge/fm/model.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace splforge::fm {

struct Literal {
  FeatureId feature;
  bool positive = true;

  bool operator==(const Literal&) const = default;
};

/// Origin of a clause. The enumerator order is the order violations are
/// reported in.
enum class ClauseKind {
  Root,                  // {root}
  ParentOfSelected,      // child => parent
  MandatoryChild,        // parent => child
  OrGroup,               // parent => m1 | ... | mk
  AlternativeNone,       // parent => m1 | ... | mk  (alternative group)
  AlternativeExclusive,  // !mi | !mj
  Requires,              // a => b
  Excludes,              // !a | !b
};

std::string_view clauseKindName(ClauseKind kind) noexcept;

struct Clause {
  ClauseKind kind = ClauseKind::Root;
  std::vector<Literal> literals;
  /// Features the clause talks about, in the order used by its message.
  std::vector<FeatureId> features;

  bool satisfiedBy(const std::vector<bool>& selected) const;
};

/// CNF encoding of the FODA semantics of a model.
struct ConstraintSet {
  std::size_t variableCount = 0;
  std::vector<Clause> clauses;
};

ConstraintSet encode(const FeatureModel& model);

/// Human-readable description of an unsatisfied clause.
std::string describeClause(const FeatureModel& model, const Clause& clause);

}  // namespace splforge::fm

#endif  // SPLFORGE_FM_ENCODING_HPP
