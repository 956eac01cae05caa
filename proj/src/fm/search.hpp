/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef SPLFORGE_FM_SEARCH_HPP
#define SPLFORGE_FM_SEARCH_HPP

#include "splforge/fm/encoding.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace splforge::fm::detail {

using Mask = std::uint32_t;

/// Exhaustive search over every assignment of a model with at most 32
/// variables. Variables are assigned in id (pre-order) order and each clause is
/// checked as soon as its highest variable is assigned, which prunes whole
/// subtrees below a deselected parent.
class ExactSearch {
public:
  explicit ExactSearch(const ConstraintSet& constraints);

  /// Calls visit(mask) for every satisfying assignment with all bits of
  /// fixedOn set and no bit of fixedOff set.
  void run(Mask fixedOn, Mask fixedOff, const std::function<void(Mask)>& visit) const;

  std::size_t variableCount() const noexcept { return n_; }

private:
  struct PackedClause {
    Mask positive = 0;
    Mask negative = 0;
  };

  void descend(std::size_t var, Mask assignment, Mask fixedOn, Mask fixedOff,
               const std::function<void(Mask)>& visit) const;

  std::size_t n_ = 0;
  std::vector<std::vector<PackedClause>> checkedAt_;
  std::vector<bool> hasEmptyClause_;
};

enum class Value : std::int8_t { Unknown = -1, False = 0, True = 1 };

/// Partial assignment solver used beyond the exact bound: fixpoint unit
/// propagation plus a small DPLL search for satisfiability checks.
class UnitSolver {
public:
  explicit UnitSolver(const ConstraintSet& constraints);

  /// Extends assignment to the unit-propagation fixpoint. Returns false on a
  /// falsified clause; the assignment is then unspecified.
  bool propagate(std::vector<Value>& assignment) const;

  /// True when some total extension of assignment satisfies every clause.
  bool satisfiable(std::vector<Value> assignment) const;

private:
  const ConstraintSet& constraints_;
};

/// Valid total assignments in lexicographic order of sorted feature-name
/// lists, produced by a name-ordered search with satisfiability pruning.
/// Works on models of any size; stops after `limit` results.
std::vector<std::vector<bool>> enumerateLexicographic(const FeatureModel& model,
                                                      const ConstraintSet& constraints,
                                                      std::size_t limit);

}  // namespace splforge::fm::detail

#endif  // SPLFORGE_FM_SEARCH_HPP
