/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "search.hpp"

#include <algorithm>

namespace splforge::fm::detail {

ExactSearch::ExactSearch(const ConstraintSet& constraints)
    : n_(constraints.variableCount), checkedAt_(n_), hasEmptyClause_(1, false) {
  for (const Clause& clause : constraints.clauses) {
    if (clause.literals.empty()) {
      hasEmptyClause_[0] = true;
      continue;
    }
    PackedClause packed;
    std::uint32_t last = 0;
    for (const Literal& lit : clause.literals) {
      Mask bit = Mask(1) << lit.feature.value;
      (lit.positive ? packed.positive : packed.negative) |= bit;
      last = std::max(last, lit.feature.value);
    }
    checkedAt_[last].push_back(packed);
  }
}

void ExactSearch::run(Mask fixedOn, Mask fixedOff, const std::function<void(Mask)>& visit) const {
  if (hasEmptyClause_[0] || (fixedOn & fixedOff) != 0) {
    return;
  }
  if (n_ == 0) {
    visit(0);
    return;
  }
  descend(0, 0, fixedOn, fixedOff, visit);
}

void ExactSearch::descend(std::size_t var, Mask assignment, Mask fixedOn, Mask fixedOff,
                          const std::function<void(Mask)>& visit) const {
  const Mask bit = Mask(1) << var;
  for (int value = 1; value >= 0; --value) {
    if ((value == 1 && (fixedOff & bit)) || (value == 0 && (fixedOn & bit))) {
      continue;
    }
    const Mask next = value ? (assignment | bit) : assignment;
    bool ok = true;
    for (const PackedClause& c : checkedAt_[var]) {
      if ((next & c.positive) == 0 && (~next & c.negative) == 0) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      continue;
    }
    if (var + 1 == n_) {
      visit(next);
    } else {
      descend(var + 1, next, fixedOn, fixedOff, visit);
    }
  }
}

UnitSolver::UnitSolver(const ConstraintSet& constraints) : constraints_(constraints) {}

bool UnitSolver::propagate(std::vector<Value>& assignment) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Clause& clause : constraints_.clauses) {
      const Literal* unassigned = nullptr;
      std::size_t open = 0;
      bool satisfied = false;
      for (const Literal& lit : clause.literals) {
        Value v = assignment[lit.feature.value];
        if (v == Value::Unknown) {
          unassigned = &lit;
          ++open;
        } else if ((v == Value::True) == lit.positive) {
          satisfied = true;
          break;
        }
      }
      if (satisfied) {
        continue;
      }
      if (open == 0) {
        return false;
      }
      if (open == 1) {
        assignment[unassigned->feature.value] = unassigned->positive ? Value::True : Value::False;
        changed = true;
      }
    }
  }
  return true;
}

bool UnitSolver::satisfiable(std::vector<Value> assignment) const {
  if (!propagate(assignment)) {
    return false;
  }
  auto it = std::find(assignment.begin(), assignment.end(), Value::Unknown);
  if (it == assignment.end()) {
    return true;
  }
  const std::size_t var = std::size_t(it - assignment.begin());
  for (Value choice : {Value::True, Value::False}) {
    std::vector<Value> branch = assignment;
    branch[var] = choice;
    if (satisfiable(std::move(branch))) {
      return true;
    }
  }
  return false;
}

namespace {

struct LexSearch {
  const ConstraintSet& constraints;
  const UnitSolver& solver;
  const std::vector<FeatureId>& order;  // features sorted by name
  std::size_t limit;
  std::vector<std::vector<bool>> out;

  bool allSatisfied(const std::vector<bool>& selected) const {
    return std::all_of(constraints.clauses.begin(), constraints.clauses.end(),
                       [&](const Clause& c) { return c.satisfiedBy(selected); });
  }

  // Sorted-name sequences compare as: the sequence ending here first, then
  // every continuation through order[i], then continuations skipping it.
  void visit(std::size_t i, std::vector<Value>& assignment, bool mayStop) {
    if (out.size() >= limit) {
      return;
    }
    if (mayStop) {
      std::vector<bool> selected(assignment.size(), false);
      bool consistent = true;
      for (std::size_t v = 0; v < assignment.size(); ++v) {
        selected[v] = assignment[v] == Value::True;
      }
      for (std::size_t k = i; k < order.size(); ++k) {
        if (assignment[order[k].value] == Value::True) {
          consistent = false;
        }
      }
      if (consistent && allSatisfied(selected)) {
        out.push_back(std::move(selected));
        if (out.size() >= limit) {
          return;
        }
      }
    }
    if (i == order.size()) {
      return;
    }
    const std::uint32_t var = order[i].value;
    const Value saved = assignment[var];
    for (Value choice : {Value::True, Value::False}) {
      if (saved != Value::Unknown && saved != choice) {
        continue;
      }
      std::vector<Value> branch = assignment;
      branch[var] = choice;
      if (!solver.satisfiable(branch)) {
        continue;
      }
      visit(i + 1, branch, choice == Value::True);
      if (out.size() >= limit) {
        return;
      }
    }
  }
};

}  // namespace

std::vector<std::vector<bool>> enumerateLexicographic(const FeatureModel& model,
                                                      const ConstraintSet& constraints,
                                                      std::size_t limit) {
  UnitSolver solver(constraints);
  std::vector<FeatureId> order = model.allSortedByName();
  LexSearch search{constraints, solver, order, limit, {}};
  std::vector<Value> assignment(model.size(), Value::Unknown);
  if (limit > 0 && solver.satisfiable(assignment)) {
    search.visit(0, assignment, true);
  }
  return std::move(search.out);
}

}  // namespace splforge::fm::detail
