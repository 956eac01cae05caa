/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "splforge/metrics/measure.hpp"

#include <algorithm>
#include <tuple>

namespace splforge::metrics {

namespace {

constexpr std::pair<DebtRule, std::string_view> kRuleNames[] = {
    {DebtRule::LongFunction, "LongFunction"},
    {DebtRule::HighComplexity, "HighComplexity"},
    {DebtRule::TodoComment, "TodoComment"},
    {DebtRule::DuplicatedBlock, "DuplicatedBlock"},
    {DebtRule::DeepNesting, "DeepNesting"},
};

}  // namespace

std::string_view debtRuleName(DebtRule rule) noexcept {
  for (const auto& [r, name] : kRuleNames) {
    if (r == rule) {
      return name;
    }
  }
  return "?";
}

std::optional<DebtRule> parseDebtRule(std::string_view name) noexcept {
  for (const auto& [r, n] : kRuleNames) {
    if (n == name) {
      return r;
    }
  }
  return std::nullopt;
}

DebtResult computeDebt(std::span<const SourceUnit> units, const DuplicationResult& duplicates,
                       const DebtRules& rules) {
  DebtResult result;
  auto add = [&result](DebtRule rule, const std::string& path, int line, int minutes) {
    result.findings.push_back({rule, path, line, minutes});
  };

  for (const SourceUnit& u : units) {
    for (const FunctionMetric& f : u.functions) {
      if (f.effectiveLines > rules.longFunctionLines) {
        add(DebtRule::LongFunction, u.path, f.startLine, rules.longFunctionMinutes);
      }
      if (f.complexity > rules.complexityCap) {
        add(DebtRule::HighComplexity, u.path, f.startLine,
            (f.complexity - rules.complexityCap) * rules.minutesPerComplexityPoint);
      }
      if (f.maxNesting > rules.nestingCap) {
        add(DebtRule::DeepNesting, u.path, f.startLine, rules.deepNestingMinutes);
      }
    }
    for (int line : u.todoLines) {
      add(DebtRule::TodoComment, u.path, line, rules.todoMinutes);
    }
  }
  for (const DuplicateBlock& block : duplicates.blocks) {
    for (std::size_t i = 1; i < block.occurrences.size(); ++i) {
      add(DebtRule::DuplicatedBlock, block.occurrences[i].path, block.occurrences[i].startLine,
          rules.duplicateOccurrenceMinutes);
    }
  }

  std::sort(result.findings.begin(), result.findings.end(),
            [](const DebtFinding& a, const DebtFinding& b) {
              return std::tie(a.path, a.line, a.rule, a.remediationMinutes) <
                     std::tie(b.path, b.line, b.rule, b.remediationMinutes);
            });
  for (const DebtFinding& f : result.findings) {
    result.minutes += f.remediationMinutes;
  }
  result.days = debtDays(result.minutes);
  return result;
}

}  // namespace splforge::metrics
