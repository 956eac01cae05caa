/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef SPLFORGE_METRICS_MEASURE_HPP
#define SPLFORGE_METRICS_MEASURE_HPP

#include "splforge/graph/scc.hpp"
#include "splforge/metrics/decimal.hpp"
#include "splforge/metrics/source.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace splforge::metrics {

inline constexpr int kDefaultMinBlock = 6;

struct Occurrence {
  std::string path;
  int startLine = 0;  // physical lines
  int endLine = 0;

  auto operator<=>(const Occurrence&) const = default;
};

/// A run of normalized lines repeated at every listed occurrence.
struct DuplicateBlock {
  int normalizedLineCount = 0;
  std::vector<Occurrence> occurrences;  // sorted, at least two

  bool operator==(const DuplicateBlock&) const = default;
};

struct DuplicationResult {
  std::vector<DuplicateBlock> blocks;
  /// Distinct (path, physical line) positions covered by any block.
  std::int64_t duplicateLines = 0;
};

/// Finds maximal runs of at least minBlock normalized lines that repeat
/// within or across files. Blank and comment-only lines are skipped.
/// Throws Error(InvalidArgument) when minBlock < 2.
DuplicationResult detectDuplicates(std::span<const SourceUnit> units,
                                   int minBlock = kDefaultMinBlock);

/// Package import graph: one node per declared package; p -> q when a file
/// of p imports q or a member of q (q declared in the corpus, q != p).
struct PackageGraph {
  std::set<std::string> nodes;
  graph::NamedEdges edges;
};

PackageGraph packageGraph(std::span<const SourceUnit> units);

struct PackageCycles {
  std::int64_t count = 0;
  std::vector<std::vector<std::string>> components;
};

PackageCycles packageCycles(std::span<const SourceUnit> units);

enum class DebtRule { LongFunction, HighComplexity, TodoComment, DuplicatedBlock, DeepNesting };

std::string_view debtRuleName(DebtRule rule) noexcept;
std::optional<DebtRule> parseDebtRule(std::string_view name) noexcept;

/// Remediation rulebook. Thresholds are exclusive: a function is long when
/// its effective lines exceed longFunctionLines.
struct DebtRules {
  int longFunctionLines = 30;
  int longFunctionMinutes = 20;
  int complexityCap = 10;
  int minutesPerComplexityPoint = 10;
  int todoMinutes = 10;
  int duplicateOccurrenceMinutes = 15;
  int nestingCap = 4;
  int deepNestingMinutes = 15;
};

struct DebtFinding {
  DebtRule rule = DebtRule::TodoComment;
  std::string path;
  int line = 0;
  int remediationMinutes = 0;

  auto operator<=>(const DebtFinding&) const = default;
};

inline constexpr int kMinutesPerWorkday = 8 * 60;

/// minutes / 480 rounded half up to one decimal.
constexpr Tenths debtDays(std::int64_t minutes) {
  return Tenths::ratio(minutes, kMinutesPerWorkday);
}

struct DebtResult {
  std::vector<DebtFinding> findings;  // sorted by (path, line, rule)
  std::int64_t minutes = 0;
  Tenths days;
};

DebtResult computeDebt(std::span<const SourceUnit> units, const DuplicationResult& duplicates,
                       const DebtRules& rules = {});

}  // namespace splforge::metrics

#endif  // SPLFORGE_METRICS_MEASURE_HPP
