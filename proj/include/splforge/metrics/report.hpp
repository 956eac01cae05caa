/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef SPLFORGE_METRICS_REPORT_HPP
#define SPLFORGE_METRICS_REPORT_HPP

#include "splforge/metrics/decimal.hpp"
#include "splforge/metrics/measure.hpp"
#include "splforge/metrics/source.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace splforge::metrics {

struct FileMetrics {
  std::string path;
  std::string packageName;
  int physicalLines = 0;
  int codeLines = 0;
  int commentLines = 0;
  int blankLines = 0;
  int functions = 0;
  int complexity = 0;

  bool operator==(const FileMetrics&) const = default;
};

struct MetricsReport {
  std::vector<FileMetrics> files;  // sorted by path
  std::int64_t totalComplexity = 0;
  Hundredths meanComplexity;  // per file, 0 without files
  std::int64_t totalCodeLines = 0;
  std::int64_t duplicateLines = 0;
  std::int64_t packageCycles = 0;
  std::int64_t debtMinutes = 0;
  Tenths debtDays;
  std::vector<DebtFinding> findings;

  bool operator==(const MetricsReport&) const = default;
};

MetricsReport aggregate(std::span<const SourceUnit> units, const DuplicationResult& duplicates,
                        const PackageCycles& cycles, const DebtResult& debt);

/// Convenience: scan results through every analysis with the given settings.
MetricsReport measure(std::span<const SourceUnit> units, int minBlock = kDefaultMinBlock,
                      const DebtRules& rules = {});

inline constexpr std::string_view kReportFormat = "splforge-metrics-1";

/// Flat `key=value` text. readReport(writeReport(r)) == r and
/// writeReport(readReport(t)) == t for any t produced by writeReport.
std::string writeReport(const MetricsReport& report);

/// Accepts blank lines and '#' comments. Throws Error(Syntax) on unknown or
/// missing keys, malformed numbers, or debt days inconsistent with minutes.
MetricsReport readReport(std::string_view text);

/// One Table-3-shaped row. Values are scaled by 10^decimals.
struct ComparisonRow {
  std::string category;
  std::string metric;
  std::string key;  // machine-readable prefix
  int decimals = 0;
  std::int64_t cwa = 0;
  std::int64_t spl = 0;
  std::int64_t dwa = 0;
  std::int64_t saws = 0;   // spl + dwa
  std::int64_t delta = 0;  // saws - cwa

  bool operator==(const ComparisonRow&) const = default;
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;  // Complexity, Size, Design, Duplicity, Technical Debt

  const ComparisonRow& row(std::string_view key) const;
  /// Debt delta in hours at 8 h/day, in tenths.
  Tenths debtDeltaHours() const;
};

ComparisonReport compare(const MetricsReport& baseline, const MetricsReport& spl,
                         const MetricsReport& derived);

std::string formatValue(std::int64_t scaled, int decimals, bool signedDelta = false);
std::string renderTable(const ComparisonReport& report);
std::string renderKeyValues(const ComparisonReport& report);

}  // namespace splforge::metrics

#endif  // SPLFORGE_METRICS_REPORT_HPP
