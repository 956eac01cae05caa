/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "splforge/error.hpp"
#include "splforge/metrics/report.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace splforge::metrics {

namespace {

ComparisonRow makeRow(std::string category, std::string metric, std::string key, int decimals,
                      std::int64_t cwa, std::int64_t spl, std::int64_t dwa) {
  ComparisonRow row;
  row.category = std::move(category);
  row.metric = std::move(metric);
  row.key = std::move(key);
  row.decimals = decimals;
  row.cwa = cwa;
  row.spl = spl;
  row.dwa = dwa;
  row.saws = spl + dwa;
  row.delta = row.saws - cwa;
  return row;
}

}  // namespace

ComparisonReport compare(const MetricsReport& baseline, const MetricsReport& spl,
                         const MetricsReport& derived) {
  ComparisonReport out;
  out.rows.push_back(makeRow("Complexity", "Complexity per class", "complexity", 0,
                             baseline.totalComplexity, spl.totalComplexity,
                             derived.totalComplexity));
  out.rows.push_back(makeRow("Size", "Number of Code Lines", "size", 0, baseline.totalCodeLines,
                             spl.totalCodeLines, derived.totalCodeLines));
  out.rows.push_back(makeRow("Design", "Package Cycles", "design", 0, baseline.packageCycles,
                             spl.packageCycles, derived.packageCycles));
  out.rows.push_back(makeRow("Duplicity", "Duplicate Lines", "duplicity", 0,
                             baseline.duplicateLines, spl.duplicateLines,
                             derived.duplicateLines));
  out.rows.push_back(makeRow("Technical Debt", "Technical Debt Level", "technical_debt", 1,
                             baseline.debtDays.raw, spl.debtDays.raw, derived.debtDays.raw));
  return out;
}

const ComparisonRow& ComparisonReport::row(std::string_view key) const {
  for (const ComparisonRow& r : rows) {
    if (r.key == key) {
      return r;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "no comparison row '" + std::string(key) + "'");
}

Tenths ComparisonReport::debtDeltaHours() const {
  return Tenths::fromRaw(row("technical_debt").delta * (kMinutesPerWorkday / 60));
}

std::string formatValue(std::int64_t scaled, int decimals, bool signedDelta) {
  std::string text;
  if (decimals == 0) {
    text = std::to_string(scaled < 0 ? -scaled : scaled);
  } else {
    text = Tenths::fromRaw(scaled < 0 ? -scaled : scaled).str();
  }
  if (scaled < 0) {
    return "-" + text;
  }
  if (signedDelta && scaled > 0) {
    return "+" + text;
  }
  if (signedDelta) {
    return "0";
  }
  return text;
}

std::string renderTable(const ComparisonReport& report) {
  using Cells = std::array<std::string, 7>;
  std::vector<Cells> lines;
  lines.push_back({"Category", "Metric", "CWA", "SPL", "DWA", "SAWS", "Delta"});
  for (const ComparisonRow& r : report.rows) {
    lines.push_back({r.category, r.metric, formatValue(r.cwa, r.decimals),
                     formatValue(r.spl, r.decimals), formatValue(r.dwa, r.decimals),
                     formatValue(r.saws, r.decimals), formatValue(r.delta, r.decimals, true)});
  }
  std::array<std::size_t, 7> width{};
  for (const Cells& cells : lines) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      width[c] = std::max(width[c], cells[c].size());
    }
  }
  std::ostringstream out;
  for (const Cells& cells : lines) {
    std::string line;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const std::size_t pad = width[c] - cells[c].size();
      if (c < 2) {
        line += cells[c] + std::string(pad, ' ');
      } else {
        line += std::string(pad, ' ') + cells[c];
      }
      if (c + 1 < cells.size()) {
        line += "  ";
      }
    }
    while (!line.empty() && line.back() == ' ') {
      line.pop_back();
    }
    out << line << '\n';
  }
  const ComparisonRow& debt = report.row("technical_debt");
  out << "\nTechnical debt delta: " << formatValue(debt.delta, 1, true) << " days ("
      << formatValue(report.debtDeltaHours().raw, 1, true) << " hours at 8 h/day)\n";
  return out.str();
}

std::string renderKeyValues(const ComparisonReport& report) {
  std::ostringstream out;
  for (const ComparisonRow& r : report.rows) {
    out << r.key << ".cwa=" << formatValue(r.cwa, r.decimals) << '\n';
    out << r.key << ".spl=" << formatValue(r.spl, r.decimals) << '\n';
    out << r.key << ".dwa=" << formatValue(r.dwa, r.decimals) << '\n';
    out << r.key << ".saws=" << formatValue(r.saws, r.decimals) << '\n';
    out << r.key << ".delta=" << formatValue(r.delta, r.decimals, true) << '\n';
  }
  out << "technical_debt.delta_hours=" << formatValue(report.debtDeltaHours().raw, 1, true)
      << '\n';
  return out.str();
}

}  // namespace splforge::metrics
