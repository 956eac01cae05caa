/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "splforge/error.hpp"
#include "splforge/metrics/report.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace splforge::metrics {

MetricsReport aggregate(std::span<const SourceUnit> units, const DuplicationResult& duplicates,
                        const PackageCycles& cycles, const DebtResult& debt) {
  MetricsReport r;
  for (const SourceUnit& u : units) {
    FileMetrics f;
    f.path = u.path;
    f.packageName = u.packageName;
    f.physicalLines = u.physicalLines;
    f.codeLines = u.codeLines;
    f.commentLines = u.commentLines;
    f.blankLines = u.blankLines;
    f.functions = int(u.functions.size());
    f.complexity = u.complexity();
    r.totalComplexity += f.complexity;
    r.totalCodeLines += f.codeLines;
    r.files.push_back(std::move(f));
  }
  std::sort(r.files.begin(), r.files.end(),
            [](const FileMetrics& a, const FileMetrics& b) { return a.path < b.path; });
  if (!r.files.empty()) {
    r.meanComplexity = Hundredths::ratio(r.totalComplexity, std::int64_t(r.files.size()));
  }
  r.duplicateLines = duplicates.duplicateLines;
  r.packageCycles = cycles.count;
  r.debtMinutes = debt.minutes;
  r.debtDays = debt.days;
  r.findings = debt.findings;
  return r;
}

MetricsReport measure(std::span<const SourceUnit> units, int minBlock, const DebtRules& rules) {
  DuplicationResult dups = detectDuplicates(units, minBlock);
  PackageCycles cycles = packageCycles(units);
  DebtResult debt = computeDebt(units, dups, rules);
  return aggregate(units, dups, cycles, debt);
}

std::string writeReport(const MetricsReport& r) {
  std::ostringstream out;
  out << "format=" << kReportFormat << '\n';
  out << "files=" << r.files.size() << '\n';
  out << "total.complexity=" << r.totalComplexity << '\n';
  out << "mean.complexity=" << r.meanComplexity.str() << '\n';
  out << "total.code_lines=" << r.totalCodeLines << '\n';
  out << "duplicate_lines=" << r.duplicateLines << '\n';
  out << "package_cycles=" << r.packageCycles << '\n';
  out << "debt.minutes=" << r.debtMinutes << '\n';
  out << "debt.days=" << r.debtDays.str() << '\n';
  for (std::size_t i = 0; i < r.files.size(); ++i) {
    const FileMetrics& f = r.files[i];
    const std::string p = "file." + std::to_string(i) + ".";
    out << p << "path=" << f.path << '\n';
    out << p << "package=" << f.packageName << '\n';
    out << p << "physical=" << f.physicalLines << '\n';
    out << p << "code=" << f.codeLines << '\n';
    out << p << "comment=" << f.commentLines << '\n';
    out << p << "blank=" << f.blankLines << '\n';
    out << p << "functions=" << f.functions << '\n';
    out << p << "complexity=" << f.complexity << '\n';
  }
  out << "findings=" << r.findings.size() << '\n';
  for (std::size_t i = 0; i < r.findings.size(); ++i) {
    const DebtFinding& f = r.findings[i];
    const std::string p = "finding." + std::to_string(i) + ".";
    out << p << "rule=" << debtRuleName(f.rule) << '\n';
    out << p << "path=" << f.path << '\n';
    out << p << "line=" << f.line << '\n';
    out << p << "minutes=" << f.remediationMinutes << '\n';
  }
  return out.str();
}

namespace {

class KeyValues {
public:
  explicit KeyValues(std::string_view text) {
    int lineNo = 0;
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view line = text.substr(start, end - start);
      start = end + 1;
      ++lineNo;
      if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
      }
      if (line.empty() || line.front() == '#') {
        continue;
      }
      const std::size_t eq = line.find('=');
      if (eq == std::string_view::npos || eq == 0) {
        fail(lineNo, "expected key=value");
      }
      std::string key(line.substr(0, eq));
      if (!values_.emplace(key, Entry{std::string(line.substr(eq + 1)), lineNo}).second) {
        fail(lineNo, "duplicate key '" + key + "'");
      }
    }
  }

  std::string text(const std::string& key) {
    auto it = values_.find(key);
    if (it == values_.end()) {
      throw Error(ErrorCode::Syntax, "metrics: missing key '" + key + "'");
    }
    used_.push_back(key);
    return it->second.value;
  }

  std::int64_t integer(const std::string& key, std::int64_t min = 0) {
    const std::string v = text(key);
    std::int64_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || out < min) {
      fail(values_.at(key).line, "bad integer for '" + key + "': '" + v + "'");
    }
    return out;
  }

  template <class D>
  D decimal(const std::string& key) {
    const std::string v = text(key);
    auto d = D::parse(v);
    if (!d || d->raw < 0 || d->str() != v) {
      fail(values_.at(key).line, "bad decimal for '" + key + "': '" + v + "'");
    }
    return *d;
  }

  void requireAllUsed() const {
    if (used_.size() == values_.size()) {
      return;
    }
    for (const auto& [key, entry] : values_) {
      if (std::find(used_.begin(), used_.end(), key) == used_.end()) {
        fail(entry.line, "unknown key '" + key + "'");
      }
    }
  }

  [[noreturn]] static void fail(int line, const std::string& message) {
    throw Error(ErrorCode::Syntax, "metrics:" + std::to_string(line) + ": " + message);
  }

private:
  struct Entry {
    std::string value;
    int line = 0;
  };
  std::map<std::string, Entry> values_;
  std::vector<std::string> used_;
};

}  // namespace

MetricsReport readReport(std::string_view text) {
  KeyValues kv(text);
  if (kv.text("format") != kReportFormat) {
    throw Error(ErrorCode::Syntax, "metrics: unsupported format '" + kv.text("format") + "'");
  }
  MetricsReport r;
  const std::int64_t files = kv.integer("files");
  r.totalComplexity = kv.integer("total.complexity");
  r.meanComplexity = kv.decimal<Hundredths>("mean.complexity");
  r.totalCodeLines = kv.integer("total.code_lines");
  r.duplicateLines = kv.integer("duplicate_lines");
  r.packageCycles = kv.integer("package_cycles");
  r.debtMinutes = kv.integer("debt.minutes");
  r.debtDays = kv.decimal<Tenths>("debt.days");
  if (r.debtDays != debtDays(r.debtMinutes)) {
    throw Error(ErrorCode::Syntax, "metrics: debt.days " + r.debtDays.str() +
                                       " does not match debt.minutes " +
                                       std::to_string(r.debtMinutes));
  }
  for (std::int64_t i = 0; i < files; ++i) {
    const std::string p = "file." + std::to_string(i) + ".";
    FileMetrics f;
    f.path = kv.text(p + "path");
    f.packageName = kv.text(p + "package");
    f.physicalLines = int(kv.integer(p + "physical"));
    f.codeLines = int(kv.integer(p + "code"));
    f.commentLines = int(kv.integer(p + "comment"));
    f.blankLines = int(kv.integer(p + "blank"));
    f.functions = int(kv.integer(p + "functions"));
    f.complexity = int(kv.integer(p + "complexity"));
    r.files.push_back(std::move(f));
  }
  const std::int64_t findings = kv.integer("findings");
  for (std::int64_t i = 0; i < findings; ++i) {
    const std::string p = "finding." + std::to_string(i) + ".";
    DebtFinding f;
    const std::string rule = kv.text(p + "rule");
    auto parsed = parseDebtRule(rule);
    if (!parsed) {
      throw Error(ErrorCode::Syntax, "metrics: unknown debt rule '" + rule + "'");
    }
    f.rule = *parsed;
    f.path = kv.text(p + "path");
    f.line = int(kv.integer(p + "line", 1));
    f.remediationMinutes = int(kv.integer(p + "minutes", 1));
    r.findings.push_back(std::move(f));
  }
  kv.requireAllUsed();
  return r;
}

}  // namespace splforge::metrics
