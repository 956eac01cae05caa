/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "splforge/graph/scc.hpp"
#include "splforge/metrics/report.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace splforge;
using namespace splforge::metrics;

namespace {

// Lines drawn from a small pool so that repeats happen often.
std::string randomFile(std::mt19937_64& rng, int lines) {
  static const char* const kPool[] = {
      "x = 1",       "y = x + 2",   "  x   =   1 ", "call(x, y)", "// just a note",
      "",            "return y",    "z = a ? b : c", "if (a && b) { go() }",
      "/* block",    "still */ w = 3", "s = \"// text\"", "// TODO later", "q = 'if'",
  };
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kPool) - 1);
  std::string out;
  for (int i = 0; i < lines; ++i) {
    out += kPool[pick(rng)];
    out += (rng() % 5 == 0) ? "\r\n" : "\n";
  }
  return out;
}

std::vector<SourceUnit> randomCorpus(std::mt19937_64& rng) {
  std::vector<SourceUnit> units;
  const int files = int(rng() % 4) + 1;
  for (int f = 0; f < files; ++f) {
    units.push_back(scanFile(randomFile(rng, int(rng() % 30)), "f" + std::to_string(f) + ".gsrc"));
  }
  return units;
}

std::int64_t duplicateOracle(const std::vector<SourceUnit>& units, std::size_t window) {
  std::set<std::pair<std::string, int>> covered;
  auto same = [&](const SourceUnit& a, std::size_t i, const SourceUnit& b, std::size_t j) {
    for (std::size_t k = 0; k < window; ++k) {
      if (a.normalized[i + k].text != b.normalized[j + k].text) {
        return false;
      }
    }
    return true;
  };
  for (const SourceUnit& a : units) {
    for (const SourceUnit& b : units) {
      if (a.normalized.size() < window || b.normalized.size() < window) {
        continue;
      }
      for (std::size_t i = 0; i + window <= a.normalized.size(); ++i) {
        for (std::size_t j = 0; j + window <= b.normalized.size(); ++j) {
          if ((&a == &b && i == j) || !same(a, i, b, j)) {
            continue;
          }
          for (std::size_t k = 0; k < window; ++k) {
            covered.emplace(a.path, a.normalized[i + k].line);
          }
        }
      }
    }
  }
  return std::int64_t(covered.size());
}

}  // namespace

TEST_CASE("every line is exactly one of code, comment or blank") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const SourceUnit u = scanFile(randomFile(rng, int(rng() % 40)), "r.gsrc");
    REQUIRE(u.codeLines + u.commentLines + u.blankLines == u.physicalLines);
    REQUIRE(std::size_t(u.codeLines) == u.normalized.size());
    REQUIRE(u.complexity() >= int(u.functions.size()));
    for (const FunctionMetric& f : u.functions) {
      REQUIRE(f.complexity >= 1);
    }
  }
}

TEST_CASE("duplicate lines match a pairwise window oracle") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 300; ++i) {
    const auto units = randomCorpus(rng);
    for (int minBlock : {2, 3, 6}) {
      const DuplicationResult d = detectDuplicates(units, minBlock);
      REQUIRE(d.duplicateLines == duplicateOracle(units, std::size_t(minBlock)));
      std::int64_t code = 0;
      for (const SourceUnit& u : units) code += u.codeLines;
      REQUIRE(d.duplicateLines <= code);
      for (const DuplicateBlock& b : d.blocks) {
        REQUIRE(b.normalizedLineCount >= minBlock);
        REQUIRE(b.occurrences.size() >= 2);
        REQUIRE(std::is_sorted(b.occurrences.begin(), b.occurrences.end()));
      }
    }
  }
}

TEST_CASE("a copied file is entirely duplicated") {
  std::mt19937_64 rng(33);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    auto units = randomCorpus(rng);
    const SourceUnit& original = units[rng() % units.size()];
    if (original.codeLines < kDefaultMinBlock) {
      continue;
    }
    SourceUnit copy = original;
    copy.path = "zz-copy.gsrc";
    units.push_back(copy);
    const DuplicationResult d = detectDuplicates(units);
    std::set<std::pair<std::string, int>> covered;
    for (const DuplicateBlock& b : d.blocks) {
      for (const Occurrence& o : b.occurrences) {
        for (int line = o.startLine; line <= o.endLine; ++line) {
          covered.emplace(o.path, line);
        }
      }
    }
    for (const SourceUnit* u : {&units[units.size() - 1], &copy}) {
      for (const NormalizedLine& l : u->normalized) {
        REQUIRE(covered.contains({u->path, l.line}));
      }
    }
    for (const NormalizedLine& l : original.normalized) {
      REQUIRE(covered.contains({original.path, l.line}));
    }
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("package cycles match mutual reachability") {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 300; ++i) {
    const int n = int(rng() % 7) + 1;
    std::vector<SourceUnit> units;
    const auto size = static_cast<std::size_t>(n);
    std::vector<std::vector<bool>> reach(size, std::vector<bool>(size));
    for (int p = 0; p < n; ++p) {
      std::string text = "package p" + std::to_string(p) + "\n";
      for (int q = 0; q < n; ++q) {
        if (q != p && rng() % 4 == 0) {
          text += "import p" + std::to_string(q) + ".Thing\n";
          reach[std::size_t(p)][std::size_t(q)] = true;
        }
      }
      units.push_back(scanFile(text, "p" + std::to_string(p) + ".gsrc"));
    }
    for (std::size_t k = 0; k < reach.size(); ++k)
      for (std::size_t a = 0; a < reach.size(); ++a)
        for (std::size_t b = 0; b < reach.size(); ++b)
          if (reach[a][k] && reach[k][b]) reach[a][b] = true;
    std::set<std::set<std::size_t>> classes;
    for (std::size_t a = 0; a < reach.size(); ++a) {
      std::set<std::size_t> cls{a};
      for (std::size_t b = 0; b < reach.size(); ++b) {
        if (reach[a][b] && reach[b][a]) cls.insert(b);
      }
      if (cls.size() >= 2) classes.insert(cls);
    }
    const PackageCycles c = packageCycles(units);
    REQUIRE(c.count == std::int64_t(classes.size()));
    const PackageGraph g = packageGraph(units);
    REQUIRE((c.count == 0) == graph::dependencyOrder(g.nodes, g.edges).has_value());
  }
}

TEST_CASE("debt is the sum of its findings") {
  std::mt19937_64 rng(55);
  for (int i = 0; i < 300; ++i) {
    const auto units = randomCorpus(rng);
    const DuplicationResult d = detectDuplicates(units);
    const DebtResult r = computeDebt(units, d);
    std::int64_t sum = 0;
    for (const DebtFinding& f : r.findings) {
      REQUIRE(f.remediationMinutes > 0);
      sum += f.remediationMinutes;
    }
    REQUIRE(r.minutes == sum);
    REQUIRE(r.days == Tenths::ratio(sum, 480));
  }
}

TEST_CASE("removing a marker removes exactly its cost") {
  std::mt19937_64 rng(66);
  for (int i = 0; i < 200; ++i) {
    std::string text = randomFile(rng, 15);
    const std::vector<SourceUnit> before{scanFile(text + "// TODO extra\n", "t.gsrc")};
    const std::vector<SourceUnit> after{scanFile(text, "t.gsrc")};
    const DebtResult a = computeDebt(before, detectDuplicates(before));
    const DebtResult b = computeDebt(after, detectDuplicates(after));
    REQUIRE(a.minutes - b.minutes == DebtRules{}.todoMinutes);
  }
}

TEST_CASE("comparison is additive for arbitrary reports") {
  std::mt19937_64 rng(77);
  auto randomReport = [&rng] {
    MetricsReport r;
    r.totalComplexity = std::int64_t(rng() % 5000);
    r.totalCodeLines = std::int64_t(rng() % 50000);
    r.packageCycles = std::int64_t(rng() % 5);
    r.duplicateLines = std::int64_t(rng() % 1000);
    r.debtMinutes = std::int64_t(rng() % 100000);
    r.debtDays = debtDays(r.debtMinutes);
    return r;
  };
  for (int i = 0; i < 500; ++i) {
    const MetricsReport a = randomReport();
    const MetricsReport b = randomReport();
    const MetricsReport c = randomReport();
    const ComparisonReport cmp = compare(a, b, c);
    REQUIRE(cmp.rows.size() == 5);
    for (const ComparisonRow& row : cmp.rows) {
      REQUIRE(row.saws == row.spl + row.dwa);
      REQUIRE(row.delta == row.saws - row.cwa);
    }
    REQUIRE(cmp.row("technical_debt").saws == b.debtDays.raw + c.debtDays.raw);
  }
}

TEST_CASE("aggregates do not depend on file order") {
  std::mt19937_64 rng(88);
  for (int i = 0; i < 200; ++i) {
    auto units = randomCorpus(rng);
    const MetricsReport r = measure(units);
    std::shuffle(units.begin(), units.end(), rng);
    REQUIRE(measure(units) == r);
    REQUIRE(readReport(writeReport(r)) == r);
  }
}
