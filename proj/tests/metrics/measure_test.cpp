/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "splforge/error.hpp"
#include "splforge/metrics/measure.hpp"
#include "support/oracle.hpp"

#include <doctest.h>

using namespace splforge;
using namespace splforge::metrics;

namespace {

std::vector<SourceUnit> corpus(const std::string& dir) {
  return scanDirectory(testing::fixture("metrics/" + dir));
}

}  // namespace

TEST_CASE("repeated stanza inside one file") {
  const auto units = corpus("stanza");
  const DuplicationResult d = detectDuplicates(units);
  CHECK(d.duplicateLines == 12);
  REQUIRE(d.blocks.size() == 1);
  CHECK(d.blocks[0].normalizedLineCount == 6);
  REQUIRE(d.blocks[0].occurrences.size() == 2);
  CHECK(d.blocks[0].occurrences[0] == Occurrence{"report.gsrc", 4, 9});
  CHECK(d.blocks[0].occurrences[1] == Occurrence{"report.gsrc", 18, 23});
}

TEST_CASE("copied file") {
  const auto units = corpus("copy");
  const DuplicationResult d = detectDuplicates(units);
  CHECK(d.duplicateLines == 20);
  REQUIRE(d.blocks.size() == 1);
  CHECK(d.blocks[0].normalizedLineCount == 10);
  CHECK(d.blocks[0].occurrences[0] == Occurrence{"a.gsrc", 1, 10});
  CHECK(d.blocks[0].occurrences[1] == Occurrence{"b.gsrc", 1, 10});
}

TEST_CASE("no repetition") {
  const auto units = corpus("sample");
  const DuplicationResult d = detectDuplicates(units);
  CHECK(d.blocks.empty());
  CHECK(d.duplicateLines == 0);
  CHECK_THROWS_AS(detectDuplicates(units, 1), Error);
}

TEST_CASE("normalization ignores spacing and comments") {
  const std::string a = "a = 1\nb = 2\nc = 3\n";
  const std::string b = "  a   =  1 // x\n\n// gap\nb = 2\n\tc = 3  /* y */\n";
  const std::vector<SourceUnit> units{scanFile(a, "a.gsrc"), scanFile(b, "b.gsrc")};
  const DuplicationResult d = detectDuplicates(units, 3);
  REQUIRE(d.blocks.size() == 1);
  CHECK(d.blocks[0].occurrences[1] == Occurrence{"b.gsrc", 1, 5});
  CHECK(d.duplicateLines == 6);  // physical code lines only
}

TEST_CASE("three copies make one group") {
  const std::string text = "p\nq\nr\ns\n";
  const std::vector<SourceUnit> units{scanFile(text, "c.gsrc"), scanFile(text, "a.gsrc"),
                                      scanFile(text, "b.gsrc")};
  const DuplicationResult d = detectDuplicates(units, 2);
  REQUIRE(d.blocks.size() == 1);
  CHECK(d.blocks[0].occurrences.size() == 3);
  CHECK(d.blocks[0].occurrences[0].path == "a.gsrc");
  CHECK(d.duplicateLines == 12);
}

TEST_CASE("package cycles") {
  SUBCASE("ring of three plus a bystander") {
    const auto units = corpus("ring");
    const PackageGraph g = packageGraph(units);
    CHECK(g.nodes.size() == 4);
    CHECK(g.edges.contains({"ring.a", "ring.b"}));
    CHECK(g.edges.contains({"ring.b", "ring.c"}));
    CHECK(g.edges.contains({"lone", "ring.a"}));
    const PackageCycles c = packageCycles(units);
    CHECK(c.count == 1);
    REQUIRE(c.components.size() == 1);
    CHECK(c.components[0] == std::vector<std::string>{"ring.a", "ring.b", "ring.c"});
  }
  SUBCASE("mutual imports") {
    const std::vector<SourceUnit> units{scanFile("package x\nimport y.Thing\n", "x.gsrc"),
                                        scanFile("package y\nimport x\n", "y.gsrc")};
    CHECK(packageCycles(units).count == 1);
  }
  SUBCASE("acyclic, external and self imports") {
    const std::vector<SourceUnit> units{
        scanFile("package x\nimport y\nimport x.Self\nimport java.util.List\n", "x.gsrc"),
        scanFile("package y\n", "y.gsrc")};
    CHECK(packageCycles(units).count == 0);
    CHECK(packageGraph(units).edges.size() == 1);
  }
}

TEST_CASE("debt rules") {
  SUBCASE("complexity 13") {
    const auto units = corpus("complexity");
    REQUIRE(units[0].functions.size() == 1);
    CHECK(units[0].functions[0].complexity == 13);
    const DebtResult r = computeDebt(units, detectDuplicates(units));
    REQUIRE(r.findings.size() == 1);
    CHECK(r.findings[0].rule == DebtRule::HighComplexity);
    CHECK(r.findings[0].remediationMinutes == 30);
    CHECK(r.minutes == 30);
    CHECK(r.days.str() == "0.1");
  }
  SUBCASE("ten markers and one duplicate pair") {
    const auto units = corpus("todo");
    const DebtResult r = computeDebt(units, detectDuplicates(units));
    CHECK(r.findings.size() == 11);
    CHECK(r.minutes == 115);
    CHECK(r.days.str() == "0.2");
  }
  SUBCASE("clean corpus") {
    const auto units = corpus("ring");
    const DebtResult r = computeDebt(units, detectDuplicates(units));
    CHECK(r.findings.empty());
    CHECK(r.days.str() == "0.0");
  }
  SUBCASE("long and deep functions") {
    std::string body = "function big() {\n";
    for (int i = 0; i < 30; ++i) {
      body += "  x" + std::to_string(i) + " = " + std::to_string(i) + "\n";
    }
    body += "  { { { { { y() } } } } }\n}\n";
    const std::vector<SourceUnit> units{scanFile(body, "big.gsrc")};
    CHECK(units[0].functions[0].effectiveLines == 33);
    CHECK(units[0].functions[0].maxNesting == 5);
    const DebtResult r = computeDebt(units, detectDuplicates(units));
    REQUIRE(r.findings.size() == 2);
    CHECK(r.findings[0].rule == DebtRule::LongFunction);
    CHECK(r.findings[1].rule == DebtRule::DeepNesting);
    CHECK(r.minutes == 35);

    DebtRules relaxed;
    relaxed.longFunctionLines = 40;
    relaxed.nestingCap = 5;
    CHECK(computeDebt(units, detectDuplicates(units), relaxed).findings.empty());
  }
}

TEST_CASE("day rounding is half up") {
  CHECK(debtDays(0).str() == "0.0");
  CHECK(debtDays(23).str() == "0.0");
  CHECK(debtDays(24).str() == "0.1");  // 0.05 exactly
  CHECK(debtDays(480).str() == "1.0");
  CHECK(debtDays(5088).str() == "10.6");
  CHECK(debtDays(5856).str() == "12.2");
}

TEST_CASE("rule names") {
  for (DebtRule r : {DebtRule::LongFunction, DebtRule::HighComplexity, DebtRule::TodoComment,
                     DebtRule::DuplicatedBlock, DebtRule::DeepNesting}) {
    CHECK(parseDebtRule(debtRuleName(r)) == r);
  }
  CHECK_FALSE(parseDebtRule("Nope"));
}
