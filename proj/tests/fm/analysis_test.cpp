/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "splforge/error.hpp"
#include "splforge/fm/analysis.hpp"
#include "support/oracle.hpp"

#include <doctest.h>

using namespace splforge;
using namespace splforge::fm;

namespace {

std::vector<std::string> names(const FeatureModel& m, const std::set<FeatureId>& ids) {
  return m.namesOf(ids);
}

const std::vector<std::string> kMandatoryOnly{"DataManagement",     "EnUS", "Internationalization",
                                              "ProfileManagement",  "PtBR", "UserProfileControl",
                                              "WebSPL"};

// Root with `n` optional children chained by requires, a model past the
// exhaustive bound whose products are easy to count by hand: n + 1.
FeatureModel chain(int n) {
  ModelBuilder b("Chain", "R");
  for (int i = 0; i < n; ++i) {
    b.optional("R", "C" + std::to_string(100 + i));
    if (i > 0) {
      b.requires_("C" + std::to_string(100 + i), "C" + std::to_string(99 + i));
    }
  }
  return b.build();
}

}  // namespace

TEST_CASE("reference model counts") {
  const FeatureModel m = testing::webSpl();
  CHECK(count(m) == 18);
  CHECK(count(m) == testing::bruteForceProducts(m).size());
  CHECK(count(filterByVersion(m, 1)) == 3);
  CHECK(count(filterByVersion(m, 2)) == 6);
  CHECK(count(filterByVersion(m, 3)) == 9);
}

TEST_CASE("root-only model has one product") {
  CHECK(count(ModelBuilder("M", "R").build()) == 1);
}

TEST_CASE("validate") {
  const FeatureModel m = testing::webSpl();
  SUBCASE("mandatory-only product") {
    const ValidationResult r = validate(m, makeConfiguration(m, kMandatoryOnly));
    CHECK(r.valid);
    CHECK(r.violations.empty());
  }
  SUBCASE("missing mandatory child") {
    auto sel = kMandatoryOnly;
    sel.erase(std::find(sel.begin(), sel.end(), "DataManagement"));
    const ValidationResult r = validate(m, makeConfiguration(m, sel, {"DataManagement"}));
    CHECK_FALSE(r.valid);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].kind == ClauseKind::MandatoryChild);
    CHECK(r.violations[0].message ==
          "DataManagement is a mandatory child of selected parent WebSPL");
  }
  SUBCASE("requires violated, several violations sorted by kind") {
    auto sel = kMandatoryOnly;
    sel.erase(std::find(sel.begin(), sel.end(), "PtBR"));
    sel.erase(std::find(sel.begin(), sel.end(), "EnUS"));
    sel.push_back("PermissionManagement");
    const ValidationResult r = validate(m, makeConfiguration(m, sel));
    REQUIRE(r.violations.size() == 2);
    CHECK(r.violations[0].kind == ClauseKind::OrGroup);
    CHECK(r.violations[1].message == "PermissionManagement requires UserManagement");
  }
  SUBCASE("undecided features count as deselected") {
    const ValidationResult r = validate(m, makeConfiguration(m, {}, {"DataManagement"}));
    CHECK_FALSE(r.valid);
    CHECK(r.violations[0].kind == ClauseKind::Root);
  }
}

TEST_CASE("makeConfiguration rejects bad names") {
  const FeatureModel m = testing::webSpl();
  CHECK_THROWS_AS(makeConfiguration(m, {"Nope"}), Error);
  try {
    makeConfiguration(m, {"PtBR"}, {"PtBR"});
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateDecision);
  }
  const Configuration all = makeConfiguration(m, testing::allNames(m));
  CHECK(all.total);
  CHECK_FALSE(makeConfiguration(m, {"WebSPL"}).total);
}

TEST_CASE("propagate") {
  const FeatureModel m = testing::webSpl();
  SUBCASE("empty") {
    const PropagationResult r = propagate(m, Configuration{});
    CHECK_FALSE(r.conflict);
    CHECK(names(m, r.forcedSelected) ==
          std::vector<std::string>{"DataManagement", "Internationalization", "ProfileManagement",
                                   "UserProfileControl", "WebSPL"});
    CHECK(r.forcedDeselected.empty());
    CHECK(names(m, r.openFeatures) ==
          std::vector<std::string>{"DataExport", "EnUS", "PermissionManagement", "PtBR",
                                   "UserManagement"});
  }
  SUBCASE("permission pulls user management") {
    const PropagationResult r = propagate(m, makeConfiguration(m, {"PermissionManagement"}));
    CHECK(r.forcedSelected.contains(*m.find("UserManagement")));
    CHECK_FALSE(r.forcedSelected.contains(*m.find("PermissionManagement")));
  }
  SUBCASE("deselecting one language forces the other") {
    const PropagationResult r = propagate(m, makeConfiguration(m, {}, {"PtBR"}));
    CHECK(r.forcedSelected.contains(*m.find("EnUS")));
  }
  SUBCASE("deselecting user management forbids permissions") {
    const PropagationResult r = propagate(m, makeConfiguration(m, {}, {"UserManagement"}));
    CHECK(names(m, r.forcedDeselected) == std::vector<std::string>{"PermissionManagement"});
  }
  SUBCASE("conflict") {
    const PropagationResult r =
        propagate(m, makeConfiguration(m, {"PermissionManagement"}, {"UserManagement"}));
    CHECK(r.conflict);
    CHECK(r.forcedSelected.empty());
    CHECK(r.openFeatures.empty());
  }
  SUBCASE("deselected root") {
    CHECK(propagate(m, makeConfiguration(m, {}, {"WebSPL"})).conflict);
  }
}

TEST_CASE("enumerate is lexicographic and agrees with brute force") {
  const FeatureModel m = testing::webSpl();
  const auto products = enumerate(m);
  const auto expected = testing::bruteForceProducts(m);
  REQUIRE(products.size() == expected.size());
  for (std::size_t i = 0; i < products.size(); ++i) {
    CHECK(m.namesOf(products[i].selected) == expected[i]);
    CHECK(products[i].total);
  }
  const auto first = enumerate(m, 4);
  REQUIRE(first.size() == 4);
  CHECK(first[3] == products[3]);
  CHECK(enumerate(m, 0).empty());
}

TEST_CASE("countExtensions") {
  const FeatureModel m = testing::webSpl();
  CHECK(countExtensions(m, Configuration{}) == 18);
  CHECK(countExtensions(m, makeConfiguration(m, {"DataExport"})) == 9);
  CHECK(countExtensions(m, makeConfiguration(m, {"PermissionManagement"}, {"PtBR"})) == 2);
  CHECK(countExtensions(m, makeConfiguration(m, {}, {"WebSPL"})) == 0);
}

TEST_CASE("diagnostics") {
  SUBCASE("reference model") {
    const FeatureModel m = testing::webSpl();
    const ModelDiagnostics d = diagnostics(m);
    CHECK_FALSE(d.isVoid);
    CHECK(d.productCount == 18);
    CHECK(d.deadFeatures.empty());
    CHECK(d.coreFeatures.size() == 5);
    CHECK(d.falseOptional.empty());
  }
  SUBCASE("dead and false optional") {
    const FeatureModel m = ModelBuilder("M", "R")
                               .mandatory("R", "A")
                               .optional("R", "B")
                               .optional("R", "C")
                               .excludes("A", "B")
                               .requires_("A", "C")
                               .build();
    const ModelDiagnostics d = diagnostics(m);
    CHECK(m.namesOf(d.deadFeatures) == std::vector<std::string>{"B"});
    CHECK(m.namesOf(d.falseOptional) == std::vector<std::string>{"C"});
    CHECK(m.namesOf(d.coreFeatures) == std::vector<std::string>{"A", "C", "R"});
    CHECK(d.productCount == 1);
  }
  SUBCASE("void model") {
    const FeatureModel m =
        ModelBuilder("M", "R").mandatory("R", "A").mandatory("R", "B").excludes("A", "B").build();
    const ModelDiagnostics d = diagnostics(m);
    CHECK(d.isVoid);
    CHECK(d.productCount == 0);
    CHECK(d.deadFeatures.size() == 3);
    CHECK(d.coreFeatures.empty());
  }
}

TEST_CASE("beyond the exhaustive bound") {
  const FeatureModel m = chain(30);
  REQUIRE(m.size() > kExactBound);
  CHECK_THROWS_AS(count(m), Error);
  CHECK_THROWS_AS(enumerate(m), Error);

  const auto firstFive = enumerate(m, 5);
  REQUIRE(firstFive.size() == 5);
  // Lexicographic: {C100, R} < {C100, C101, R} < ... ; so the longest prefix
  // chains come first.
  CHECK(m.namesOf(firstFive[0].selected) ==
        std::vector<std::string>{"C100", "C101", "C102", "C103", "C104", "C105", "C106",
                                 "C107", "C108", "C109", "C110", "C111", "C112", "C113",
                                 "C114", "C115", "C116", "C117", "C118", "C119", "C120",
                                 "C121", "C122", "C123", "C124", "C125", "C126", "C127",
                                 "C128", "C129", "R"});
  CHECK(firstFive[1].selected.size() == 30);
  for (const Configuration& c : firstFive) {
    CHECK(validate(m, c).valid);
  }

  const PropagationResult r = propagate(m, makeConfiguration(m, {"C110"}));
  CHECK_FALSE(r.conflict);
  CHECK(r.forcedSelected.size() == 11);  // C100..C109 and R
  CHECK(r.forcedSelected.contains(*m.find("C100")));
  CHECK(propagate(m, makeConfiguration(m, {"C110"}, {"C100"})).conflict);
}
