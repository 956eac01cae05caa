/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "splforge/dsl/format.hpp"
#include "support/oracle.hpp"

#include <doctest.h>

using namespace splforge;
using namespace splforge::dsl;

TEST_CASE("parse configuration") {
  const fm::FeatureModel m = testing::webSpl();
  const auto r = parseConfiguration("# comment\n\n+PtBR\r\n-  EnUS\n+ WebSPL\n", m);
  REQUIRE(r.ok());
  CHECK(m.namesOf(r.value->selected) == std::vector<std::string>{"PtBR", "WebSPL"});
  CHECK(m.namesOf(r.value->deselected) == std::vector<std::string>{"EnUS"});
  CHECK_FALSE(r.value->total);
}

TEST_CASE("configuration errors") {
  const fm::FeatureModel m = testing::webSpl();
  auto only = [&](std::string_view text) {
    const auto r = parseConfiguration(text, m, "c.cfg");
    CHECK_FALSE(r.ok());
    REQUIRE(r.diagnostics.size() >= 1);
    return r.diagnostics[0];
  };
  CHECK(only("PtBR\n").code == "E002");
  CHECK(only("+\n").code == "E002");
  CHECK(only("+Pt BR\n").code == "E002");
  const ParseDiagnostic unknown = only("+PtBR\n+Klingon\n");
  CHECK(unknown.code == "E001");
  CHECK(unknown.span.line == 2);
  CHECK(unknown.span.column == 2);
  CHECK(only("+PtBR\n-PtBR\n").code == "E010");
  CHECK(only("+PtBR\n+PtBR\n").code == "E010");
}

TEST_CASE("serialize configuration") {
  const fm::FeatureModel m = testing::webSpl();
  const fm::Configuration c = fm::makeConfiguration(m, {"WebSPL", "EnUS"}, {"PtBR", "DataExport"});
  const std::string text = serializeConfiguration(c, m);
  CHECK(text == "+EnUS\n+WebSPL\n-DataExport\n-PtBR\n");
  const auto back = parseConfiguration(text, m);
  REQUIRE(back.ok());
  CHECK(*back.value == c);
  CHECK(serializeConfiguration(fm::Configuration{}, m).empty());
}

TEST_CASE("fixture configurations") {
  const fm::FeatureModel m = testing::webSpl();
  for (const char* name : {"mandatory-only.cfg", "all-features.cfg"}) {
    const auto r =
        parseConfiguration(testing::slurp(testing::fixture(std::string("webspl/") + name)), m);
    REQUIRE(r.ok());
    CHECK(fm::validate(m, *r.value).valid);
  }
}
