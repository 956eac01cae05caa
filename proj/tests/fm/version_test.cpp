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

TEST_CASE("version filter of the reference model") {
  const FeatureModel m = testing::webSpl();
  const FeatureModel v1 = filterByVersion(m, 1);
  CHECK(v1.size() == 7);
  CHECK_FALSE(v1.find("UserManagement"));
  CHECK(v1.constraints().empty());
  const FeatureModel v3 = filterByVersion(m, 3);
  CHECK(v3.size() == 9);
  CHECK(v3.constraints().size() == 1);
  CHECK(filterByVersion(m, 4) == m);
  CHECK(filterByVersion(m, 99) == m);
}

TEST_CASE("version filter errors") {
  const FeatureModel m = ModelBuilder("M", "R", 2).optional("R", "A", 3).build();
  CHECK_THROWS_AS(filterByVersion(m, 0), Error);
  try {
    filterByVersion(m, 1);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RootRemoved);
  }
}

TEST_CASE("groups shrink and dissolve") {
  const FeatureModel m = ModelBuilder("M", "R")
                             .group("R", GroupKind::Alternative, "G", {"A", "B"})
                             .group("R", GroupKind::Or, "H", {"C", "D", "E"})
                             .build();
  ModelDraft d = m.toDraft();
  for (FeatureDraft& f : d.features) {
    if (f.name == "B" || f.name == "E") {
      f.version = 2;
    }
  }
  const FeatureModel v1 = filterByVersion(FeatureModel::fromDraft(d), 1);
  REQUIRE(v1.groups().size() == 1);
  CHECK(v1.groups()[0].name == "H");
  CHECK(v1.groups()[0].members.size() == 2);
  CHECK(v1.feature(*v1.find("A")).variability == Variability::Optional);
  CHECK(count(v1) == 2 * 3);
}

TEST_CASE("subtree goes with its parent") {
  const FeatureModel m = ModelBuilder("M", "R").optional("R", "A", 2).optional("A", "B", 1).build();
  const FeatureModel v1 = filterByVersion(m, 1);
  CHECK(v1.size() == 1);
}
