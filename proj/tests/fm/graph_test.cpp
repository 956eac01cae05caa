/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "splforge/graph/scc.hpp"

#include <doctest.h>

using namespace splforge::graph;

TEST_CASE("cyclic components") {
  const std::set<std::string> nodes{"a", "b", "c", "d", "e"};
  CHECK(cyclicComponents(nodes, {}).empty());
  CHECK(cyclicComponents(nodes, {{"a", "a"}}).empty());
  const auto ring = cyclicComponents(nodes, {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"d", "a"}});
  REQUIRE(ring.size() == 1);
  CHECK(ring[0] == std::vector<std::string>{"a", "b", "c"});
  const auto two =
      cyclicComponents(nodes, {{"e", "d"}, {"d", "e"}, {"a", "b"}, {"b", "a"}, {"b", "c"}});
  REQUIRE(two.size() == 2);
  CHECK(two[0] == std::vector<std::string>{"a", "b"});
  CHECK(two[1] == std::vector<std::string>{"d", "e"});
}

TEST_CASE("dependency order puts targets first") {
  const std::set<std::string> nodes{"app", "core", "db", "ui"};
  const auto order = dependencyOrder(nodes, {{"app", "core"}, {"ui", "app"}, {"db", "core"}});
  REQUIRE(order);
  CHECK(*order == std::vector<std::string>{"core", "app", "db", "ui"});
  CHECK_FALSE(dependencyOrder(nodes, {{"app", "db"}, {"db", "app"}}));
  CHECK(dependencyOrder(nodes, {{"app", "app"}}));
}

TEST_CASE("large chain does not overflow the stack") {
  std::set<std::string> nodes;
  NamedEdges edges;
  for (int i = 0; i < 20000; ++i) {
    nodes.insert("n" + std::to_string(i));
    edges.emplace("n" + std::to_string(i), "n" + std::to_string((i + 1) % 20000));
  }
  const auto c = cyclicComponents(nodes, edges);
  REQUIRE(c.size() == 1);
  CHECK(c[0].size() == 20000);
}
