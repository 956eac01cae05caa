/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef SPLFORGE_TESTS_ORACLE_HPP
#define SPLFORGE_TESTS_ORACLE_HPP

#include "splforge/fm/model.hpp"

#include <cstdint>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace splforge::testing {

using NameSet = std::set<std::string>;

// Reads the feature tree rules straight off the model, without going through
// the clause encoding.
bool isProduct(const fm::FeatureModel& model, const NameSet& selected);

// Every valid product by trying all 2^n subsets, ordered lexicographically by
// sorted name list.
std::vector<std::vector<std::string>> bruteForceProducts(const fm::FeatureModel& model);

struct RandomModelOptions {
  int minFeatures = 1;
  int maxFeatures = 12;
  int maxConstraints = 4;
  int maxVersion = 3;
  bool bindAssets = true;
};

fm::ModelDraft randomDraft(std::mt19937_64& rng, const RandomModelOptions& options = {});
fm::FeatureModel randomModel(std::mt19937_64& rng, const RandomModelOptions& options = {});

// The reference web product line, built in code rather than parsed.
fm::FeatureModel webSpl();

// All features, names sorted.
std::vector<std::string> allNames(const fm::FeatureModel& model);

std::filesystem::path fixture(const std::string& relative);
std::string slurp(const std::filesystem::path& path);

}  // namespace splforge::testing

#endif  // SPLFORGE_TESTS_ORACLE_HPP
