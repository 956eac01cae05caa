/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "splforge/interface/io.hpp"

#include "splforge/dsl/format.hpp"

#include <fstream>
#include <sstream>

namespace splforge::app {

std::string readFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw UsageError("cannot read '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void writeFile(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << contents) || !out.flush()) {
    throw UsageError("cannot write '" + path.string() + "'");
  }
}

namespace {

template <class T>
T unwrap(dsl::ParseResult<T> result, std::ostream& diagnostics, const std::string& what) {
  for (const dsl::ParseDiagnostic& d : result.diagnostics) {
    diagnostics << d.str() << '\n';
  }
  if (!result.value) {
    throw UsageError("invalid " + what);
  }
  return std::move(*result.value);
}

}  // namespace

fm::FeatureModel loadModel(const std::filesystem::path& path, std::ostream& diagnostics) {
  return unwrap(dsl::parseModel(readFile(path), path.string()), diagnostics,
                "model '" + path.string() + "'");
}

fm::Configuration loadConfiguration(const std::filesystem::path& path,
                                    const fm::FeatureModel& model, std::ostream& diagnostics) {
  return unwrap(dsl::parseConfiguration(readFile(path), model, path.string()), diagnostics,
                "configuration '" + path.string() + "'");
}

std::string formatPropagation(const fm::PropagationResult& result,
                              const fm::FeatureModel& model) {
  if (result.conflict) {
    return "conflict\n";
  }
  std::string out;
  for (const std::string& name : model.namesOf(result.forcedSelected)) {
    out += "+" + name + "\n";
  }
  for (const std::string& name : model.namesOf(result.forcedDeselected)) {
    out += "-" + name + "\n";
  }
  out += "# open:";
  const auto open = model.namesOf(result.openFeatures);
  for (std::size_t i = 0; i < open.size(); ++i) {
    out += (i == 0 ? " " : ",") + open[i];
  }
  out += "\n";
  return out;
}

}  // namespace splforge::app
