/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef SPLFORGE_INTERFACE_IO_HPP
#define SPLFORGE_INTERFACE_IO_HPP

#include "splforge/fm/analysis.hpp"
#include "splforge/fm/model.hpp"

#include <filesystem>
#include <ostream>
#include <string>

namespace splforge::app {

/// Raised for problems the caller must fix before retrying: missing files,
/// unparsable input, bad flags. Maps to exit status 2.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string readFile(const std::filesystem::path& path);
void writeFile(const std::filesystem::path& path, const std::string& contents);

/// Parses a `.fm` file. Warnings go to `diagnostics`; errors throw UsageError.
fm::FeatureModel loadModel(const std::filesystem::path& path, std::ostream& diagnostics);

fm::Configuration loadConfiguration(const std::filesystem::path& path,
                                    const fm::FeatureModel& model, std::ostream& diagnostics);

/// Forced decisions as `.cfg` lines followed by a `# open:` line, or
/// "conflict".
std::string formatPropagation(const fm::PropagationResult& result, const fm::FeatureModel& model);

}  // namespace splforge::app

#endif  // SPLFORGE_INTERFACE_IO_HPP
