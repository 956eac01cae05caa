/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef SPLFORGE_DSL_FORMAT_HPP
#define SPLFORGE_DSL_FORMAT_HPP

#include "splforge/dsl/diagnostic.hpp"
#include "splforge/fm/analysis.hpp"
#include "splforge/fm/model.hpp"

#include <string>
#include <string_view>

namespace splforge::dsl {

/// Parses the `.fm` feature-model language:
///
///   model WebSPL
///   feature WebSPL => module "web-spl" {
///     mandatory feature Internationalization {
///       or group Languages { PtBR, EnUS }
///       feature PtBR
///       feature EnUS
///     }
///     optional feature DataExport @v4 => module "data-export" layers Service,DAO
///   }
///   requires DataExport DataManagement
///
/// On failure the result carries at least one Error diagnostic and no model.
ParseResult<fm::FeatureModel> parseModel(std::string_view text,
                                         std::string_view file = "<input>");

/// Canonical text: two-space indentation, children in declaration order, each
/// group line right before its first member, constraints last and sorted.
std::string serializeModel(const fm::FeatureModel& model);

/// Parses a `.cfg` file: `+Name` selects, `-Name` deselects, `#` comments.
ParseResult<fm::Configuration> parseConfiguration(std::string_view text,
                                                  const fm::FeatureModel& model,
                                                  std::string_view file = "<input>");

/// `+` lines sorted by name, then `-` lines sorted by name.
std::string serializeConfiguration(const fm::Configuration& config,
                                   const fm::FeatureModel& model);

}  // namespace splforge::dsl

#endif  // SPLFORGE_DSL_FORMAT_HPP
