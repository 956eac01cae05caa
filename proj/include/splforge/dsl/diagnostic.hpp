/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef SPLFORGE_DSL_DIAGNOSTIC_HPP
#define SPLFORGE_DSL_DIAGNOSTIC_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace splforge::dsl {

struct SourceSpan {
  std::string file;
  int line = 1;
  int column = 1;

  bool operator==(const SourceSpan&) const = default;
};

enum class Severity { Error, Warning };

// Stable diagnostic codes. Numbers never change once published.
namespace codes {
inline constexpr std::string_view kUnknownFeature = "E001";
inline constexpr std::string_view kSyntax = "E002";
inline constexpr std::string_view kDuplicateFeature = "E003";
inline constexpr std::string_view kMultipleRoots = "E004";
inline constexpr std::string_view kSelfReference = "E005";
inline constexpr std::string_view kInvalidGroup = "E006";
inline constexpr std::string_view kMarker = "E007";
inline constexpr std::string_view kMissingRoot = "E008";
inline constexpr std::string_view kInvalidVersion = "E009";
inline constexpr std::string_view kDuplicateDecision = "E010";
inline constexpr std::string_view kVersionBelowParent = "W001";
}  // namespace codes

struct ParseDiagnostic {
  Severity severity = Severity::Error;
  SourceSpan span;
  std::string message;
  std::string code;

  /// "file:line:col: error E001: message"
  std::string str() const;
};

template <class T>
struct ParseResult {
  std::optional<T> value;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return value.has_value(); }
  bool hasErrors() const {
    for (const auto& d : diagnostics) {
      if (d.severity == Severity::Error) {
        return true;
      }
    }
    return false;
  }
};

}  // namespace splforge::dsl

#endif  // SPLFORGE_DSL_DIAGNOSTIC_HPP
