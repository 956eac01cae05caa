/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef SPLFORGE_METRICS_SOURCE_HPP
#define SPLFORGE_METRICS_SOURCE_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace splforge::metrics {

struct FunctionMetric {
  std::string name;
  int startLine = 0;
  int endLine = 0;
  int effectiveLines = 0;  // code lines between startLine and endLine
  int complexity = 1;      // 1 + decision tokens
  int maxNesting = 0;      // brace depth below the function body

  bool operator==(const FunctionMetric&) const = default;
};

/// A code line after comment removal, trimmed with whitespace runs collapsed.
struct NormalizedLine {
  int line = 0;
  std::string text;

  bool operator==(const NormalizedLine&) const = default;
};

/// Measurements of one `.gsrc` file. Every physical line is exactly one of
/// code, comment or blank; a line mixing code and a comment counts as code.
struct SourceUnit {
  std::string path;
  std::string packageName;
  std::vector<std::string> imports;
  int physicalLines = 0;
  int codeLines = 0;
  int commentLines = 0;
  int blankLines = 0;
  std::vector<FunctionMetric> functions;  // ordered by start line
  std::vector<NormalizedLine> normalized;
  std::vector<int> todoLines;  // one entry per TODO/FIXME marker

  int complexity() const;

  bool operator==(const SourceUnit&) const = default;
};

bool isValidUtf8(std::string_view bytes) noexcept;

/// Measures a source file written in the generic curly-brace language:
/// `//` and `/* */` comments, "..." and '...' strings, `package a.b`,
/// `import a.b.c`, and functions introduced by `function name(`.
/// Decision tokens are if, for, while, case, catch, &&, || and ?.
/// Throws Error(NonUtf8Input).
SourceUnit scanFile(std::string_view bytes, std::string path);

/// Scans every regular file under root whose file name matches the glob,
/// recursively. Paths are stored relative to root with '/' separators and
/// units come back sorted by path. Throws Error(Io).
std::vector<SourceUnit> scanDirectory(const std::filesystem::path& root,
                                      std::string_view glob = "*.gsrc");

}  // namespace splforge::metrics

#endif  // SPLFORGE_METRICS_SOURCE_HPP
