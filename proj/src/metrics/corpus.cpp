/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "splforge/error.hpp"
#include "splforge/metrics/source.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace splforge::metrics {

std::vector<SourceUnit> scanDirectory(const std::filesystem::path& root, std::string_view glob) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw Error(ErrorCode::Io, "'" + root.string() + "' is not a directory");
  }
  const std::string pattern(glob);
  std::vector<fs::path> files;
  for (auto it = fs::recursive_directory_iterator(root, ec); !ec && it != fs::end(it);
       it.increment(ec)) {
    if (it->is_regular_file() &&
        ::fnmatch(pattern.c_str(), it->path().filename().c_str(), 0) == 0) {
      files.push_back(it->path());
    }
  }
  if (ec) {
    throw Error(ErrorCode::Io, "cannot walk '" + root.string() + "': " + ec.message());
  }

  std::vector<SourceUnit> units;
  units.reserve(files.size());
  for (const fs::path& file : files) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
      throw Error(ErrorCode::Io, "cannot read '" + file.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    units.push_back(scanFile(buffer.str(), file.lexically_relative(root).generic_string()));
  }
  std::sort(units.begin(), units.end(),
            [](const SourceUnit& a, const SourceUnit& b) { return a.path < b.path; });
  return units;
}

}  // namespace splforge::metrics
