/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "splforge/error.hpp"
#include "splforge/metrics/measure.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>

namespace splforge::metrics {

namespace {

struct Position {
  std::size_t file = 0;
  std::size_t index = 0;  // into SourceUnit::normalized

  auto operator<=>(const Position&) const = default;
};

}  // namespace

DuplicationResult detectDuplicates(std::span<const SourceUnit> input, int minBlock) {
  if (minBlock < 2) {
    throw Error(ErrorCode::InvalidArgument,
                "minimum duplicate block must be at least 2 lines, got " +
                    std::to_string(minBlock));
  }
  const std::size_t window = std::size_t(minBlock);

  // Work on a path-sorted view so results do not depend on input order.
  std::vector<const SourceUnit*> units;
  for (const SourceUnit& u : input) {
    units.push_back(&u);
  }
  std::stable_sort(units.begin(), units.end(),
                   [](const SourceUnit* a, const SourceUnit* b) { return a->path < b->path; });

  // Every window of `minBlock` consecutive normalized lines gets a key id.
  std::unordered_map<std::string, std::size_t> keyIds;
  std::vector<std::vector<Position>> occurrencesOf;
  std::vector<std::vector<std::size_t>> keyAt(units.size());
  for (std::size_t f = 0; f < units.size(); ++f) {
    const auto& lines = units[f]->normalized;
    if (lines.size() < window) {
      continue;
    }
    for (std::size_t i = 0; i + window <= lines.size(); ++i) {
      std::string key;
      for (std::size_t k = 0; k < window; ++k) {
        key += lines[i + k].text;
        key += '\n';
      }
      auto [it, fresh] = keyIds.emplace(std::move(key), occurrencesOf.size());
      if (fresh) {
        occurrencesOf.emplace_back();
      }
      occurrencesOf[it->second].push_back({f, i});
      keyAt[f].push_back(it->second);
    }
  }

  auto repeated = [&](std::size_t key) { return occurrencesOf[key].size() >= 2; };
  auto keyOf = [&](Position p) -> std::optional<std::size_t> {
    if (p.index >= keyAt[p.file].size()) {
      return std::nullopt;
    }
    return keyAt[p.file][p.index];
  };
  // True when the windows one step away (delta = +1 / -1) from every
  // occurrence of `key` form exactly one repeated group.
  auto shiftsTogether = [&](std::size_t key, int delta) {
    const auto& occ = occurrencesOf[key];
    std::optional<std::size_t> shared;
    for (const Position& p : occ) {
      if (delta < 0 && p.index == 0) {
        return false;
      }
      auto k = keyOf({p.file, delta < 0 ? p.index - 1 : p.index + 1});
      if (!k || (shared && *shared != *k)) {
        return false;
      }
      shared = k;
    }
    return shared && occurrencesOf[*shared].size() == occ.size() && repeated(*shared);
  };

  DuplicationResult result;
  std::set<std::pair<std::size_t, int>> covered;
  for (std::size_t key = 0; key < occurrencesOf.size(); ++key) {
    if (!repeated(key)) {
      continue;
    }
    for (const Position& p : occurrencesOf[key]) {
      for (std::size_t k = 0; k < window; ++k) {
        covered.emplace(p.file, units[p.file]->normalized[p.index + k].line);
      }
    }
    if (shiftsTogether(key, -1)) {
      continue;  // interior of a longer block
    }
    std::size_t length = window;
    std::size_t cursor = key;
    while (shiftsTogether(cursor, +1)) {
      const Position first = occurrencesOf[cursor].front();
      cursor = *keyOf({first.file, first.index + 1});
      ++length;
    }
    DuplicateBlock block;
    block.normalizedLineCount = int(length);
    for (const Position& p : occurrencesOf[key]) {
      const auto& lines = units[p.file]->normalized;
      block.occurrences.push_back(
          {units[p.file]->path, lines[p.index].line, lines[p.index + length - 1].line});
    }
    std::sort(block.occurrences.begin(), block.occurrences.end());
    result.blocks.push_back(std::move(block));
  }
  std::sort(result.blocks.begin(), result.blocks.end(),
            [](const DuplicateBlock& a, const DuplicateBlock& b) {
              return a.occurrences < b.occurrences;
            });
  result.duplicateLines = std::int64_t(covered.size());
  return result;
}

}  // namespace splforge::metrics
