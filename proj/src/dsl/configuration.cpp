/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "splforge/dsl/format.hpp"
#include "splforge/identifier.hpp"

#include <map>

namespace splforge::dsl {

ParseResult<fm::Configuration> parseConfiguration(std::string_view text,
                                                  const fm::FeatureModel& model,
                                                  std::string_view file) {
  ParseResult<fm::Configuration> result;
  fm::Configuration config;
  std::map<fm::FeatureId, int> decidedAt;
  auto error = [&](int line, int column, std::string_view code, std::string message) {
    result.diagnostics.push_back({Severity::Error, SourceSpan{std::string(file), line, column},
                                  std::move(message), std::string(code)});
  };

  int lineNo = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = text.substr(start, end - start);
    ++lineNo;
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }

    std::size_t i = line.find_first_not_of(" \t");
    if (i != std::string_view::npos && line[i] != '#') {
      const char sign = line[i];
      if (sign != '+' && sign != '-') {
        error(lineNo, int(i) + 1, codes::kSyntax,
              "expected '+Name' or '-Name', found '" + std::string(line.substr(i)) + "'");
      } else {
        std::size_t nameStart = line.find_first_not_of(" \t", i + 1);
        std::size_t nameEnd = line.find_last_not_of(" \t");
        std::string_view name = nameStart == std::string_view::npos
                                    ? std::string_view{}
                                    : line.substr(nameStart, nameEnd - nameStart + 1);
        const int column = int(nameStart == std::string_view::npos ? i + 1 : nameStart) + 1;
        if (!isIdentifier(name)) {
          error(lineNo, column, codes::kSyntax,
                "expected a feature name after '" + std::string(1, sign) + "'");
        } else if (auto id = model.find(name); !id) {
          error(lineNo, column, codes::kUnknownFeature,
                "unknown feature '" + std::string(name) + "' in model '" + model.name() + "'");
        } else if (auto prior = decidedAt.find(*id); prior != decidedAt.end()) {
          error(lineNo, column, codes::kDuplicateDecision,
                "feature '" + std::string(name) + "' is already decided at line " +
                    std::to_string(prior->second));
        } else {
          decidedAt.emplace(*id, lineNo);
          (sign == '+' ? config.selected : config.deselected).insert(*id);
        }
      }
    }
    if (end == text.size()) {
      break;
    }
    start = end + 1;
  }

  if (!result.hasErrors()) {
    config.refreshTotal(model);
    result.value = std::move(config);
  }
  return result;
}

std::string serializeConfiguration(const fm::Configuration& config,
                                   const fm::FeatureModel& model) {
  std::string out;
  for (const std::string& name : model.namesOf(config.selected)) {
    out += "+" + name + "\n";
  }
  for (const std::string& name : model.namesOf(config.deselected)) {
    out += "-" + name + "\n";
  }
  return out;
}

}  // namespace splforge::dsl
