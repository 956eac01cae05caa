/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "splforge/derive/product.hpp"
#include "splforge/error.hpp"

#include <charconv>

namespace splforge::derive {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    out += (i ? "," : "") + items[i];
  }
  return out;
}

std::vector<std::string> split(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    out.emplace_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) {
      return out;
    }
    start = comma + 1;
  }
}

class ManifestReader {
public:
  explicit ManifestReader(std::string_view text) : text_(text) {}

  ProductManifest run() {
    ProductManifest m;
    m.productName = std::string(field(nextLine(), "manifest "));
    std::string_view model = field(nextLine(), "model ");
    std::size_t space = model.rfind(" v");
    if (space == std::string_view::npos || space == 0) {
      fail("expected 'model <name> v<version>'");
    }
    m.modelName = std::string(model.substr(0, space));
    m.version = number(model.substr(space + 2));
    m.features = list(field(nextLine(), "features: "));

    std::string_view line = nextLine();
    while (line.starts_with("module ")) {
      std::string_view rest = line.substr(7);
      std::size_t sep = rest.find(" layers=");
      if (sep == std::string_view::npos || sep == 0) {
        fail("expected 'module <id> layers=<layers>'");
      }
      ManifestModule module{std::string(rest.substr(0, sep)), {}};
      for (const std::string& layer : list(rest.substr(sep + 8))) {
        auto parsed = fm::parseLayer(layer);
        if (!parsed) {
          fail("unknown layer '" + layer + "'");
        }
        module.layers.insert(*parsed);
      }
      m.modules.push_back(std::move(module));
      line = nextLine();
    }
    if (line.starts_with("languages: ")) {
      m.languages = list(field(line, "languages: "));
      line = nextLine();
    }
    m.cycleCount = std::size_t(number(field(line, "cycles: ")));
    if (pos_ != text_.size()) {
      ++lineNo_;
      fail("unexpected content after 'cycles'");
    }
    return m;
  }

private:
  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorCode::Syntax,
                "manifest line " + std::to_string(lineNo_) + ": " + message);
  }

  std::string_view nextLine() {
    ++lineNo_;
    if (pos_ >= text_.size()) {
      fail("unexpected end of manifest");
    }
    std::size_t end = text_.find('\n', pos_);
    if (end == std::string_view::npos) {
      fail("missing final newline");
    }
    std::string_view line = text_.substr(pos_, end - pos_);
    pos_ = end + 1;
    return line;
  }

  std::string_view field(std::string_view line, std::string_view key) const {
    if (!line.starts_with(key)) {
      std::string found(line.substr(0, line.find(' ')));
      fail("expected '" + std::string(key.substr(0, key.find_last_not_of(' ') + 1)) +
           "', found '" + found + "'");
    }
    std::string_view value = line.substr(key.size());
    if (value.empty()) {
      fail("empty value for '" + std::string(key) + "'");
    }
    return value;
  }

  std::vector<std::string> list(std::string_view value) const {
    std::vector<std::string> items = split(value);
    for (const std::string& item : items) {
      if (item.empty()) {
        fail("empty list item");
      }
    }
    return items;
  }

  int number(std::string_view text) const {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0 ||
        (text.size() > 1 && text[0] == '0')) {
      fail("malformed number '" + std::string(text) + "'");
    }
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int lineNo_ = 0;
};

}  // namespace

std::string writeManifest(const ProductManifest& manifest) {
  std::string out;
  out += "manifest " + manifest.productName + "\n";
  out += "model " + manifest.modelName + " v" + std::to_string(manifest.version) + "\n";
  out += "features: " + join(manifest.features) + "\n";
  for (const ManifestModule& m : manifest.modules) {
    out += "module " + m.moduleId + " layers=" + m.layers.str() + "\n";
  }
  if (!manifest.languages.empty()) {
    out += "languages: " + join(manifest.languages) + "\n";
  }
  out += "cycles: " + std::to_string(manifest.cycleCount) + "\n";
  return out;
}

ProductManifest readManifest(std::string_view text) { return ManifestReader(text).run(); }

}  // namespace splforge::derive
