/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef SPLFORGE_IDENTIFIER_HPP
#define SPLFORGE_IDENTIFIER_HPP

#include <string_view>

namespace splforge {

constexpr bool isAsciiAlpha(char c) noexcept {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

constexpr bool isAsciiDigit(char c) noexcept { return c >= '0' && c <= '9'; }

constexpr bool isIdentifierChar(char c) noexcept {
  return isAsciiAlpha(c) || isAsciiDigit(c) || c == '_';
}

/// [A-Za-z][A-Za-z0-9_]*
constexpr bool isIdentifier(std::string_view s) noexcept {
  if (s.empty() || !isAsciiAlpha(s.front())) {
    return false;
  }
  for (char c : s) {
    if (!isIdentifierChar(c)) {
      return false;
    }
  }
  return true;
}

}  // namespace splforge

#endif  // SPLFORGE_IDENTIFIER_HPP
