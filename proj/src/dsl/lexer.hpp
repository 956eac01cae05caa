/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef SPLFORGE_DSL_LEXER_HPP
#define SPLFORGE_DSL_LEXER_HPP

#include "splforge/dsl/diagnostic.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace splforge::dsl::detail {

enum class TokenKind { Ident, String, Version, LBrace, RBrace, Comma, Arrow, Newline, End };

std::string_view tokenKindName(TokenKind kind) noexcept;

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;  // identifier, unescaped string body, or version digits
  int version = 0;
  int line = 1;
  int column = 1;
};

struct LexResult {
  std::vector<Token> tokens;  // always ends with End when no error
  std::optional<ParseDiagnostic> error;
};

/// Splits `.fm` text into tokens. `#` starts a comment running to end of line;
/// newlines are kept as tokens since they terminate constraints.
LexResult tokenize(std::string_view text, std::string_view file);

}  // namespace splforge::dsl::detail

#endif  // SPLFORGE_DSL_LEXER_HPP
