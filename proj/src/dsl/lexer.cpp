/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "lexer.hpp"

#include "splforge/identifier.hpp"

namespace splforge::dsl {

std::string ParseDiagnostic::str() const {
  std::string out = span.file + ":" + std::to_string(span.line) + ":" +
                    std::to_string(span.column) + ": ";
  out += severity == Severity::Error ? "error " : "warning ";
  out += code + ": " + message;
  return out;
}

namespace detail {

std::string_view tokenKindName(TokenKind kind) noexcept {
  switch (kind) {
    case TokenKind::Ident: return "identifier";
    case TokenKind::String: return "string";
    case TokenKind::Version: return "version";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::Comma: return "','";
    case TokenKind::Arrow: return "'=>'";
    case TokenKind::Newline: return "end of line";
    case TokenKind::End: return "end of input";
  }
  return "?";
}

LexResult tokenize(std::string_view text, std::string_view file) {
  LexResult result;
  int line = 1;
  int column = 1;
  std::size_t i = 0;

  auto fail = [&](int l, int c, std::string message) {
    result.error = ParseDiagnostic{Severity::Error, SourceSpan{std::string(file), l, c},
                                   std::move(message), std::string(codes::kSyntax)};
  };
  auto push = [&](TokenKind kind, std::string body, int l, int c) {
    Token t;
    t.kind = kind;
    t.text = std::move(body);
    t.line = l;
    t.column = c;
    result.tokens.push_back(std::move(t));
  };

  while (i < text.size()) {
    const char ch = text[i];
    const int startLine = line;
    const int startColumn = column;

    if (ch == '\n') {
      push(TokenKind::Newline, {}, startLine, startColumn);
      ++i;
      ++line;
      column = 1;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i;
      ++column;
      continue;
    }
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n') {
        ++i;
        ++column;
      }
      continue;
    }
    if (isAsciiAlpha(ch)) {
      std::size_t j = i;
      while (j < text.size() && isIdentifierChar(text[j])) {
        ++j;
      }
      push(TokenKind::Ident, std::string(text.substr(i, j - i)), startLine, startColumn);
      column += int(j - i);
      i = j;
      continue;
    }
    if (ch == '@') {
      if (i + 1 >= text.size() || text[i + 1] != 'v') {
        fail(startLine, startColumn, "expected '@v' followed by a version number");
        return result;
      }
      std::size_t j = i + 2;
      while (j < text.size() && isAsciiDigit(text[j])) {
        ++j;
      }
      if (j == i + 2 || j - (i + 2) > 9 || (j < text.size() && isIdentifierChar(text[j]))) {
        fail(startLine, startColumn, "malformed version tag");
        return result;
      }
      std::string digits(text.substr(i + 2, j - i - 2));
      push(TokenKind::Version, digits, startLine, startColumn);
      result.tokens.back().version = std::stoi(digits);
      column += int(j - i);
      i = j;
      continue;
    }
    if (ch == '"') {
      std::string body;
      std::size_t j = i + 1;
      int c = column + 1;
      bool closed = false;
      while (j < text.size() && text[j] != '\n') {
        if (text[j] == '\\' && j + 1 < text.size() && text[j + 1] != '\n') {
          body += text[j + 1];
          j += 2;
          c += 2;
          continue;
        }
        if (text[j] == '"') {
          closed = true;
          ++j;
          ++c;
          break;
        }
        body += text[j];
        ++j;
        ++c;
      }
      if (!closed) {
        fail(startLine, startColumn, "unterminated string");
        return result;
      }
      push(TokenKind::String, std::move(body), startLine, startColumn);
      column = c;
      i = j;
      continue;
    }
    if (ch == '=' && i + 1 < text.size() && text[i + 1] == '>') {
      push(TokenKind::Arrow, "=>", startLine, startColumn);
      i += 2;
      column += 2;
      continue;
    }
    if (ch == '{' || ch == '}' || ch == ',') {
      push(ch == '{' ? TokenKind::LBrace : ch == '}' ? TokenKind::RBrace : TokenKind::Comma,
           std::string(1, ch), startLine, startColumn);
      ++i;
      ++column;
      continue;
    }
    fail(startLine, startColumn, "unexpected character '" + std::string(1, ch) + "'");
    return result;
  }
  push(TokenKind::End, {}, line, column);
  return result;
}

}  // namespace detail
}  // namespace splforge::dsl
