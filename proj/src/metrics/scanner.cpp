/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "splforge/error.hpp"
#include "splforge/identifier.hpp"
#include "splforge/metrics/source.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace splforge::metrics {

int SourceUnit::complexity() const {
  return std::accumulate(functions.begin(), functions.end(), 0,
                         [](int sum, const FunctionMetric& f) { return sum + f.complexity; });
}

namespace {

bool isSpace(char c) { return c == ' ' || c == '\t' || c == '\f' || c == '\v' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && isSpace(s.front())) {
    s.remove_prefix(1);
  }
  while (!s.empty() && isSpace(s.back())) {
    s.remove_suffix(1);
  }
  return s;
}

std::string collapse(std::string_view s) {
  std::string out;
  bool gap = false;
  for (char c : trim(s)) {
    if (isSpace(c)) {
      gap = true;
      continue;
    }
    if (gap) {
      out += ' ';
      gap = false;
    }
    out += c;
  }
  return out;
}

struct LineParts {
  std::string code;     // comments removed, string literals kept
  std::string masked;   // like code, with string contents blanked
  std::string comment;  // comment text on this line
  bool blank = true;
};

/// Splits lines into code and comment parts. Block comments span lines;
/// string literals end at the closing quote or the end of the line.
class LineSplitter {
public:
  LineParts split(std::string_view line) {
    LineParts parts;
    parts.blank = trim(line).empty();
    std::size_t i = 0;
    char quote = 0;
    while (i < line.size()) {
      const char c = line[i];
      if (inBlock_) {
        std::size_t close = line.find("*/", i);
        if (close == std::string_view::npos) {
          parts.comment.append(line.substr(i));
          break;
        }
        parts.comment.append(line.substr(i, close - i));
        parts.comment += ' ';
        inBlock_ = false;
        i = close + 2;
        continue;
      }
      if (quote) {
        parts.code += c;
        if (c == '\\' && i + 1 < line.size()) {
          parts.code += line[i + 1];
          parts.masked += "  ";
          i += 2;
          continue;
        }
        if (c == quote) {
          quote = 0;
          parts.masked += c;
        } else {
          parts.masked += ' ';
        }
        ++i;
        continue;
      }
      if (c == '/' && i + 1 < line.size() && line[i + 1] == '/') {
        parts.comment.append(line.substr(i + 2));
        break;
      }
      if (c == '/' && i + 1 < line.size() && line[i + 1] == '*') {
        inBlock_ = true;
        parts.code += ' ';
        parts.masked += ' ';
        i += 2;
        continue;
      }
      if (c == '"' || c == '\'') {
        quote = c;
      }
      parts.code += c;
      parts.masked += c;
      ++i;
    }
    return parts;
  }

private:
  bool inBlock_ = false;
};

int countMarkers(std::string_view comment) {
  int found = 0;
  for (std::string_view marker : {std::string_view("TODO"), std::string_view("FIXME")}) {
    std::size_t at = comment.find(marker);
    while (at != std::string_view::npos) {
      const bool leftOk = at == 0 || !isIdentifierChar(comment[at - 1]);
      const std::size_t end = at + marker.size();
      const bool rightOk = end >= comment.size() || !isIdentifierChar(comment[end]);
      if (leftOk && rightOk) {
        ++found;
      }
      at = comment.find(marker, end);
    }
  }
  return found;
}

// "keyword a.b.c" optionally followed by ';'.
std::optional<std::string> dottedDirective(std::string_view code, std::string_view keyword) {
  std::string_view s = trim(code);
  if (!s.starts_with(keyword) || s.size() == keyword.size() || !isSpace(s[keyword.size()])) {
    return std::nullopt;
  }
  s = trim(s.substr(keyword.size()));
  if (!s.empty() && s.back() == ';') {
    s = trim(s.substr(0, s.size() - 1));
  }
  bool expectSegment = true;
  for (char c : s) {
    if (expectSegment) {
      if (!isAsciiAlpha(c) && c != '_') {
        return std::nullopt;
      }
      expectSegment = false;
    } else if (c == '.') {
      expectSegment = true;
    } else if (!isIdentifierChar(c)) {
      return std::nullopt;
    }
  }
  if (s.empty() || expectSegment) {
    return std::nullopt;
  }
  return std::string(s);
}

enum class TokenKind { Word, Decision, Open, Close, Paren, Semicolon, Other };

struct Token {
  TokenKind kind;
  std::string_view text;
};

std::vector<Token> tokenize(std::string_view masked) {
  static constexpr std::string_view kDecisionWords[] = {"if", "for", "while", "case", "catch"};
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < masked.size()) {
    const char c = masked[i];
    if (isAsciiAlpha(c) || c == '_') {
      std::size_t j = i;
      while (j < masked.size() && isIdentifierChar(masked[j])) {
        ++j;
      }
      std::string_view word = masked.substr(i, j - i);
      const bool decision = std::find(std::begin(kDecisionWords), std::end(kDecisionWords),
                                      word) != std::end(kDecisionWords);
      out.push_back({decision ? TokenKind::Decision : TokenKind::Word, word});
      i = j;
      continue;
    }
    if ((c == '&' || c == '|') && i + 1 < masked.size() && masked[i + 1] == c) {
      out.push_back({TokenKind::Decision, masked.substr(i, 2)});
      i += 2;
      continue;
    }
    switch (c) {
      case '?': out.push_back({TokenKind::Decision, masked.substr(i, 1)}); break;
      case '{': out.push_back({TokenKind::Open, masked.substr(i, 1)}); break;
      case '}': out.push_back({TokenKind::Close, masked.substr(i, 1)}); break;
      case '(': out.push_back({TokenKind::Paren, masked.substr(i, 1)}); break;
      case ';': out.push_back({TokenKind::Semicolon, masked.substr(i, 1)}); break;
      default:
        if (!isSpace(c)) {
          out.push_back({TokenKind::Other, masked.substr(i, 1)});
        }
    }
    ++i;
  }
  return out;
}

/// Brace-balanced function tracking across lines.
class FunctionTracker {
public:
  void feed(const std::vector<Token>& tokens, int line) {
    for (std::size_t t = 0; t < tokens.size(); ++t) {
      const Token& tok = tokens[t];
      switch (tok.kind) {
        case TokenKind::Word:
          if (tok.text == "function" && t + 2 < tokens.size() &&
              tokens[t + 1].kind == TokenKind::Word && tokens[t + 2].kind == TokenKind::Paren) {
            pending_ = Pending{std::string(tokens[t + 1].text), line, 0};
            t += 2;
          }
          break;
        case TokenKind::Decision:
          if (pending_) {
            ++pending_->decisions;
          } else if (!open_.empty()) {
            ++open_.back().metric.complexity;
          }
          break;
        case TokenKind::Semicolon:
          pending_.reset();
          break;
        case TokenKind::Open:
          ++depth_;
          if (pending_) {
            Frame frame;
            frame.metric.name = std::move(pending_->name);
            frame.metric.startLine = pending_->line;
            frame.metric.complexity = 1 + pending_->decisions;
            frame.bodyDepth = depth_;
            open_.push_back(std::move(frame));
            pending_.reset();
          } else if (!open_.empty()) {
            Frame& top = open_.back();
            top.metric.maxNesting = std::max(top.metric.maxNesting, depth_ - top.bodyDepth);
          }
          break;
        case TokenKind::Close:
          if (!open_.empty() && depth_ == open_.back().bodyDepth) {
            close(line);
          }
          depth_ = std::max(0, depth_ - 1);
          break;
        default:
          break;
      }
    }
  }

  std::vector<FunctionMetric> finish(int lastLine) {
    while (!open_.empty()) {
      close(lastLine);
    }
    std::stable_sort(done_.begin(), done_.end(), [](const auto& a, const auto& b) {
      return a.startLine < b.startLine;
    });
    return std::move(done_);
  }

private:
  struct Pending {
    std::string name;
    int line = 0;
    int decisions = 0;
  };
  struct Frame {
    FunctionMetric metric;
    int bodyDepth = 0;
  };

  void close(int line) {
    open_.back().metric.endLine = line;
    done_.push_back(std::move(open_.back().metric));
    open_.pop_back();
  }

  int depth_ = 0;
  std::optional<Pending> pending_;
  std::vector<Frame> open_;
  std::vector<FunctionMetric> done_;
};

}  // namespace

SourceUnit scanFile(std::string_view bytes, std::string path) {
  if (!isValidUtf8(bytes)) {
    throw Error(ErrorCode::NonUtf8Input, "'" + path + "' is not valid UTF-8");
  }
  if (bytes.starts_with("\xEF\xBB\xBF")) {
    bytes.remove_prefix(3);
  }

  SourceUnit unit;
  unit.path = std::move(path);
  LineSplitter splitter;
  FunctionTracker functions;
  std::vector<bool> isCode;
  bool packageChecked = false;

  std::size_t start = 0;
  int lineNo = 0;
  while (start < bytes.size()) {
    std::size_t end = bytes.find('\n', start);
    if (end == std::string_view::npos) {
      end = bytes.size();
    }
    std::string_view raw = bytes.substr(start, end - start);
    start = end + 1;
    ++lineNo;

    LineParts parts = splitter.split(raw);
    const bool code = !trim(parts.code).empty();
    isCode.push_back(code);
    if (code) {
      ++unit.codeLines;
      unit.normalized.push_back({lineNo, collapse(parts.code)});
      if (!packageChecked) {
        packageChecked = true;
        if (auto pkg = dottedDirective(parts.code, "package")) {
          unit.packageName = *pkg;
        }
      }
      if (auto imported = dottedDirective(parts.code, "import")) {
        unit.imports.push_back(*imported);
      }
    } else if (parts.blank) {
      ++unit.blankLines;
    } else {
      ++unit.commentLines;
    }
    for (int k = countMarkers(parts.comment); k > 0; --k) {
      unit.todoLines.push_back(lineNo);
    }
    functions.feed(tokenize(parts.masked), lineNo);
  }
  unit.physicalLines = lineNo;
  unit.functions = functions.finish(lineNo);

  std::vector<int> codeBefore(isCode.size() + 1, 0);
  for (std::size_t i = 0; i < isCode.size(); ++i) {
    codeBefore[i + 1] = codeBefore[i] + (isCode[i] ? 1 : 0);
  }
  for (FunctionMetric& f : unit.functions) {
    f.effectiveLines = codeBefore[std::size_t(f.endLine)] - codeBefore[std::size_t(f.startLine - 1)];
  }
  return unit;
}

}  // namespace splforge::metrics
