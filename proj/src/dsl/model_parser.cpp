/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "lexer.hpp"
#include "splforge/dsl/format.hpp"
#include "splforge/error.hpp"

#include <map>
#include <set>

namespace splforge::dsl {

namespace {

using detail::Token;
using detail::TokenKind;

enum class Marker { None, Mandatory, Optional };

struct DeclNode {
  std::string name;
  SourceSpan span;
  Marker marker = Marker::None;
  SourceSpan markerSpan;
  int version = 1;
  std::optional<fm::AssetBinding> asset;
  std::optional<std::size_t> parent;
  std::vector<std::size_t> children;
};

struct GroupNode {
  std::string name;
  SourceSpan span;
  fm::GroupKind kind = fm::GroupKind::Or;
  std::size_t parent = 0;
  std::vector<std::pair<std::string, SourceSpan>> members;
};

struct ConstraintNode {
  fm::ConstraintKind kind = fm::ConstraintKind::Requires;
  SourceSpan span;
  std::pair<std::string, SourceSpan> from;
  std::pair<std::string, SourceSpan> to;
};

// Thrown internally to abandon parsing after a syntax error.
struct SyntaxAbort {};

class Parser {
public:
  Parser(std::vector<Token> tokens, std::string_view file)
      : tokens_(std::move(tokens)), file_(file) {}

  ParseResult<fm::FeatureModel> run();

private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }
  SourceSpan spanOf(const Token& t) const { return {file_, t.line, t.column}; }

  bool atKeyword(std::string_view word, std::size_t ahead = 0) const {
    return peek(ahead).kind == TokenKind::Ident && peek(ahead).text == word;
  }
  void skipNewlines() {
    while (peek().kind == TokenKind::Newline) {
      ++pos_;
    }
  }

  [[noreturn]] void syntaxError(const Token& at, const std::string& message) {
    error(spanOf(at), codes::kSyntax, message);
    throw SyntaxAbort{};
  }
  [[noreturn]] void unexpected(const Token& at, std::string_view expected) {
    std::string found = at.kind == TokenKind::Ident ? "'" + at.text + "'"
                                                    : std::string(tokenKindName(at.kind));
    syntaxError(at, "expected " + std::string(expected) + ", found " + found);
  }
  const Token& expect(TokenKind kind, std::string_view what) {
    if (peek().kind != kind) {
      unexpected(peek(), what);
    }
    return next();
  }
  const Token& expectKeyword(std::string_view word) {
    if (!atKeyword(word)) {
      unexpected(peek(), "'" + std::string(word) + "'");
    }
    return next();
  }

  void error(SourceSpan span, std::string_view code, std::string message) {
    diagnostics_.push_back({Severity::Error, std::move(span), std::move(message),
                            std::string(code)});
  }
  void warning(SourceSpan span, std::string_view code, std::string message) {
    diagnostics_.push_back({Severity::Warning, std::move(span), std::move(message),
                            std::string(code)});
  }

  bool atDecl() const {
    if (atKeyword("feature")) {
      return true;
    }
    return (atKeyword("mandatory") || atKeyword("optional")) && atKeyword("feature", 1);
  }
  bool atGroup() const { return (atKeyword("alt") || atKeyword("or")) && atKeyword("group", 1); }
  bool atConstraint() const { return atKeyword("requires") || atKeyword("excludes"); }

  std::size_t parseDecl(std::optional<std::size_t> parent);
  void parseAsset(DeclNode& decl);
  void parseGroup(std::size_t parent);
  void parseConstraint();
  void check();
  std::optional<fm::FeatureModel> build();

  std::vector<Token> tokens_;
  std::string file_;
  std::size_t pos_ = 0;

  std::string modelName_;
  std::vector<DeclNode> decls_;
  std::vector<GroupNode> groups_;
  std::vector<ConstraintNode> constraints_;
  std::optional<std::size_t> root_;
  std::vector<ParseDiagnostic> diagnostics_;
};

ParseResult<fm::FeatureModel> Parser::run() {
  try {
    skipNewlines();
    expectKeyword("model");
    modelName_ = expect(TokenKind::Ident, "model name").text;
    while (true) {
      skipNewlines();
      if (peek().kind == TokenKind::End) {
        break;
      }
      if (atConstraint()) {
        parseConstraint();
      } else if (atDecl()) {
        std::size_t decl = parseDecl(std::nullopt);
        if (root_) {
          error(decls_[decl].span, codes::kMultipleRoots,
                "second top-level feature '" + decls_[decl].name + "'; root is '" +
                    decls_[*root_].name + "'");
        } else {
          root_ = decl;
        }
      } else {
        unexpected(peek(), "feature declaration or constraint");
      }
    }
  } catch (const SyntaxAbort&) {
    return {std::nullopt, std::move(diagnostics_)};
  }

  if (!root_) {
    error({file_, 1, 1}, codes::kMissingRoot, "model '" + modelName_ + "' declares no feature");
  }
  check();
  ParseResult<fm::FeatureModel> result;
  bool failed = false;
  for (const auto& d : diagnostics_) {
    failed = failed || d.severity == Severity::Error;
  }
  if (!failed) {
    result.value = build();
  }
  result.diagnostics = std::move(diagnostics_);
  return result;
}

std::size_t Parser::parseDecl(std::optional<std::size_t> parent) {
  DeclNode decl;
  if (atKeyword("mandatory") || atKeyword("optional")) {
    decl.markerSpan = spanOf(peek());
    decl.marker = next().text == "mandatory" ? Marker::Mandatory : Marker::Optional;
  }
  expectKeyword("feature");
  const Token& name = expect(TokenKind::Ident, "feature name");
  decl.name = name.text;
  decl.span = spanOf(name);
  decl.parent = parent;
  if (peek().kind == TokenKind::Version) {
    const Token& v = next();
    if (v.version < 1) {
      error(spanOf(v), codes::kInvalidVersion, "version must be at least 1");
    }
    decl.version = v.version;
  }
  if (peek().kind == TokenKind::Arrow) {
    next();
    parseAsset(decl);
  }

  const std::size_t index = decls_.size();
  decls_.push_back(std::move(decl));
  if (parent) {
    decls_[*parent].children.push_back(index);
  }

  if (peek().kind == TokenKind::LBrace) {
    next();
    while (true) {
      skipNewlines();
      if (peek().kind == TokenKind::RBrace) {
        next();
        break;
      }
      if (atGroup()) {
        parseGroup(index);
      } else if (atDecl()) {
        parseDecl(index);
      } else if (atConstraint()) {
        syntaxError(peek(), "constraints must appear at top level, after the feature tree");
      } else {
        unexpected(peek(), "feature declaration, group or '}'");
      }
    }
  }
  return index;
}

void Parser::parseAsset(DeclNode& decl) {
  expectKeyword("module");
  const Token& id = expect(TokenKind::String, "module name string");
  if (id.text.empty()) {
    syntaxError(id, "module name must not be empty");
  }
  fm::AssetBinding binding{id.text, fm::LayerSet::all()};
  if (atKeyword("layer") || atKeyword("layers")) {
    next();
    binding.layers = fm::LayerSet{};
    while (true) {
      const Token& layer = expect(TokenKind::Ident, "layer name");
      auto parsed = fm::parseLayer(layer.text);
      if (!parsed) {
        syntaxError(layer, "unknown layer '" + layer.text +
                               "' (expected XHTML, Controller, Service or DAO)");
      }
      binding.layers.insert(*parsed);
      if (peek().kind != TokenKind::Comma) {
        break;
      }
      next();
    }
  }
  decl.asset = std::move(binding);
}

void Parser::parseGroup(std::size_t parent) {
  GroupNode group;
  const Token& kind = next();
  group.kind = kind.text == "alt" ? fm::GroupKind::Alternative : fm::GroupKind::Or;
  expectKeyword("group");
  const Token& name = expect(TokenKind::Ident, "group name");
  group.name = name.text;
  group.span = spanOf(name);
  group.parent = parent;
  skipNewlines();
  expect(TokenKind::LBrace, "'{'");
  while (true) {
    skipNewlines();
    const Token& member = expect(TokenKind::Ident, "group member name");
    group.members.emplace_back(member.text, spanOf(member));
    skipNewlines();
    if (peek().kind == TokenKind::Comma) {
      next();
      continue;
    }
    expect(TokenKind::RBrace, "',' or '}'");
    break;
  }
  groups_.push_back(std::move(group));
}

void Parser::parseConstraint() {
  ConstraintNode c;
  const Token& keyword = next();
  c.kind = keyword.text == "requires" ? fm::ConstraintKind::Requires : fm::ConstraintKind::Excludes;
  c.span = spanOf(keyword);
  for (auto* end : {&c.from, &c.to}) {
    const Token& t = peek();
    if (t.kind != TokenKind::Ident || t.line != keyword.line) {
      unexpected(t, "feature name on the same line as '" + keyword.text + "'");
    }
    next();
    *end = {t.text, spanOf(t)};
  }
  if (peek().kind != TokenKind::Newline && peek().kind != TokenKind::End) {
    unexpected(peek(), "end of line after constraint");
  }
  constraints_.push_back(std::move(c));
}

void Parser::check() {
  std::map<std::string, std::size_t> byName;
  for (std::size_t i = 0; i < decls_.size(); ++i) {
    auto [it, fresh] = byName.emplace(decls_[i].name, i);
    if (!fresh) {
      error(decls_[i].span, codes::kDuplicateFeature,
            "feature '" + decls_[i].name + "' is already declared at line " +
                std::to_string(decls_[it->second].span.line));
    }
  }

  std::map<std::size_t, std::size_t> groupOfDecl;
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    const GroupNode& group = groups_[g];
    std::set<std::string> seen;
    for (const auto& [member, span] : group.members) {
      if (!seen.insert(member).second) {
        error(span, codes::kInvalidGroup,
              "feature '" + member + "' is listed twice in group '" + group.name + "'");
        continue;
      }
      auto it = byName.find(member);
      if (it == byName.end()) {
        error(span, codes::kUnknownFeature,
              "group '" + group.name + "' names undeclared feature '" + member + "'");
        continue;
      }
      const std::size_t decl = it->second;
      if (decls_[decl].parent != group.parent) {
        error(span, codes::kInvalidGroup,
              "group member '" + member + "' must be declared inside '" +
                  decls_[group.parent].name + "'");
        continue;
      }
      if (auto prior = groupOfDecl.find(decl); prior != groupOfDecl.end()) {
        error(span, codes::kInvalidGroup,
              "feature '" + member + "' already belongs to group '" +
                  groups_[prior->second].name + "'");
        continue;
      }
      groupOfDecl.emplace(decl, g);
    }
    if (seen.size() < 2) {
      error(group.span, codes::kInvalidGroup,
            "group '" + group.name + "' needs at least two distinct members");
    }
  }

  for (std::size_t i = 0; i < decls_.size(); ++i) {
    const DeclNode& d = decls_[i];
    const bool member = groupOfDecl.contains(i);
    if (!d.parent) {
      if (d.marker != Marker::None) {
        error(d.markerSpan, codes::kMarker, "root feature '" + d.name + "' takes no marker");
      }
      continue;
    }
    if (member && d.marker != Marker::None) {
      error(d.markerSpan, codes::kMarker,
            "group member '" + d.name + "' takes no mandatory/optional marker");
    } else if (!member && d.marker == Marker::None) {
      error(d.span, codes::kMarker,
            "feature '" + d.name + "' needs a 'mandatory' or 'optional' marker");
    }
    if (d.version < decls_[*d.parent].version) {
      warning(d.span, codes::kVersionBelowParent,
              "feature '" + d.name + "' (v" + std::to_string(d.version) +
                  ") is older than its parent '" + decls_[*d.parent].name + "' (v" +
                  std::to_string(decls_[*d.parent].version) + ")");
    }
  }

  for (const ConstraintNode& c : constraints_) {
    bool known = true;
    for (const auto* end : {&c.from, &c.to}) {
      if (!byName.contains(end->first)) {
        error(end->second, codes::kUnknownFeature,
              std::string(fm::constraintKindName(c.kind)) + " constraint names undeclared feature '" +
                  end->first + "'");
        known = false;
      }
    }
    if (known && c.from.first == c.to.first) {
      error(c.to.second, codes::kSelfReference,
            std::string(fm::constraintKindName(c.kind)) + " constraint relates '" + c.from.first +
                "' to itself");
    }
  }
}

std::optional<fm::FeatureModel> Parser::build() {
  fm::ModelDraft draft;
  draft.name = modelName_;
  std::set<std::string> members;
  for (const GroupNode& g : groups_) {
    for (const auto& m : g.members) {
      members.insert(m.first);
    }
  }
  for (const DeclNode& d : decls_) {
    fm::FeatureDraft f;
    f.name = d.name;
    if (d.parent) {
      f.parent = decls_[*d.parent].name;
    }
    f.variability = !d.parent                  ? fm::Variability::Mandatory
                    : members.contains(d.name) ? fm::Variability::GroupMember
                    : d.marker == Marker::Mandatory ? fm::Variability::Mandatory
                                                    : fm::Variability::Optional;
    f.version = d.version;
    f.asset = d.asset;
    draft.features.push_back(std::move(f));
  }
  for (const GroupNode& g : groups_) {
    fm::GroupDraft gd{g.name, decls_[g.parent].name, g.kind, {}};
    for (const auto& m : g.members) {
      gd.members.push_back(m.first);
    }
    draft.groups.push_back(std::move(gd));
  }
  for (const ConstraintNode& c : constraints_) {
    draft.constraints.push_back({c.kind, c.from.first, c.to.first});
  }
  try {
    return fm::FeatureModel::fromDraft(draft);
  } catch (const Error& e) {
    error({file_, 1, 1}, codes::kSyntax, e.what());
    return std::nullopt;
  }
}

}  // namespace

ParseResult<fm::FeatureModel> parseModel(std::string_view text, std::string_view file) {
  auto lexed = detail::tokenize(text, file);
  if (lexed.error) {
    return {std::nullopt, {*lexed.error}};
  }
  return Parser(std::move(lexed.tokens), file).run();
}

}  // namespace splforge::dsl
