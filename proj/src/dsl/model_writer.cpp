/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "splforge/dsl/format.hpp"

#include <set>

namespace splforge::dsl {

namespace {

std::string quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out + "\"";
}

class ModelWriter {
public:
  explicit ModelWriter(const fm::FeatureModel& model) : model_(model) {}

  std::string run() {
    out_ = "model " + model_.name() + "\n";
    writeDecl(model_.root(), 0);
    for (const fm::CrossTreeConstraint& c : model_.constraints()) {
      out_ += std::string(fm::constraintKindName(c.kind)) + " " + model_.nameOf(c.from) + " " +
              model_.nameOf(c.to) + "\n";
    }
    return std::move(out_);
  }

private:
  void indent(int depth) { out_.append(std::size_t(depth) * 2, ' '); }

  void writeDecl(fm::FeatureId id, int depth) {
    const fm::Feature& f = model_.feature(id);
    indent(depth);
    if (f.parent) {
      if (f.variability == fm::Variability::Mandatory) {
        out_ += "mandatory ";
      } else if (f.variability == fm::Variability::Optional) {
        out_ += "optional ";
      }
    }
    out_ += "feature " + f.name;
    if (f.version != 1) {
      out_ += " @v" + std::to_string(f.version);
    }
    if (f.asset) {
      out_ += " => module " + quote(f.asset->moduleId);
      if (!f.asset->layers.isAll()) {
        out_ += " layers " + f.asset->layers.str();
      }
    }
    if (f.children.empty()) {
      out_ += "\n";
      return;
    }
    out_ += " {\n";
    std::set<const fm::Group*> written;
    for (fm::FeatureId child : f.children) {
      const fm::Group* group = model_.groupOf(child);
      if (group && written.insert(group).second) {
        indent(depth + 1);
        out_ += std::string(fm::groupKindName(group->kind)) + " group " + group->name + " { ";
        for (std::size_t i = 0; i < group->members.size(); ++i) {
          out_ += (i ? ", " : "") + model_.nameOf(group->members[i]);
        }
        out_ += " }\n";
      }
      writeDecl(child, depth + 1);
    }
    indent(depth);
    out_ += "}\n";
  }

  const fm::FeatureModel& model_;
  std::string out_;
};

}  // namespace

std::string serializeModel(const fm::FeatureModel& model) { return ModelWriter(model).run(); }

}  // namespace splforge::dsl
