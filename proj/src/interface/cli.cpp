/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "splforge/interface/cli.hpp"

#include "splforge/derive/product.hpp"
#include "splforge/dsl/format.hpp"
#include "splforge/error.hpp"
#include "splforge/interface/io.hpp"
#include "splforge/interface/service.hpp"
#include "splforge/metrics/report.hpp"

#include <CLI11.hpp>

#include <optional>

namespace splforge::app {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string model;
  std::string config;
  std::optional<int> version;
  std::optional<std::size_t> limit;
  std::string name;
  std::string output;

  std::string dir;
  std::string glob = "*.gsrc";
  int minDupBlock = metrics::kDefaultMinBlock;
  metrics::DebtRules rules;

  std::string baseline;
  std::string spl;
  std::string derived;
  std::string format = "table";

  std::string host = "127.0.0.1";
  int port = 8080;
};

void emit(const Options& o, const std::string& payload, std::ostream& out) {
  if (o.output.empty()) {
    out << payload;
  } else {
    writeFile(o.output, payload);
  }
}

fm::FeatureModel modelAt(const fm::FeatureModel& model, const std::optional<int>& version) {
  return version ? fm::filterByVersion(model, *version) : model;
}

std::string joined(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    out += (i ? "," : "") + names[i];
  }
  return out;
}

int cmdValidate(const Options& o, std::ostream& out, std::ostream& err) {
  const fm::FeatureModel model = loadModel(o.model, err);
  const fm::Configuration config = loadConfiguration(o.config, model, err);
  const fm::ValidationResult result = fm::validate(model, config);
  if (result.valid) {
    out << "valid\n";
    return kExitOk;
  }
  for (const fm::Violation& v : result.violations) {
    out << v.message << '\n';
  }
  return kExitDomain;
}

int cmdCount(const Options& o, std::ostream& out, std::ostream& err) {
  const fm::FeatureModel model = modelAt(loadModel(o.model, err), o.version);
  out << fm::count(model) << '\n';
  return kExitOk;
}

int cmdEnumerate(const Options& o, std::ostream& out, std::ostream& err) {
  const fm::FeatureModel model = modelAt(loadModel(o.model, err), o.version);
  for (const fm::Configuration& c : fm::enumerate(model, o.limit)) {
    out << joined(model.namesOf(c.selected)) << '\n';
  }
  return kExitOk;
}

int cmdPropagate(const Options& o, std::ostream& out, std::ostream& err) {
  const fm::FeatureModel model = loadModel(o.model, err);
  const fm::Configuration config = loadConfiguration(o.config, model, err);
  const fm::PropagationResult result = fm::propagate(model, config);
  out << formatPropagation(result, model);
  return result.conflict ? kExitDomain : kExitOk;
}

int cmdDerive(const Options& o, std::ostream& out, std::ostream& err) {
  const fm::FeatureModel model = loadModel(o.model, err);
  const fm::Configuration config = loadConfiguration(o.config, model, err);
  const std::string name = o.name.empty() ? fs::path(o.config).stem().string() : o.name;
  const derive::ProductManifest manifest =
      derive::deriveProduct(model, config, name, o.version.value_or(model.maxVersion()));
  emit(o, derive::writeManifest(manifest), out);
  if (manifest.cycleCount > 0) {
    err << "error: " << manifest.cycleCount << " module cycle(s) detected\n";
    return kExitDomain;
  }
  return kExitOk;
}

int cmdDiagnose(const Options& o, std::ostream& out, std::ostream& err) {
  const fm::FeatureModel model = modelAt(loadModel(o.model, err), o.version);
  const fm::ModelDiagnostics d = fm::diagnostics(model);
  out << "void: " << (d.isVoid ? "yes" : "no") << '\n';
  out << "products: " << d.productCount << '\n';
  out << "core: " << joined(model.namesOf(d.coreFeatures)) << '\n';
  out << "dead: " << joined(model.namesOf(d.deadFeatures)) << '\n';
  out << "false-optional: " << joined(model.namesOf(d.falseOptional)) << '\n';
  return d.isVoid ? kExitDomain : kExitOk;
}

int cmdFmt(const Options& o, std::ostream& out, std::ostream& err) {
  emit(o, dsl::serializeModel(loadModel(o.model, err)), out);
  return kExitOk;
}

int cmdMeasure(const Options& o, std::ostream& out, std::ostream&) {
  const auto units = metrics::scanDirectory(o.dir, o.glob);
  emit(o, metrics::writeReport(metrics::measure(units, o.minDupBlock, o.rules)), out);
  return kExitOk;
}

int cmdCompare(const Options& o, std::ostream& out, std::ostream&) {
  auto load = [](const std::string& path) { return metrics::readReport(readFile(path)); };
  const metrics::ComparisonReport report =
      metrics::compare(load(o.baseline), load(o.spl), load(o.derived));
  emit(o, o.format == "kv" ? metrics::renderKeyValues(report) : metrics::renderTable(report),
       out);
  return kExitOk;
}

int cmdServe(const Options& o, std::ostream& out, std::ostream& err) {
  const ConfigService service(loadModel(o.model, err));
  HttpServer::serveForever(service, o.host, o.port, out);
  return kExitOk;
}

int exitFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax:
    case ErrorCode::Io:
    case ErrorCode::NonUtf8Input:
    case ErrorCode::InvalidArgument:
    case ErrorCode::UnknownFeature:
    case ErrorCode::DuplicateDecision:
      return kExitUsage;
    default:
      return kExitDomain;
  }
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Feature-model configuration, product derivation and code metrics.", "splforge");
  app.require_subcommand(1);
  Options o;

  auto modelArg = [&o](CLI::App* sub) {
    sub->add_option("model", o.model, "Feature model (.fm)")->required();
  };
  auto configArg = [&o](CLI::App* sub) {
    sub->add_option("config", o.config, "Configuration (.cfg)")->required();
  };
  auto versionOpt = [&o](CLI::App* sub) {
    sub->add_option("--version", o.version, "Restrict to features introduced up to N");
  };

  CLI::App* validate = app.add_subcommand("validate", "Check a configuration");
  modelArg(validate);
  configArg(validate);

  CLI::App* count = app.add_subcommand("count", "Count valid products");
  modelArg(count);
  versionOpt(count);

  CLI::App* enumerate = app.add_subcommand("enumerate", "List valid products");
  modelArg(enumerate);
  versionOpt(enumerate);
  enumerate->add_option("--limit", o.limit, "Stop after K products");

  CLI::App* propagate = app.add_subcommand("propagate", "Show forced decisions");
  modelArg(propagate);
  configArg(propagate);

  CLI::App* derive = app.add_subcommand("derive", "Write a product manifest");
  modelArg(derive);
  configArg(derive);
  versionOpt(derive);
  derive->add_option("--name", o.name, "Product name (default: config file stem)");
  derive->add_option("-o,--output", o.output, "Manifest path (default: stdout)");

  CLI::App* diagnose = app.add_subcommand("diagnose", "Report void, dead and core features");
  modelArg(diagnose);
  versionOpt(diagnose);

  CLI::App* fmt = app.add_subcommand("fmt", "Print a model in canonical form");
  modelArg(fmt);
  fmt->add_option("-o,--output", o.output, "Output path (default: stdout)");

  CLI::App* measure = app.add_subcommand("measure", "Measure a source tree");
  measure->add_option("dir", o.dir, "Source directory")->required();
  measure->add_option("--glob", o.glob, "File name pattern")->capture_default_str();
  measure->add_option("--min-dup-block", o.minDupBlock, "Minimum duplicated lines")
      ->check(CLI::Range(2, 1 << 20))
      ->capture_default_str();
  measure->add_option("--long-fn", o.rules.longFunctionLines, "Long function threshold")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  measure->add_option("--complexity-cap", o.rules.complexityCap, "Complexity threshold")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  measure->add_option("--nesting-cap", o.rules.nestingCap, "Nesting threshold")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  measure->add_option("-o,--output", o.output, "Report path (default: stdout)");

  CLI::App* compare = app.add_subcommand("compare", "Compare three metric reports");
  compare->add_option("--baseline", o.baseline, "Complete application report")->required();
  compare->add_option("--spl", o.spl, "Product line report")->required();
  compare->add_option("--derived", o.derived, "Derived application report")->required();
  compare->add_option("--format", o.format, "table or kv")
      ->check(CLI::IsMember({"table", "kv"}))
      ->capture_default_str();
  compare->add_option("-o,--output", o.output, "Report path (default: stdout)");

  CLI::App* serve = app.add_subcommand("serve", "Serve the configuration API over HTTP");
  modelArg(serve);
  serve->add_option("--host", o.host, "Listen address")->capture_default_str();
  serve->add_option("--port", o.port, "Listen port")
      ->envname("SPLFORGE_PORT")
      ->check(CLI::Range(0, 65535))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmdValidate(o, out, err);
    if (count->parsed()) return cmdCount(o, out, err);
    if (enumerate->parsed()) return cmdEnumerate(o, out, err);
    if (propagate->parsed()) return cmdPropagate(o, out, err);
    if (derive->parsed()) return cmdDerive(o, out, err);
    if (diagnose->parsed()) return cmdDiagnose(o, out, err);
    if (fmt->parsed()) return cmdFmt(o, out, err);
    if (measure->parsed()) return cmdMeasure(o, out, err);
    if (compare->parsed()) return cmdCompare(o, out, err);
    if (serve->parsed()) return cmdServe(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exitFor(e.code());
  }
  return kExitUsage;
}

}  // namespace splforge::app
