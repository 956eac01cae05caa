/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "splforge/interface/cli.hpp"
#include "support/oracle.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace splforge;
using namespace splforge::app;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = runCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& relative) { return testing::fixture(relative).string(); }

std::string scratch(const std::string& name, const std::string& contents) {
  const auto dir = std::filesystem::temp_directory_path() / "splforge-cli-test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path, std::ios::binary) << contents;
  return path.string();
}

const std::string kModel = fx("webspl/webspl.fm");

}  // namespace

TEST_CASE("count and enumerate") {
  CHECK(run({"count", kModel}).out == "18\n");
  CHECK(run({"count", kModel, "--version", "1"}).out == "3\n");
  CHECK(run({"count", scratch("root.fm", "model M\nfeature R\n")}).out == "1\n");

  const Run e = run({"enumerate", kModel, "--version", "1"});
  CHECK(e.code == 0);
  CHECK(e.out ==
        "DataManagement,EnUS,Internationalization,ProfileManagement,PtBR,UserProfileControl,"
        "WebSPL\n"
        "DataManagement,EnUS,Internationalization,ProfileManagement,UserProfileControl,WebSPL\n"
        "DataManagement,Internationalization,ProfileManagement,PtBR,UserProfileControl,WebSPL\n");
  const Run limited = run({"enumerate", kModel, "--limit", "2"});
  CHECK(std::count(limited.out.begin(), limited.out.end(), '\n') == 2);
}

TEST_CASE("validate") {
  const Run ok = run({"validate", kModel, fx("webspl/all-features.cfg")});
  CHECK(ok.code == 0);
  CHECK(ok.out == "valid\n");
  CHECK(run({"validate", kModel, fx("webspl/mandatory-only.cfg")}).code == 0);
  const Run bad = run({"validate", kModel, fx("webspl/no-data-management.cfg")});
  CHECK(bad.code == 1);
  CHECK_FALSE(bad.out.empty());
  CHECK(run({"validate", kModel, "missing.cfg"}).code == 2);
  CHECK(run({"validate", "missing.fm", fx("webspl/all-features.cfg")}).code == 2);
  const Run unknown = run({"validate", kModel, scratch("unknown.cfg", "+Klingon\n")});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("E001") != std::string::npos);
}

TEST_CASE("propagate") {
  const Run r = run({"propagate", kModel, fx("webspl/permission.cfg")});
  CHECK(r.code == 0);
  CHECK(r.out.find("+UserManagement\n") != std::string::npos);
  const Run empty = run({"propagate", kModel, scratch("empty.cfg", "")});
  CHECK(empty.out ==
        "+DataManagement\n+Internationalization\n+ProfileManagement\n+UserProfileControl\n"
        "+WebSPL\n# open: DataExport,EnUS,PermissionManagement,PtBR,UserManagement\n");
  const Run conflict =
      run({"propagate", kModel, scratch("conflict.cfg", "+PermissionManagement\n-UserManagement\n")});
  CHECK(conflict.code == 1);
  CHECK(conflict.out == "conflict\n");
}

TEST_CASE("derive") {
  const std::string out = scratch("out.manifest", "");
  const Run r = run({"derive", kModel, fx("webspl/all-features.cfg"), "-o", out});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(testing::slurp(out) == testing::slurp(fx("webspl/all-features.manifest")));
  const Run stdoutRun = run({"derive", kModel, fx("webspl/mandatory-only.cfg")});
  CHECK(stdoutRun.out == testing::slurp(fx("webspl/mandatory-only.manifest")));
  CHECK(run({"derive", kModel, fx("webspl/no-data-management.cfg")}).code == 1);
  CHECK(run({"derive", kModel, fx("webspl/all-features.cfg"), "--version", "2"}).code == 1);

  const std::string loop = scratch(
      "loop.fm",
      "model Loop\nfeature R => module \"root\" {\n"
      "  optional feature A => module \"alpha\"\n  optional feature B => module \"beta\"\n}\n"
      "requires A B\nrequires B A\n");
  const Run cyc = run({"derive", loop, scratch("loop.cfg", "+R\n+A\n+B\n")});
  CHECK(cyc.code == 1);
  CHECK(cyc.out.find("cycles: 1\n") != std::string::npos);
}

TEST_CASE("diagnose and fmt") {
  const Run d = run({"diagnose", kModel});
  CHECK(d.code == 0);
  CHECK(d.out.find("products: 18\n") != std::string::npos);
  const std::string voidModel = scratch(
      "void.fm", "model V\nfeature R {\n  mandatory feature A\n  mandatory feature B\n}\n"
                 "excludes A B\n");
  CHECK(run({"diagnose", voidModel}).code == 1);
  const Run f = run({"fmt", kModel});
  CHECK(f.code == 0);
  CHECK(f.out.starts_with("model WebSPL\n"));
}

TEST_CASE("measure and compare") {
  const Run m = run({"measure", fx("metrics/sample")});
  CHECK(m.code == 0);
  CHECK(m.out == testing::slurp(fx("metrics/sample.metrics")));
  const Run dup = run({"measure", fx("metrics/stanza"), "--min-dup-block", "7"});
  CHECK(dup.out.find("duplicate_lines=0\n") != std::string::npos);
  const Run capped = run({"measure", fx("metrics/complexity"), "--complexity-cap", "13"});
  CHECK(capped.out.find("debt.minutes=0\n") != std::string::npos);
  CHECK(run({"measure", fx("metrics/sample"), "--min-dup-block", "1"}).code == 2);
  CHECK(run({"measure", fx("metrics/none")}).code == 2);

  const auto emptyDir = std::filesystem::temp_directory_path() / "splforge-empty-corpus";
  std::filesystem::create_directories(emptyDir);
  const Run zero = run({"measure", emptyDir.string()});
  CHECK(zero.code == 0);
  CHECK(zero.out.find("files=0\ntotal.complexity=0\n") != std::string::npos);

  const std::vector<std::string> triple{"compare", "--baseline", fx("comparison/cwa.metrics"),
                                        "--spl", fx("comparison/spl.metrics"), "--derived",
                                        fx("comparison/dwa.metrics")};
  const Run table = run(triple);
  CHECK(table.code == 0);
  CHECK(table.out == testing::slurp(fx("comparison/report.txt")));
  auto kvArgs = triple;
  kvArgs.insert(kvArgs.end(), {"--format", "kv"});
  CHECK(run(kvArgs).out.find("complexity.delta=+56\n") != std::string::npos);
  auto badFormat = triple;
  badFormat.insert(badFormat.end(), {"--format", "xml"});
  CHECK(run(badFormat).code == 2);
  CHECK(run({"compare", "--baseline", fx("comparison/cwa.metrics")}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"count"}).code == 2);
  CHECK(run({"count", kModel, "--version", "x"}).code == 2);
  CHECK(run({"count", kModel, "--version", "0"}).code == 2);
  CHECK(run({"count", scratch("broken.fm", "model\n")}).code == 2);
  const Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("derive") != std::string::npos);
}

TEST_CASE("output is byte-deterministic") {
  CHECK(run({"enumerate", kModel}).out == run({"enumerate", kModel}).out);
  CHECK(run({"measure", fx("metrics")}).out == run({"measure", fx("metrics")}).out);
}
