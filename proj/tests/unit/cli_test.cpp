#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "probe/cli/cli.hpp"
#include "support.hpp"

namespace probe::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string example1() { return testing::corpus_path("example1.pgcl"); }

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("probe-cli-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TEST(Cli, CheckProven) {
  auto r = call({"check", "--program", example1(), "--property", "P >= 0.5 [ true ]"});
  EXPECT_EQ(r.code, kProven) << r.err;
  EXPECT_NE(r.out.find("proven"), std::string::npos);
}

TEST(Cli, CheckRefuted) {
  auto r = call({"check", "--program", example1(), "--property", "P <= 0.5 [ true ]", "--budget", "100"});
  EXPECT_EQ(r.code, kRefuted) << r.err;
}

TEST(Cli, CheckUnknown) {
  auto r = call({"check", "--program", example1(), "--property", "P >= 0.9999 [ true ]", "--budget", "5",
                 "--max-rounds", "2"});
  EXPECT_EQ(r.code, kUnknown) << r.err;
}

TEST(Cli, CheckPropsFile) {
  auto r = call({"check", "--program", example1(), "--property", testing::corpus_path("example1.props"),
                 "--format", "json", "--no-timing"});
  EXPECT_EQ(r.code, kProven) << r.err;
  auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 2u);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(call({"check", "--program", example1(), "--property", "P >= [ true ]"}).code, kInputError);
  EXPECT_EQ(call({"check", "--program", "/nonexistent.pgcl", "--property", "P >= 0.5 [ true ]"}).code, kInputError);
  EXPECT_EQ(call({"check", "--program", example1()}).code, kInputError);
  EXPECT_EQ(call({"check", "--program", example1(), "--property", "P >= 0.5 [ true ]", "--grid", "f:0:1:2"}).code,
            kInputError);
  EXPECT_EQ(call({"check", "--program", example1(), "--property", "P >= 0.5 [ true ]", "--seed", "3"}).code,
            kInputError);
  EXPECT_EQ(call({"check", "--program", example1(), "--property", "P >= 0.5 [ y = 1 ]"}).code, kInputError);
  EXPECT_EQ(call({"frobnicate"}).code, kInputError);
  EXPECT_EQ(call({}).code, kInputError);
}

TEST(Cli, Help) {
  auto r = call({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("synthesize"), std::string::npos);
}

TEST(Cli, JsonIsReproducible) {
  std::vector<std::string> args{"check", "--program", example1(), "--property", "E >= 1.5 [ x ]",
                                "--budget", "50", "--format", "json", "--no-timing"};
  auto a = call(args);
  auto b = call(args);
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["verdict"], "proven");
}

TEST(Cli, SimulateIsReproducible) {
  std::vector<std::string> args{"simulate", "--program", example1(), "--property", "E >= 0 [ x ]",
                                "--runs", "5000", "--seed", "11", "--format", "csv"};
  auto a = call(args);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, call(args).out);
}

TEST(Cli, Explore) {
  auto dir = scratch("explore");
  auto dump = (dir / "m.txt").string();
  auto r = call({"explore", "--program", example1(), "--budget", "10", "--max-rounds", "2", "--format", "csv",
                 "--dump", dump});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "round,expanded,states,transitions,frontier,full");
  EXPECT_TRUE(fs::exists(dump));
}

TEST(Cli, SynthesizeErrors) {
  EXPECT_EQ(call({"synthesize", "--program", example1(), "--property", "P <= 0.5 [ true ]"}).code, kInputError);
  auto para = testing::corpus_path("parametric/crowds-param-100-60.pgcl");
  EXPECT_EQ(
      call({"synthesize", "--program", para, "--property", "P <= 0.5 [ true ]", "--grid", "f:1:0:3,b:0:1:3"}).code,
      kInputError);
}

TEST(Cli, SynthesizeWritesArtifacts) {
  auto dir = scratch("synth");
  auto prog = dir / "coin.pgcl";
  {
    std::ofstream f(prog);
    f << "int x := 0; { x := 1; } [p] { { x := 2; } [q] { x := 0; } }\n";
  }
  auto r = call({"synthesize", "--program", prog.string(), "--property", "E <= 1 [ x ]", "--grid",
                 "p:0:1:4,q:0:1:4", "--out", dir.string(), "--max-rounds", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir / "coin.csv"));
  EXPECT_TRUE(fs::exists(dir / "coin-1.svg"));
}

TEST(Cli, Bench) {
  auto dir = scratch("bench");
  fs::copy_file(testing::corpus_path("example1.pgcl"), dir / "example1.pgcl");
  fs::copy_file(testing::corpus_path("example1.props"), dir / "example1.props");
  auto r = call({"bench", "--corpus", dir.string(), "--format", "csv", "--no-timing"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "program,property,states,transitions,full,value,verdict,seconds");
  EXPECT_NE(r.out.find("proven"), std::string::npos);
  auto empty = scratch("bench-empty");
  EXPECT_EQ(call({"bench", "--corpus", empty.string()}).code, kInputError);
  EXPECT_EQ(call({"bench", "--corpus", (dir / "missing").string()}).code, kInputError);
}

}  // namespace
}  // namespace probe::cli
