#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "hbm/format.hpp"

namespace hbm {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hbm_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    write_file(path(name), text);
    return path(name);
  }

 private:
  fs::path dir_;
};

TEST_F(Cli, GuaranteedInstanceSatisfiesCondition) {
  const auto inst = path("g.hbm");
  ASSERT_EQ(run({"gen", "--mode", "guaranteed", "--r", "3", "--na", "4", "--seed", "5", "--output", inst}).code,
            cli::kOk);
  const auto r = run({"check-haxell", "--input", inst, "--epsilon", "1"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "SATISFIED\n");
}

TEST_F(Cli, GenWritesToStdout) {
  const auto a = run({"gen", "--mode", "planted", "--r", "3", "--na", "3", "--seed", "1"});
  ASSERT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out.rfind("c generator mode:planted r:3 na:3", 0), 0u) << a.out;
  EXPECT_NO_THROW(parse_instance(a.out));
  EXPECT_EQ(run({"gen", "--mode", "planted", "--r", "3", "--na", "3", "--seed", "1"}).out, a.out);
}

TEST_F(Cli, SolveGuaranteedThenVerify) {
  const auto inst = path("g.hbm");
  const auto res = path("g.res");
  ASSERT_EQ(run({"gen", "--r", "3", "--na", "6", "--output", inst}).code, cli::kOk);
  const auto s = run({"solve", "--epsilon", "1", "--input", inst, "--output", res});
  EXPECT_EQ(s.code, cli::kOk) << s.err;
  EXPECT_EQ(parse_result(read_file(res)).status, ResultStatus::PerfectMatching);
  const auto v = run({"verify", "--instance", inst, "--result", res});
  EXPECT_EQ(v.code, cli::kOk) << v.err;
  EXPECT_EQ(v.out.rfind("OK perfect_matching", 0), 0u);
}

TEST_F(Cli, TwoVerticesOneBGivesWitness) {
  const auto inst = write("w.hbm", "p hbm 2 2 1 2\ne 0 0\ne 1 0\n");
  const auto s = run({"solve", "--epsilon", "1/2", "--input", inst});
  EXPECT_EQ(s.code, cli::kWitness);
  EXPECT_EQ(s.out.rfind("result status:witness epsilon:1/2\nwitness S:0,1 hitting_set:0 bound:3/2\n", 0), 0u)
      << s.out;
  const auto res = write("w.res", s.out);
  EXPECT_EQ(run({"verify", "--instance", inst, "--result", res}).code, cli::kOk);
}

TEST_F(Cli, VerifyRejectsOverlap) {
  const auto inst = write("w.hbm", "p hbm 2 2 1 2\ne 0 0\ne 1 0\n");
  const auto res = write("bad.res",
                         "result status:perfect_matching epsilon:1\nmatching edges:0,1\n"
                         "stats iterations:0 max_layers:0 swaps:0 build_ops:0\n");
  const auto v = run({"verify", "--instance", inst, "--result", res});
  EXPECT_NE(v.code, cli::kOk);
  EXPECT_NE(v.err.find("OVERLAP"), std::string::npos) << v.err;
}

TEST_F(Cli, VerifyRejectsOversizedHittingSet) {
  const auto inst = write("w.hbm", "p hbm 2 2 3 2\ne 0 0\ne 1 1\n");
  const auto res = write("bad.res",
                         "result status:witness epsilon:1/2\nwitness S:0,1 hitting_set:0,1 bound:3/2\n"
                         "stats iterations:0 max_layers:0 swaps:0 build_ops:0\n");
  const auto v = run({"verify", "--instance", inst, "--result", res});
  EXPECT_NE(v.code, cli::kOk);
  EXPECT_NE(v.err.find("SIZE_EXCEEDS_BOUND"), std::string::npos) << v.err;
}

TEST_F(Cli, MissingFile) {
  const auto s = run({"solve", "--epsilon", "1", "--input", path("nope.hbm")});
  EXPECT_EQ(s.code, cli::kError);
  EXPECT_NE(s.err.find("error:"), std::string::npos);
}

TEST_F(Cli, BadArguments) {
  EXPECT_EQ(run({}).code, cli::kError);
  EXPECT_EQ(run({"solve", "--input", "x"}).code, cli::kError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kError);
  const auto inst = write("w.hbm", "p hbm 2 2 1 2\ne 0 0\ne 1 0\n");
  EXPECT_EQ(run({"solve", "--epsilon", "-1", "--input", inst}).code, cli::kError);
  EXPECT_EQ(run({"solve", "--epsilon", "abc", "--input", inst}).code, cli::kError);
}

TEST_F(Cli, HelpExitsCleanly) {
  const auto h = run({"--help"});
  EXPECT_EQ(h.code, cli::kOk);
  EXPECT_NE(h.out.find("solve"), std::string::npos);
}

TEST_F(Cli, AdversarialGivesVerifyingWitness) {
  const auto inst = path("a.hbm");
  const auto res = path("a.res");
  ASSERT_EQ(run({"gen", "--mode", "adversarial", "--r", "3", "--na", "8", "--seed", "3", "--output", inst}).code,
            cli::kOk);
  EXPECT_EQ(run({"solve", "--epsilon", "1/2", "--input", inst, "--output", res}).code, cli::kWitness);
  EXPECT_EQ(run({"verify", "--instance", inst, "--result", res}).code, cli::kOk);
}

TEST_F(Cli, CheckHaxellReportsViolator) {
  const auto inst = write("k.hbm", "p hbm 2 2 2 4\ne 0 0\ne 0 1\ne 1 0\ne 1 1\n");
  const auto v = run({"check-haxell", "--input", inst, "--epsilon", "1"});
  EXPECT_EQ(v.code, cli::kWitness);
  EXPECT_EQ(v.out.rfind("VIOLATED S:0,1 tau:2", 0), 0u) << v.out;
  EXPECT_EQ(run({"check-haxell", "--input", inst, "--classic"}).code, cli::kOk);
  const auto big = run({"check-haxell", "--input", inst, "--max-a", "1"});
  EXPECT_EQ(big.code, cli::kError);
  EXPECT_NE(big.err.find("INSTANCE_TOO_LARGE"), std::string::npos) << big.err;
}

TEST_F(Cli, BenchOverHundredSeeds) {
  const auto spec = write("bench.spec", "# small mixed batch\nmode=adversarial\nr=3\nna=6\n");
  const auto b = run({"bench", "--spec-file", spec, "--seeds", "100", "--epsilon", "1/2", "--jobs", "2"});
  EXPECT_EQ(b.code, cli::kOk) << b.err;
  std::istringstream lines(b.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("row ", 0) != 0) continue;
    EXPECT_EQ(line.rfind("row seed:" + std::to_string(rows) + " ", 0), 0u) << line;
    const bool ok = line.find("status:matching") != std::string::npos ||
                    line.find("status:witness") != std::string::npos;
    EXPECT_TRUE(ok) << line;
    ++rows;
  }
  EXPECT_EQ(rows, 100);
  EXPECT_NE(b.out.find("summary rows:100 errors:0"), std::string::npos);
}

TEST_F(Cli, BenchSeedRangeAndOrdering) {
  const auto spec = write("bench.spec", "mode=guaranteed\nr=2\nna=5\n");
  const auto one = run({"bench", "--spec-file", spec, "--seeds", "10:14"});
  const auto four = run({"bench", "--spec-file", spec, "--seeds", "10:14", "--jobs", "4"});
  ASSERT_EQ(one.code, cli::kOk) << one.err;
  EXPECT_EQ(one.out.rfind("row seed:10 ", 0), 0u);
  const auto strip = [](const std::string& s) {
    std::string out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) out += line.substr(0, line.find(" wall_ms:")) + '\n';
    return out;
  };
  EXPECT_EQ(strip(one.out), strip(four.out));
  EXPECT_EQ(run({"bench", "--spec-file", spec, "--seeds", "5:2"}).code, cli::kError);
  EXPECT_EQ(run({"bench", "--spec-file", write("bad.spec", "colour=blue\n")}).code, cli::kError);
}

TEST_F(Cli, TraceAndCheckTrace) {
  const auto inst = path("t.hbm");
  const auto tr = path("t.trace");
  ASSERT_EQ(run({"gen", "--mode", "planted", "--r", "3", "--na", "12", "--extra-edges", "30", "--seed", "2",
                 "--output", inst})
                .code,
            cli::kOk);
  const auto s = run({"solve", "--epsilon", "1", "--input", inst, "--trace", tr, "--debug-invariants"});
  EXPECT_NE(s.code, cli::kError) << s.err;
  EXPECT_NE(s.err.find("invariants:"), std::string::npos);
  const auto c = run({"check-trace", "--trace", tr});
  EXPECT_EQ(c.code, cli::kOk) << c.err;
  EXPECT_EQ(c.out.rfind("OK augments:", 0), 0u) << c.out;

  const auto bad = write("bad.trace",
                         "c hbm-trace v1\naugment root:0\nsignature iteration:1 coords:-5,6,inf\n"
                         "signature iteration:2 coords:-5,7,inf\naugment_end root:0 matched:1 iterations:2\n");
  const auto b = run({"check-trace", "--trace", bad});
  EXPECT_EQ(b.code, cli::kError);
  EXPECT_EQ(b.out.rfind("FAIL", 0), 0u);
}

TEST_F(Cli, SolveIsDeterministic) {
  const auto inst = path("d.hbm");
  ASSERT_EQ(run({"gen", "--mode", "planted", "--r", "4", "--na", "15", "--extra-edges", "40", "--seed", "8",
                 "--output", inst})
                .code,
            cli::kOk);
  const auto a = run({"solve", "--epsilon", "3/4", "--input", inst});
  const auto b = run({"solve", "--epsilon", "0.75", "--input", inst});
  EXPECT_NE(a.code, cli::kError);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(Cli, IterationCapIsAnError) {
  // a0 takes (a0;b0); a1 then needs a second layer to move a0 onto b1.
  const auto inst = write("p.hbm", "p hbm 2 2 2 3\ne 0 0\ne 0 1\ne 1 0\n");
  const auto s = run({"solve", "--epsilon", "1", "--input", inst, "--max-iters", "1"});
  EXPECT_EQ(s.code, cli::kError);
  EXPECT_NE(s.err.find("ITERATION_CAP_EXCEEDED"), std::string::npos) << s.err;
  EXPECT_EQ(run({"solve", "--epsilon", "1", "--input", inst, "--max-iters", "2"}).code, cli::kOk);
}

}  // namespace
}  // namespace hbm
