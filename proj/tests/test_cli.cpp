#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ghct/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ghct::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ghct_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream f(p);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenAndQueryPath) {
  ASSERT_EQ(run({"gen", "path", "--n", "3", "-o", path("p3.txt")}).code, 0);
  ASSERT_EQ(run({"tree", path("p3.txt"), "-o", path("t.txt")}).code, 0);
  EXPECT_EQ(slurp(path("t.txt")), "t 3\ne 1 0 1\ne 2 1 1\n");
  const Result q = run({"query", path("t.txt"), "0", "2"});
  EXPECT_EQ(q.code, 0);
  EXPECT_EQ(q.out, "1\n");
  EXPECT_EQ(run({"query", path("t.txt"), "1", "1"}).code, 2);
  EXPECT_EQ(run({"query", path("t.txt"), "0", "7"}).code, 2);
}

TEST_F(Cli, CliqueHybridAndPartial) {
  ASSERT_EQ(run({"gen", "clique", "--n", "4", "-o", path("k4.txt")}).code, 0);
  ASSERT_EQ(run({"tree", path("k4.txt"), "--algo", "hybrid", "--d", "2", "-o", path("t.txt")}).code, 0);
  const Result all = run({"query", path("t.txt"), "--all-pairs"});
  EXPECT_EQ(all.out, "- 3 3 3\n3 - 3 3\n3 3 - 3\n3 3 3 -\n");
  const Result part = run({"tree", path("k4.txt"), "--algo", "partial", "--k", "2", "--no-timing"});
  EXPECT_EQ(part.code, 0);
  EXPECT_NE(part.out.find("s 4 1\nb 0 0 1 2 3\n"), std::string::npos);
}

TEST_F(Cli, TriangleAllPairsJson) {
  ASSERT_EQ(run({"gen", "clique", "--n", "3", "-o", path("k3.txt")}).code, 0);
  ASSERT_EQ(run({"tree", path("k3.txt"), "-o", path("t.txt")}).code, 0);
  EXPECT_EQ(run({"--format", "json", "query", path("t.txt"), "--all-pairs"}).out, "[[0,2,2],[2,0,2],[2,2,0]]\n");
}

TEST_F(Cli, VerifyExitCodes) {
  ASSERT_EQ(run({"gen", "random-gnm", "--n", "12", "--m", "30", "--seed", "5", "-o", path("g.txt")}).code, 0);
  ASSERT_EQ(run({"tree", path("g.txt"), "-o", path("t.txt")}).code, 0);
  EXPECT_EQ(run({"verify", path("g.txt"), path("t.txt"), "--emit-witness", path("w.json")}).code, 0);
  EXPECT_EQ(run({"verify", path("g.txt"), path("t.txt"), "--witness", path("w.json")}).code, 0);

  // Bump one weight.
  std::string tree = slurp(path("t.txt"));
  const auto last = tree.find_last_of(' ');
  const auto end = tree.find('\n', last);
  const long w = std::stol(tree.substr(last + 1, end - last - 1));
  tree.replace(last + 1, end - last - 1, std::to_string(w + 1));
  std::ofstream(path("bad.txt")) << tree;
  EXPECT_EQ(run({"verify", path("g.txt"), path("bad.txt")}).code, 1);

  const std::string witness = slurp(path("w.json"));
  std::ofstream(path("trunc.json")) << witness.substr(0, witness.size() / 2);
  EXPECT_EQ(run({"verify", path("g.txt"), path("t.txt"), "--witness", path("trunc.json")}).code, 2);
  EXPECT_EQ(run({"verify", path("g.txt"), path("missing.txt")}).code, 2);
}

TEST_F(Cli, InputErrors) {
  EXPECT_EQ(run({"gen", "random-regular", "--n", "5", "--degree", "3"}).code, 2);
  EXPECT_EQ(run({"gen", "nonsense"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  std::ofstream(path("cap.txt")) << "p ghct 2 1\ne 0 1\nn 1 3\n";
  EXPECT_EQ(run({"tree", path("cap.txt")}).code, 2);
  std::ofstream(path("broken.txt")) << "p ghct 2 1\ne 0 9\n";
  const Result r = run({"tree", path("broken.txt")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST_F(Cli, GenIsDeterministic) {
  const Result a = run({"--seed", "7", "gen", "random-gnm", "--n", "50", "--m", "120"});
  const Result b = run({"gen", "random-gnm", "--n", "50", "--m", "120", "--seed", "7"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run({"gen", "random-gnm", "--n", "50", "--m", "120", "--seed", "8"}).out);
}

TEST_F(Cli, Bench) {
  const Result empty = run({"bench", "--format", "json"});
  EXPECT_EQ(empty.code, 0);
  EXPECT_EQ(empty.out, "");
  const Result r = run({"--format", "json", "bench", "--corpus", "gnm:30:60:2", "--repeats", "3", "--workers", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2 * 3 * 3);
  EXPECT_NE(r.out.find("\"wall_ms\""), std::string::npos);
  const Result quiet = run({"--format", "json", "--no-timing", "bench", "--corpus", "gnm:30:60:2"});
  EXPECT_EQ(quiet.out.find("wall_ms"), std::string::npos);
  EXPECT_EQ(run({"bench", "--corpus", "bogus:1"}).code, 2);
}

TEST_F(Cli, GadgetFiles) {
  std::ofstream(path("ov.txt")) << "ov 2 3\n110\n011\n101\n001\n111\n101\n";
  const Result g = run({"gen", "ov-gadget", "--input", path("ov.txt"), "--intermediate"});
  EXPECT_EQ(g.code, 0);
  EXPECT_NE(g.out.find("p ghct 34 "), std::string::npos);
  std::ofstream(path("bmm.txt")) << "bmm 2\n10\n01\n10\n01\n";
  EXPECT_EQ(run({"gen", "bmm-gadget", "--input", path("bmm.txt")}).code, 0);
  EXPECT_EQ(run({"gen", "ov-gadget", "--n", "2", "--dim", "1"}).code, 2);
}
