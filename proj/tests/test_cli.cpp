#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "threesum/harness/cli.hpp"

using namespace threesum::harness;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("threesum_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write_toy() {
    fs::create_directories(dir_ / "toy");
    std::ofstream(dir_ / "toy" / "A.txt") << "1\n3\n";
    std::ofstream(dir_ / "toy" / "B.txt") << "2\n4\n";
    std::ofstream(dir_ / "toy" / "C.txt") << "5\n8\n";
    std::ofstream(dir_ / "q.txt") << "A'\n1\n3\nB'\n2\n4\nC'\n5\n8\n";
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenIsDeterministic) {
  ASSERT_EQ(cli({"gen", "--n", "20", "--seed", "3", "--with-c", "--out", path("g1")}).code, 0);
  ASSERT_EQ(cli({"gen", "--n", "20", "--seed", "3", "--with-c", "--out", path("g2")}).code, 0);
  for (const char* f : {"A.txt", "B.txt", "C.txt"}) {
    EXPECT_EQ(slurp(dir_ / "g1" / f), slurp(dir_ / "g2" / f)) << f;
  }
  ASSERT_EQ(cli({"gen", "--n", "20", "--out", path("g3")}).code, 0);
  EXPECT_FALSE(fs::exists(dir_ / "g3" / "C.txt"));
}

TEST_F(Cli, ToyKnownCWithForcedModulus) {
  write_toy();
  ASSERT_EQ(cli({"preprocess", "--algo", "known-c", "--instance", path("toy"), "--force-modulus",
                 "5", "--out", path("s.bin")})
                .code,
            0);
  const auto r = cli({"query", "--state", path("s.bin"), "--queries", path("q.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "5 1 2\n8 0 0\n");
  ASSERT_EQ(cli({"query", "--state", path("s.bin"), "--queries", path("q.txt"), "--out",
                 path("ans.txt")})
                .code,
            0);
  EXPECT_EQ(slurp(dir_ / "ans.txt"), "5 1 2\n8 0 0\n");
}

TEST_F(Cli, UnknownCEnginesAnswerToyQuery) {
  write_toy();
  for (const char* algo : {"unknown-c-rand", "unknown-c-det"}) {
    ASSERT_EQ(cli({"preprocess", "--algo", algo, "--instance", path("toy"), "--out", path("s.bin")}).code, 0);
    const auto r = cli({"query", "--state", path("s.bin"), "--queries", path("q.txt")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "5 1 2\n8 0 0\n") << algo;
  }
}

TEST_F(Cli, KnownCWithoutTargetsFile) {
  write_toy();
  fs::remove(dir_ / "toy" / "C.txt");
  const auto r = cli({"preprocess", "--algo", "known-c", "--instance", path("toy"), "--out", path("s.bin")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("C.txt"), std::string::npos);
}

TEST_F(Cli, DetStateIsByteIdentical) {
  ASSERT_EQ(cli({"gen", "--n", "40", "--mode", "clustered", "--seed", "5", "--out", path("i")}).code, 0);
  for (const char* out : {"d1.bin", "d2.bin"}) {
    ASSERT_EQ(cli({"preprocess", "--algo", "unknown-c-det", "--instance", path("i"), "--out", path(out)}).code, 0);
  }
  EXPECT_EQ(slurp(dir_ / "d1.bin"), slurp(dir_ / "d2.bin"));
}

TEST_F(Cli, VerifyExitCodes) {
  EXPECT_EQ(cli({"verify", "--n", "24", "--trials", "20"}).code, 0);
  const auto bad = cli({"verify", "--n", "24", "--trials", "5", "--inject-fault"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.out.find("first mismatch"), std::string::npos);
}

TEST_F(Cli, ErrorExitCodes) {
  write_toy();
  EXPECT_EQ(cli({"preprocess", "--algo", "known-c", "--instance", path("toy"), "--force-modulus",
                 "9", "--out", path("s.bin")})
                .code,
            1);
  EXPECT_EQ(cli({"preprocess", "--algo", "unknown-c-det", "--instance", path("toy"),
                 "--force-modulus", "5", "--out", path("s.bin")})
                .code,
            1);
  EXPECT_EQ(cli({"preprocess", "--algo", "unknown-c-rand", "--instance", path("toy"),
                 "--memory-budget", "16", "--out", path("s.bin")})
                .code,
            3);
  EXPECT_EQ(cli({"preprocess", "--algo", "bogus", "--instance", path("toy"), "--out", path("s.bin")}).code, 1);
  EXPECT_EQ(cli({"frobnicate"}).code, 1);
  EXPECT_EQ(cli({}).code, 1);
  EXPECT_EQ(cli({"query", "--state", path("nope.bin"), "--queries", path("q.txt")}).code, 1);
}

TEST_F(Cli, QueryErrorsNameTheLine) {
  write_toy();
  ASSERT_EQ(cli({"preprocess", "--algo", "known-c", "--instance", path("toy"), "--out", path("s.bin")}).code, 0);
  std::ofstream(dir_ / "bad.txt") << "A'\n1\nB'\n2\nC'\nfive\n";
  auto r = cli({"query", "--state", path("s.bin"), "--queries", path("bad.txt")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("bad.txt:6"), std::string::npos) << r.err;

  std::ofstream(dir_ / "sub.txt") << "A'\n1\nB'\n2\nC'\n5\n\nA'\n7\nB'\n2\nC'\n5\n";
  r = cli({"query", "--state", path("s.bin"), "--queries", path("sub.txt")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("sub.txt:8"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("element 7"), std::string::npos) << r.err;
}

TEST_F(Cli, BenchWritesCsv) {
  const auto r = cli({"bench", "--sizes", "8,16", "--algo", "unknown-c-det", "--trials", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("n,preprocess_ms,query_ms_mean,convolution_length,fp_scan_mean,restarts,moduli_count\n", 0), 0u);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
  EXPECT_EQ(cli({"bench", "--sizes", "16,8"}).code, 1);
  ASSERT_EQ(cli({"bench", "--sizes", "8", "--out", path("b.csv")}).code, 0);
  EXPECT_TRUE(fs::exists(dir_ / "b.csv"));
}
