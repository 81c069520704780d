// Copyright 2026 The lucas-squares Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliRun {
  std::string out;
  int code = -1;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(LUCAS_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GoldenCase {
  const char* file;
  const char* args;
  int code;
};

void PrintTo(const GoldenCase& c, std::ostream* os) { *os << c.file; }

class CliGolden : public testing::TestWithParam<GoldenCase> {};

TEST_P(CliGolden, MatchesFixtureByteForByte) {
  const GoldenCase& c = GetParam();
  const CliRun r = run(c.args);
  EXPECT_EQ(r.code, c.code);
  EXPECT_EQ(r.out, golden(c.file));
}

INSTANTIATE_TEST_SUITE_P(
    Commands, CliGolden,
    testing::Values(
        GoldenCase{"seq.json", "seq -P 1 -Q 1 --range 0..12 --format json", 0},
        GoldenCase{"solve.json", "solve pell5 --sign -1 --count 3 --format json",
                   0},
        GoldenCase{"search.json",
                   "search UU 2 --P 5 --nmax 60 --mmax 30 --mmin 2 --format json",
                   0},
        GoldenCase{"verify.json",
                   "verify t3.4 --P-odd-max 25 --nmax 120 --format json", 0}),
    [](const testing::TestParamInfo<GoldenCase>& info) {
      std::string name = info.param.file;
      return name.substr(0, name.find('.'));
    });

TEST(Cli, TableRows) {
  EXPECT_NE(run("seq -P 1 -Q 1 -n 12").out.find("\n12 144 322\n"),
            std::string::npos);
  EXPECT_NE(run("seq -P 5 -Q 1 -n 0").out.find("\n0 0 2\n"), std::string::npos);
  EXPECT_NE(run("seq -P 5 -Q 1 -n 4 --mod 25").out.find("\n4 10 2\n"),
            std::string::npos);
  const CliRun pell = run("solve pell5 --sign -1 --count 2");
  EXPECT_NE(pell.out.find("(2,1)"), std::string::npos);
  EXPECT_NE(pell.out.find("(38,17)"), std::string::npos);
  EXPECT_NE(pell.out.find("family=oracle: yes"), std::string::npos);
  EXPECT_NE(run("solve quartic --variant plus3 --xmax 10000").out.find("(1,1)"),
            std::string::npos);
  EXPECT_NE(run("solve form --c -5 --count 1").out.find("(2,1)"),
            std::string::npos);
  EXPECT_EQ(run("search V 5 --P 5 --nmax 300 --format csv").out,
            "family,P,n,m,w,x\nV,5,1,,5,1\n");
  EXPECT_EQ(run("search U 5 --P 1 --nmax 500 --format csv").out,
            "family,P,n,m,w,x\nU,1,5,,5,1\n");
  const CliRun t34 = run("verify t3.4 --P-odd-max 25 --nmax 120 --format table");
  EXPECT_EQ(t34.code, 0);
  EXPECT_NE(t34.out.find("no findings (predicted: none) — consistent"),
            std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("verify t3.6 --P 10").code, 3);
  EXPECT_EQ(run("verify t2.3 --P 7 --nmax 10").code, 2);
  EXPECT_EQ(run("seq -P 0 -Q 1 -n 3").code, 1);
  EXPECT_EQ(run("seq -P 1 -Q 1 -n 3 --mod 1").code, 1);
  EXPECT_EQ(run("solve cubic").code, 1);
  EXPECT_EQ(run("search W 1 --P 1 --nmax 5").code, 1);
  EXPECT_EQ(run("verify nope").code, 1);
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, Deterministic) {
  const std::string args = "search UU 2 --P 1..25 --nmax 60 --mmax 30 --format csv";
  const CliRun a = run(args + " --jobs 1");
  const CliRun b = run(args + " --jobs 4");
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run("verify t3.6 --P-max 25 --format json").out,
            run("verify t3.6 --P-max 25 --format json --jobs 3").out);
}

}  // namespace
