#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "avgord/report.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(AVGORD_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf;
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, StatsByNameIdAndInlineGenerators) {
  for (const char* spec : {"A4", "12/3", "'(0 1 2);(0 1)(2 3)'"}) {
    auto r = run(std::string("stats ") + spec);
    EXPECT_EQ(r.code, 0) << spec;
    EXPECT_TRUE(contains(r.out, "psi:      31")) << r.out;
    EXPECT_TRUE(contains(r.out, "31/12 (2.583333)")) << r.out;
  }
  auto comma = run("stats '(0 1 2), (0 1)'");
  EXPECT_TRUE(contains(comma.out, "order:    6")) << comma.out;
}

TEST(Cli, Classify) {
  auto r = run("classify 18/4");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "case:          frobenius"));
  EXPECT_TRUE(contains(r.out, "m:             2"));
  EXPECT_TRUE(contains(run("classify D8").out, "two_group"));
}

TEST(Cli, VerifyAndBounds) {
  auto v = run("verify C5xS3");
  EXPECT_EQ(v.code, 0);
  EXPECT_TRUE(contains(v.out, "o(A) o(B) = o(G) holds")) << v.out;
  auto b = run("bounds S3");
  EXPECT_EQ(b.code, 0);
  EXPECT_TRUE(contains(b.out, "brandl_shi")) << b.out;
  EXPECT_TRUE(contains(b.out, "failures: 0"));
}

TEST(Cli, Families) {
  auto r = run("families frobenius32 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "403/162")) << r.out;
  EXPECT_TRUE(contains(run("families alternating 5").out, "211/60"));
  EXPECT_TRUE(contains(run("families quaternion8").out, "27/8"));
  EXPECT_EQ(run("families nosuch 3").code, 2);
  EXPECT_EQ(run("families cyclic").code, 2);
}

TEST(Cli, CensusFormatsAndExitCode) {
  auto s = run("census --format structured --jobs 2");
  EXPECT_EQ(s.code, 0);
  auto parsed = avgord::parse_structured_report(s.out);
  EXPECT_EQ(parsed.rows.size(), 92u);
  auto s2 = run("census --format structured");
  EXPECT_EQ(s.out, s2.out);
  auto csv = run("census --format csv");
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 93);
  auto table = run("census --threshold 211/60");
  EXPECT_EQ(table.code, 0);
  EXPECT_TRUE(contains(table.out, "A4"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("stats").code, 2);
  EXPECT_EQ(run("census --format json").code, 2);
  EXPECT_EQ(run("stats NoSuchGroup").code, 2);
  EXPECT_EQ(run("stats '(0 1'").code, 2);
  EXPECT_NE(run("census --catalog /nonexistent").code, 0);
  EXPECT_EQ(run("--seedless stats A4").code, 0);
}

TEST(Cli, CapOverrides) {
  EXPECT_NE(run("--max-order 10 stats S4").code, 0);
  EXPECT_EQ(run("--max-order 30 stats S4").code, 0);
}
