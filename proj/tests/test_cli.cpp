#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>

#include "polar/pipeline.hpp"

#ifndef POLAR_CLI_PATH
#error "POLAR_CLI_PATH must name the polar-point executable"
#endif

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  std::string cmd = std::string("\"") + POLAR_CLI_PATH + "\" " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST(Cli, SolvesCircle) {
  CliRun r = run("solve \"x1^2 + x2^2 - 1\" --box \"-2,2;-2,2\" -q");
  ASSERT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], "polar-point/1");
  EXPECT_EQ(j["points"].size(), 2u);
  EXPECT_TRUE(j["coverage"]["pass"].get<bool>());
}

TEST(Cli, EmptyRealPart) {
  CliRun r = run("solve \"x1^2 + x2^2 + 1\" -q");
  ASSERT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["points"].empty());
  EXPECT_EQ(j["q_star"], nlohmann::json::array({"1/1"}));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("solve \"(x^2 + y^2 - 1)^2\" -q").status, 2);
  EXPECT_EQ(run("solve \"x +\" -q").status, 1);
  EXPECT_EQ(run("solve").status, 1);
  EXPECT_EQ(run("solve \"x^2+y^2-1\" --format xml").status, 1);
  EXPECT_EQ(run("solve \"x^2+y^2-1\" --bogus").status, 1);
  EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, ErrorPayload) {
  CliRun r = run("solve \"(x^2 + y^2 - 1)^2\" -q");
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["error"]["kind"], "not_squarefree");
  EXPECT_TRUE(j["error"].contains("witness"));
}

TEST(Cli, ByteIdenticalWithoutTimings) {
  std::string args = "solve \"(x^2+y^2+z^2+3)^2 - 16*(x^2+y^2)\" --seed 9 --levels all --no-timings -q";
  CliRun a = run(args), b = run(args);
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(nlohmann::json::parse(a.out).contains("timings"));
}

TEST(Cli, SlpFile) {
  std::string path = ::testing::TempDir() + "circle_slp.json";
  {
    std::ofstream os(path);
    os << polar::slp_to_json(polar::input_from_text("x1^2 + x2^2 - 1").slp);
  }
  CliRun r = run("solve --slp \"" + path + "\" -q --no-timings");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["points"].size(), 2u);
  EXPECT_EQ(run("solve --slp /nonexistent/file.json -q").status, 1);
}
