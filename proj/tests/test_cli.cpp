#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(K3CHECK_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST(Cli, CatalogListsEntries) {
  auto r = run("catalog");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("y^2 = x^3 - t*(t^11 + 1)"), std::string::npos);
  EXPECT_EQ(run("catalog --k 8").code, 2);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("nonsense").code, 2);
  EXPECT_EQ(run("zeta --k 12").code, 2);
  auto r = run("verify --k 66 --q 11");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("67, 199"), std::string::npos);
  EXPECT_EQ(run("jacobi --m 5 --q 13 --alpha 1,1,1").code, 2);
  EXPECT_EQ(run("delsarte --equation 'y^2 = x^3 +'").code, 2);
  EXPECT_EQ(run("lattice --gram '[[2,1],[0,2]]'").code, 2);
}

TEST(Cli, VerifyPasses) {
  auto r = run("verify --k 12 --q 13");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(run("verify --k 44").code, 0);
}

TEST(Cli, JacobiExamples) {
  auto r = run("jacobi --m 2 --q 5 --alpha 1,1,1 --json");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "jacobi");
  EXPECT_EQ(j["status"], "pass");
}

TEST(Cli, JsonIsStableAndRoundTrips) {
  for (const char* args : {"catalog --k 19 --json", "zeta --k 12 --q 13 --json", "mirror --k 11 --json",
                           "count --fermat 4 --q 13 --json", "lattice --k 7 --json",
                           "delsarte --equation 'y^2 = x^3 + t^7*x + 1' --json"}) {
    auto a = run(args), b = run(args);
    ASSERT_EQ(a.code, 0) << args << "\n" << a.out;
    EXPECT_EQ(a.out, b.out) << args;
    auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j.dump(2) + "\n", a.out) << args;
    for (const char* key : {"command", "inputs", "checks", "result", "status"}) EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(Cli, TimingOnlyOnRequest) {
  auto r = run("mirror --k 3 --json --timing");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.contains("timing_us"));
  EXPECT_FALSE(nlohmann::json::parse(run("mirror --k 3 --json").out).contains("timing_us"));
}

TEST(Cli, MirrorAndDelsarteOutput) {
  auto r = run("mirror --k 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("T_X positive definite"), std::string::npos);
  auto d = run("delsarte --equation 'y^2 = x^3 + t^7*x + 1' --json");
  auto j = nlohmann::json::parse(d.out);
  EXPECT_EQ(j["result"]["m"], 42);
}

TEST(Cli, CountMatchesLibrary) {
  auto r = run("count --fermat 3 --q 7 --json");
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["count"], "99");
}
