#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

using Json = nlohmann::json;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult cli(const std::string& args, const std::string& input = "") {
  std::string cmd = std::string(DIFFSET_CLI_PATH) + " " + args + " 2>/dev/null";
  if (!input.empty()) cmd = "printf '%s' '" + input + "' | " + cmd;
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const char* kRow4 =
    R"({"group":[48],"set":[1,2,3,4,6,7,9,10,11,15,17,18,20,22,24,25,28,29,30,34,37,40,41]})";

}  // namespace

TEST(Cli, VerifyAdsRecord) {
  const CliResult r = cli("verify", kRow4);
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["kind"], "ADS");
  EXPECT_EQ(j["v"], 48);
  EXPECT_EQ(j["k"], 23);
  EXPECT_EQ(j["lambda"], 10);
  EXPECT_EQ(j["t"], 11);
}

TEST(Cli, VerifyFromFlagsAndFiles) {
  const CliResult flags = cli("verify --group 2,8 --set 0:0,0:1,0:2,0:5,1:0,1:6");
  ASSERT_EQ(flags.code, 0);
  EXPECT_EQ(Json::parse(flags.out)["kind"], "DS");
  const auto path = std::filesystem::temp_directory_path() / "diffset_cli_record.json";
  std::ofstream(path) << kRow4;
  EXPECT_EQ(cli("verify " + path.string()).code, 0);
  std::filesystem::remove(path);
}

TEST(Cli, ParseErrorsExitOne) {
  EXPECT_EQ(cli("verify", "{\"group\":[48],").code, 1);
  EXPECT_EQ(cli("verify", R"({"group":[4],"set":[7]})").code, 1);
  EXPECT_EQ(cli("no-such-command").code, 1);
  EXPECT_EQ(cli("mgr search --v 14").code, 1);
  EXPECT_EQ(cli("family hadamard --p 7").code, 1);
}

TEST(Cli, NegativeResultsExitTwo) {
  EXPECT_EQ(cli("verify", R"({"group":[10],"set":[0,1,2,3]})").code, 2);
  const CliResult none = cli("mgr search --v 12 --k 4");
  EXPECT_EQ(none.code, 2);
  EXPECT_EQ(Json::parse(none.out)["status"], "NONE");
}

TEST(Cli, BudgetExhaustionExitsThree) {
  const CliResult r = cli("mgr search --v 80 --k 9 --node-limit 1000 --no-canonical");
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(Json::parse(r.out)["status"], "TIMEOUT");
}

TEST(Cli, PaleyPipedIntoVerify) {
  const CliResult fam = cli("family paley --p 23");
  ASSERT_EQ(fam.code, 0);
  const CliResult r = cli("verify", fam.out);
  ASSERT_EQ(r.code, 0);
  const Json c = Json::parse(r.out);
  EXPECT_EQ(c["kind"], "DS");
  EXPECT_EQ(c["v"], 23);
  EXPECT_EQ(c["k"], 11);
  EXPECT_EQ(c["lambda"], 5);
}

TEST(Cli, ReproduceTable2) {
  const auto dir = std::filesystem::temp_directory_path() / "diffset_cli_repro";
  std::filesystem::remove_all(dir);
  const CliResult r = cli("reproduce table2 --out " + dir.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(dir / "table2.json"));
  std::filesystem::remove_all(dir);
}

TEST(Cli, OcticAndAdsCommands) {
  const CliResult c = cli("octic classify --p 73");
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(Json::parse(c.out)["type_O0"]["ads"]["lambda"], 1);
  const CliResult g = cli("ads grid --vmax 8 --format csv");
  EXPECT_EQ(g.code, 0);
  EXPECT_EQ(g.out.rfind("v,k,lambda,t,t_hat,status,witness", 0), 0u);
  EXPECT_EQ(cli("--pretty octic norms --N 4 --count 8").code, 0);
}
