#include "gaussrom/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

using namespace gaussrom;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "gaussrom");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Cli, CoveringVerify) {
  CliRun r = run({"covering", "verify"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "covering: true, lcm=24\n");
}

TEST(Cli, RomanovSumCsv) {
  CliRun r = run({"romanov", "sum", "--emax", "4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::vector<std::string> rows = lines(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows.front(), "e,F_num,F_den,G_num,G_den,partial_S_num,partial_S_den,complete");
  const std::string& last = rows.back();
  EXPECT_EQ(last.substr(last.size() - 10), "1156,975,1");
}

TEST(Cli, ConstantsReport) {
  CliRun r = run({"constants", "report"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.contains("final_bound"));
  EXPECT_NEAR(j["final_bound"]["value"].get<double>(), 0.00110183, 2e-7);
  EXPECT_LE(j["final_bound"]["lower"].get<double>(), j["final_bound"]["upper"].get<double>());
}

TEST(Cli, PrimesListCsv) {
  CliRun r = run({"primes", "list", "--x", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::vector<std::string> rows = lines(r.out);
  ASSERT_EQ(rows.size(), 17u);
  EXPECT_EQ(rows.front(), "re,im,norm,degree");
  int inert = 0;
  for (std::size_t k = 1; k < rows.size(); ++k) inert += rows[k].substr(rows[k].size() - 2) == ",2";
  EXPECT_EQ(inert, 4);  // associates of 3
  CliRun json = run({"primes", "list", "--x", "3", "--format", "json"});
  ASSERT_EQ(json.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(json.out)["primes"].size(), 16u);
}

TEST(Cli, PrimesCount) {
  CliRun r = run({"primes", "count", "--x", "10"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["count"], "100");
  EXPECT_EQ(j["lattice"], "317");
}

TEST(Cli, ObstructionJson) {
  CliRun r = run({"covering", "build-obstruction", "--scan-radius", "2000", "--kcap", "40"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["M"], "1365+1365i");
  EXPECT_TRUE(j["divisibility_k48"].get<bool>());
  EXPECT_EQ(j["scan"]["k_cap"], 40);
  EXPECT_NE(r.out.find("990+990i"), std::string::npos);
}

TEST(Cli, InvalidArgumentsExitOne) {
  EXPECT_EQ(run({}).code, kExitInvalid);
  EXPECT_EQ(run({"romanov"}).code, kExitInvalid);
  EXPECT_EQ(run({"romanov", "sum", "--emax", "0"}).code, kExitInvalid);
  EXPECT_EQ(run({"romanov", "sum", "--emax", "abc"}).code, kExitInvalid);
  EXPECT_EQ(run({"density", "scan", "--x", "3"}).code, kExitInvalid);
  EXPECT_EQ(run({"--format", "xml", "covering", "verify"}).code, kExitInvalid);
  EXPECT_EQ(run({"--format", "csv", "constants", "report"}).code, kExitInvalid);
  EXPECT_EQ(run({"--effort", "0", "romanov", "sum"}).code, kExitInvalid);
  EXPECT_EQ(run({"covering", "obstruction", "--radius", "100"}).code, kExitInvalid);
  EXPECT_EQ(run({"no-such-command"}).code, kExitInvalid);
}

TEST(Cli, HelpExitsZero) {
  CliRun r = run({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("romanov"), std::string::npos);
}

TEST(Cli, OutputIndependentOfThreads) {
  for (const std::vector<std::string>& cmd :
       {std::vector<std::string>{"density", "scan", "--x", "120"}, std::vector<std::string>{"romanov", "sum", "--emax", "30"},
        std::vector<std::string>{"orders", "table", "--emax", "20"}}) {
    std::vector<std::string> one = cmd, four = cmd;
    one.insert(one.begin(), {"--threads", "1"});
    four.insert(four.begin(), {"--threads", "4"});
    CliRun a = run(one), b = run(four);
    ASSERT_EQ(a.code, kExitOk) << a.err;
    EXPECT_EQ(a.out, b.out) << cmd.front();
  }
}

TEST(Cli, LedgerCompleteAtDefaultEffort) {
  CliRun r = run({"romanov", "sum", "--emax", "12"});
  ASSERT_EQ(r.code, kExitOk);
  for (const auto& row : lines(r.out)) {
    if (row.front() != 'e') {
      EXPECT_EQ(row.back(), '1');
    }
  }
}
