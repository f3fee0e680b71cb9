#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lef/cli.hpp"

using namespace lef;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"frobnicate"}).code, kExitBadInput);
  EXPECT_NE(run({"frobnicate"}).err.find("frobnicate"), std::string::npos);
  EXPECT_EQ(run({}).code, kExitBadInput);
  EXPECT_EQ(run({"--seed", "3", "nope"}).code, kExitBadInput);
  EXPECT_EQ(run({"--vertex-cap", "0", "spectral", "--cycles", "4"}).code, kExitBadInput);
  EXPECT_EQ(run({"run-chain", "/nonexistent/chain"}).code, kExitBadInput);
  EXPECT_EQ(run({"--help"}).code, kExitPass);

  const auto bad = temp_file("lef_cli_bad.chain", "p 3\nn 3\ndepth 1\nquotient 0 degree 2\ns1 1 0 5\n");
  const auto r = run({"run-chain", bad});
  EXPECT_EQ(r.code, kExitBadInput);
  EXPECT_NE(r.err.find("line 5"), std::string::npos);

  const auto dup = run({"density", "--labels", "4:3,4:3"});
  EXPECT_EQ(dup.code, kExitCheckFailed);
  EXPECT_NE(dup.err.find("all/density"), std::string::npos);
  EXPECT_EQ(run({"density", "--labels", "4:3,5:3"}).code, kExitPass);
}

TEST(Cli, ReportShape) {
  const auto r = run({"--seed", "9", "spectral", "--cycles", "8,4"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  for (const char* key : {"meta word_bound=2R+1", "meta composition=right-to-left", "meta semidirect=right", "meta seed=9"})
    EXPECT_NE(r.out.find(key), std::string::npos) << key;
  std::istringstream lines(r.out);
  std::string line, digest;
  std::vector<std::string> levels;
  while (std::getline(lines, line)) {
    if (line.rfind("meta ", 0) == 0) continue;
    const auto at = line.find(" input=");
    ASSERT_NE(at, std::string::npos) << line;
    if (digest.empty()) digest = line.substr(at);
    EXPECT_EQ(line.substr(at), digest);
    levels.push_back(line.substr(0, line.find(' ')));
  }
  EXPECT_EQ(levels, (std::vector<std::string>{"level=4", "level=8"}));
  // The digest follows the inputs.
  const auto other = run({"--seed", "10", "spectral", "--cycles", "8,4"});
  EXPECT_EQ(other.out.find(digest), std::string::npos);
  EXPECT_EQ(run({"--seed", "9", "spectral", "--cycles", "8,4"}).out, r.out);
}

TEST(Cli, WreathConventionRecorded) {
  const auto r = run({"wreath", "--k", "6", "--J", "2", "--convention", "left"});
  EXPECT_NE(r.out.find("meta semidirect=left"), std::string::npos);
  // Extraction relies on the right convention.
  EXPECT_EQ(r.code, kExitCheckFailed);
  EXPECT_EQ(run({"wreath", "--k", "6", "--J", "2"}).code, kExitPass);
  EXPECT_EQ(run({"wreath", "--convention", "sideways"}).code, kExitBadInput);
}
