#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lef {

struct RunConfig {
  std::string subcommand;
  std::string input;  // chain file, when the subcommand takes one
  std::size_t ball_cap = 1'000'000;
  std::size_t closure_cap = 1'000'000;
  std::size_t vertex_cap = 1'000'000;
  std::size_t word_cap = 4096;
  int rmax = 2;
  std::uint64_t seed = 20240601;
  std::string out;  // report path; stdout when empty
};

/// Exit codes of cli_dispatch.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitBadInput = 2;

/// Parses argv, runs one subcommand and writes its report. Failing hard
/// checks are named on `err`.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lef
