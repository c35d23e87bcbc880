#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "majority/models.hpp"

namespace majority {

struct RunConfig {
  std::string command;
  std::optional<ModelId> model;
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> i;           // analyze: sparse-structure parameter
  int cap = 10;                   // edge cap for min-b / min-c and the bound formulas
  int family_cap = 12;            // construct: edge cap when searching a family
  int coloring_cap = 24;          // largest n for exhaustive verification
  std::size_t memo_cap = std::size_t{1} << 20;
  std::optional<int> time_budget;  // seconds
  int threads = 1;
  std::uint64_t seed = 1;
  int count = 500;                // crosscheck: number of random query sets
  bool all_optimal = false;       // exact: list every optimal orbit
  bool no_exact = false;          // report: skip the exact search
  std::string format = "json";    // json | text
  std::string input;
  std::string output;
  std::string emit_witness;
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitBudget = 3;

// Runs one subcommand. Artifacts go to config.output, or to `out` when no
// path is given; diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv and runs; usage errors return kExitUsage.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace majority
