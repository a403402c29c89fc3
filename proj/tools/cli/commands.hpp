#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"

namespace symprobe::cli {

/// Keys accepted by a subcommand (probe, heatmap, purify, dataset, grid, train, serve).
std::vector<KeySpec> command_keys(const std::string& command);

// Each command validates the whole config, then runs, writing into the output
// directory and a short summary to `out`.
void cmd_probe(const RunConfig& config, std::ostream& out);
void cmd_heatmap(const RunConfig& config, std::ostream& out);
void cmd_purify(const RunConfig& config, std::ostream& out);
void cmd_dataset(const RunConfig& config, std::ostream& out);
void cmd_grid(const RunConfig& config, std::ostream& out);
void cmd_train(const RunConfig& config, std::ostream& out);
/// port < 0 serves one session on stdin/stdout.
void cmd_serve(const RunConfig& config, int port, std::ostream& log);

/// Full command line entry point. Returns the process exit code:
/// 0 success, 1 runtime failure, 2 bad usage or config, 3 output directory busy.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symprobe::cli
