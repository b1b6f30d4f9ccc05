#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "walls/cli/config.hpp"

namespace walls::cli {

int run_table(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_series(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_oracle(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_crosscheck(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_asym(const RunConfig& config, std::ostream& out, std::ostream& err);

// Dispatches on config.command and maps library errors to exit codes.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv-style arguments (without the program name) and executes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace walls::cli
