#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "config.hpp"

namespace pinchext::cli {

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_negative = 2, exit_numerical = 3 };

struct CommandResult {
    int code = exit_ok;
    nlohmann::json report;
    std::string csv;
    std::string extra_csv; // ray profile written next to the ladder JSON
};

CommandResult cmd_test(const AnalysisConfig& cfg);
CommandResult cmd_ladder(const AnalysisConfig& cfg);
CommandResult cmd_validate(const AnalysisConfig& cfg);
CommandResult cmd_gallery(const AnalysisConfig& cfg);

// Full driver: parses argv (argv[0] is the program name), runs the command and
// writes its output. Returns the process exit code.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

} // namespace pinchext::cli
