#pragma once

#include "options.hpp"
#include "report.hpp"

#include <string>
#include <vector>

namespace cantorlab::cli {

struct Outcome {
    report::json results = report::json::object();
    report::Table table;
    report::json calibration = report::json::object();
};

using CommandFn = Outcome (*)(const RunConfig&, const Parsed&);

struct CommandInfo {
    const char* name;
    const char* help;
    CommandFn run;
};

const std::vector<CommandInfo>& commands();

} // namespace cantorlab::cli
