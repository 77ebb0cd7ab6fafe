#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace ssf::cli {

using json = nlohmann::ordered_json;

/// 0 success, 1 verification failure, 2 bad config or unmet precondition.
enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kConfigError = 2 };

struct Outcome {
  int exit_code = kOk;
  json report;
};

const std::vector<std::string>& commands();

/// Runs one command on a parsed config. Never throws for library or config
/// errors; those come back as {"error": {"code", "message"}} with exit 2.
Outcome execute(const std::string& command, const json& config);

/// Indented key: value rendering of a report.
std::string render_text(const json& report);

}  // namespace ssf::cli
