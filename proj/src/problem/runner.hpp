#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "io/json_io.hpp"
#include "problem/problem.hpp"

namespace secant {

struct RunOptions {
  std::optional<MonomialOrder> order;
  std::vector<std::string> ideals;  // base ring elements, each generating one ideal
  std::optional<std::uint32_t> max_degree;
  std::optional<std::uint32_t> grade;
};

enum RunStatus { kPositive = 0, kNegative = 1, kInputError = 2, kInternalError = 3 };

struct RunResult {
  int status = kInternalError;
  Json output;          // null on input and internal errors
  std::string summary;  // one line
  std::string explain;  // several lines, human readable
  std::string error;    // diagnostic when output is null
};

const std::vector<std::string>& command_names();

// Never throws.
RunResult run_command(const std::string& command, const ProblemSpec& spec, const RunOptions& options);
RunResult run_verify(std::string_view certificate_json);

int status_for(ErrorCode code);

}  // namespace secant
