#pragma once

#include <exception>

#include "hilbmod/cli/config.hpp"
#include "hilbmod/cli/report.hpp"

namespace hilbmod::cli {

/// Runs job.task. Library errors propagate unchanged.
Report run(const JobConfig& job);

/// 0 success, 2 configuration or input error, 3 a mathematical precondition
/// failed, 4 unsupported ideal family or task combination, 1 anything else.
int exit_code(const std::exception& e);

} // namespace hilbmod::cli
