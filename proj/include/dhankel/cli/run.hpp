#pragma once

#include "dhankel/cli/config.hpp"
#include "dhankel/cli/report.hpp"

namespace dhankel::cli {

inline constexpr const char* kToolVersion = "0.3.0";

/// Dispatches the configured command. Precondition failures propagate as
/// dhankel::PreconditionError / DomainError.
Report run(const ExperimentConfig& cfg);

}  // namespace dhankel::cli
