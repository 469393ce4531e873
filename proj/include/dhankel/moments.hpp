#pragma once

#include "dhankel/criteria.hpp"
#include "dhankel/measure.hpp"
#include "dhankel/symbol.hpp"

namespace dhankel {

/// Symbol lambda_n = mu_n. Moments are nonincreasing and nonnegative, so the
/// symbol is flagged decreasing-positive; the measure's support supremum drives
/// the geometric remainder policy when it is below 1.
SymbolSeq moment_sequence(const MeasureSpec& spec);

/// classify() on the moment sequence. Always theorem-exact.
ClassReport classify_measure(const MeasureSpec& spec, OperatorKind kind, const ClassifyConfig& cfg = {});

}  // namespace dhankel
