#ifndef INVOLUTE_ANALYSIS_HPP
#define INVOLUTE_ANALYSIS_HPP

#include "involute/completion.hpp"
#include "involute/counting.hpp"
#include "involute/parser.hpp"

#include <cstddef>
#include <optional>
#include <string_view>

namespace involute {

struct AnalyzeOptions {
  std::size_t max_steps = 32;
  bool trace = false;
  std::optional<unsigned> oracle_orders;
};

/// Completes the system and computes the full report. Throws
/// BudgetExhausted when completion does not terminate within max_steps.
AnalysisReport analyze(const PDESystem& system, const AnalyzeOptions& options = {});

/// Parses `text` with every parameter moved to a second value and reports
/// whether r, s, the characters or any completion dimension change.
bool parameter_special(std::string_view text, const ParseOptions& parse_options,
                       const AnalyzeOptions& options);

}  // namespace involute

#endif  // INVOLUTE_ANALYSIS_HPP
