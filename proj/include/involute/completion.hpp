#ifndef INVOLUTE_COMPLETION_HPP
#define INVOLUTE_COMPLETION_HPP

#include "involute/rational.hpp"
#include "involute/system.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace involute {

class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted() : std::runtime_error("no involutive completion within budget") {}
};

/// One pass of the loop. `action` is what was done to the working system:
/// prolong, project, or stop (the system was found involutive).
struct CompletionStep {
  enum class Action { prolong, project, stop };
  Action action;
  unsigned order_before = 0;
  unsigned order_after = 0;
  Integer dim_before;             // dim R of the working system
  Integer dim_after;              // dim R after the action
  Integer multiplicative;         // #MV of the working symbol
  Integer prolonged_symbol_rank;  // rank S_{q+1}
  Integer prolonged_dim_R;        // dim R_{q+1}
  Integer prolonged_dim_S;        // dim S_{q+1}
  Integer projected_dim_R;        // dim R^(1)_q computed by elimination
};

std::string to_string(CompletionStep::Action a);

struct CompletionTrace {
  std::vector<CompletionStep> steps;
  unsigned r = 0;
  unsigned s = 0;
  PDESystem result;
};

/// Prolongs while the symbol is not involutive, projects while the
/// prolongation exposes integrability conditions. Throws BudgetExhausted
/// when more than max_steps actions would be needed.
CompletionTrace cartan_kuranishi(const PDESystem& system, std::size_t max_steps = 32);

nlohmann::json to_json(const CompletionStep& step);
nlohmann::json to_json(const CompletionTrace& trace);

}  // namespace involute

#endif  // INVOLUTE_COMPLETION_HPP
