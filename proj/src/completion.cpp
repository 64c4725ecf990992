#include "involute/completion.hpp"

#include "involute/jets.hpp"

namespace involute {

std::string to_string(CompletionStep::Action a) {
  switch (a) {
    case CompletionStep::Action::prolong:
      return "prolong";
    case CompletionStep::Action::project:
      return "project";
    case CompletionStep::Action::stop:
      return "stop";
  }
  return "?";
}

CompletionTrace cartan_kuranishi(const PDESystem& system, std::size_t max_steps) {
  if (max_steps == 0) throw std::invalid_argument("max_steps must be at least 1");
  CompletionTrace trace{{}, 0, 0, system};
  PDESystem& w = trace.result;
  for (std::size_t step = 0;; ++step) {
    const PDESystem p = prolong(w, 1);
    CompletionStep rec{};
    rec.order_before = w.q();
    rec.dim_before = dim_R(w);
    rec.multiplicative = num_multiplicative(characters(w));
    rec.prolonged_symbol_rank = static_cast<unsigned long>(symbol_rank(p));
    rec.prolonged_dim_R = dim_R(p);
    rec.prolonged_dim_S = dim_S(p);
    const PDESystem projected = project(p, w.q());
    rec.projected_dim_R = dim_R(projected);

    const bool involutive_symbol = rec.prolonged_symbol_rank == rec.multiplicative;
    const bool integrable = rec.prolonged_dim_R - rec.prolonged_dim_S >= rec.dim_before;
    if ((!involutive_symbol || !integrable) && step == max_steps) throw BudgetExhausted();
    if (!involutive_symbol) {
      rec.action = CompletionStep::Action::prolong;
      w = p;
      ++trace.r;
    } else if (!integrable) {
      rec.action = CompletionStep::Action::project;
      w = projected;
      ++trace.s;
    } else {
      rec.action = CompletionStep::Action::stop;
    }
    rec.order_after = w.q();
    rec.dim_after = dim_R(w);
    trace.steps.push_back(std::move(rec));
    if (trace.steps.back().action == CompletionStep::Action::stop) return trace;
  }
}

nlohmann::json to_json(const CompletionStep& step) {
  return {{"action", to_string(step.action)},
          {"order_before", step.order_before},
          {"order_after", step.order_after},
          {"dim_before", to_string(step.dim_before)},
          {"dim_after", to_string(step.dim_after)},
          {"multiplicative", to_string(step.multiplicative)},
          {"prolonged_symbol_rank", to_string(step.prolonged_symbol_rank)},
          {"prolonged_dim_R", to_string(step.prolonged_dim_R)},
          {"prolonged_dim_S", to_string(step.prolonged_dim_S)},
          {"projected_dim_R", to_string(step.projected_dim_R)}};
}

nlohmann::json to_json(const CompletionTrace& trace) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : trace.steps) steps.push_back(to_json(s));
  return {{"r", trace.r}, {"s", trace.s}, {"steps", std::move(steps)}, {"result", to_json(trace.result)}};
}

}  // namespace involute
