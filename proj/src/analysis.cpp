#include "involute/analysis.hpp"

#include "involute/jets.hpp"
#include "involute/series_oracle.hpp"

namespace involute {

namespace {

struct Fingerprint {
  unsigned r;
  unsigned s;
  Characters characters;
  std::vector<Integer> dims;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const PDESystem& system, std::size_t max_steps) {
  const CompletionTrace trace = cartan_kuranishi(system, max_steps);
  Fingerprint fp{trace.r, trace.s, characters(trace.result), {}};
  for (const auto& step : trace.steps) {
    fp.dims.push_back(step.dim_before);
    fp.dims.push_back(step.prolonged_symbol_rank);
    fp.dims.push_back(step.prolonged_dim_R);
    fp.dims.push_back(step.projected_dim_R);
  }
  return fp;
}

}  // namespace

AnalysisReport analyze(const PDESystem& system, const AnalyzeOptions& options) {
  const CompletionTrace trace = cartan_kuranishi(system, options.max_steps);
  const PDESystem& done = trace.result;
  AnalysisReport rep = build_report(system.name(), characters(done), done.n(), done.m(), done.gammas());
  rep.r = trace.r;
  rep.s = trace.s;
  if (options.trace) rep.trace = to_json(trace);
  if (options.oracle_orders) {
    const unsigned R = *options.oracle_orders;
    const OracleRun run = run_oracle(done, R);
    OracleSummary summary;
    summary.max_r = R;
    summary.matches_hilbert = true;
    for (unsigned r = 0; r <= R; ++r) {
      const Integer count = static_cast<unsigned long>(run.layers[r].parametric.size());
      summary.parametric.push_back(count);
      if (Rational(count) != rep.hilbert(Rational(r))) summary.matches_hilbert = false;
    }
    summary.solved_form = run.solved_form();
    rep.oracle = summary;
  }
  return rep;
}

bool parameter_special(std::string_view text, const ParseOptions& parse_options,
                       const AnalyzeOptions& options) {
  const ParsedFile first = parse_file(text, parse_options);
  if (first.parameters.empty()) return false;
  ParseOptions shifted = parse_options;
  for (const auto& [name, value] : first.parameters) {
    shifted.overrides[name] = 2 * value + Rational(3, 7);
  }
  const ParsedFile second = parse_file(text, shifted);
  return !(fingerprint(first.system, options.max_steps) ==
           fingerprint(second.system, options.max_steps));
}

}  // namespace involute
