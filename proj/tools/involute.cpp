#include "involute/analysis.hpp"
#include "involute/corpus.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace involute;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInput = 2, kBudget = 3 };

int cmd_analyze(const std::string& path, bool json, bool trace, std::optional<unsigned> oracle,
                const std::vector<std::string>& params, bool recheck, std::size_t max_steps) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    return kInput;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  ParseOptions popts;
  popts.file = path;
  for (const auto& p : params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) {
      std::cerr << "error: --param expects NAME=VALUE, got '" << p << "'\n";
      return kInput;
    }
    try {
      popts.overrides[p.substr(0, eq)] = parse_rational(p.substr(eq + 1));
    } catch (const std::exception& e) {
      std::cerr << "error: --param " << p << ": " << e.what() << "\n";
      return kInput;
    }
  }
  AnalyzeOptions aopts;
  aopts.max_steps = max_steps;
  aopts.trace = trace;
  aopts.oracle_orders = oracle;
  try {
    const PDESystem system = parse(text, popts);
    AnalysisReport report = analyze(system, aopts);
    if (recheck) report.parameter_special = parameter_special(text, popts, aopts);
    if (json) {
      std::cout << to_json(report).dump(2) << "\n";
    } else {
      std::cout << render_text(report);
      if (report.trace) {
        std::cout << "trace\n";
        for (const auto& step : report.trace->at("steps")) {
          std::cout << "  " << step.at("action").get<std::string>() << "  dim R " << step.at("dim_before").get<std::string>()
                    << " -> " << step.at("dim_after").get<std::string>() << "  rank S_q+1 "
                    << step.at("prolonged_symbol_rank").get<std::string>() << "  #MV "
                    << step.at("multiplicative").get<std::string>() << "\n";
        }
      }
    }
    return kOk;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    if (!e.expected().empty()) {
      std::cerr << "  expected:";
      for (const auto& t : e.expected()) std::cerr << " " << t;
      std::cerr << "\n";
    }
    return kInput;
  } catch (const BudgetExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return kInput;
  }
}

int cmd_corpus_list() {
  for (const auto& e : corpus()) std::cout << e.name << "\n";
  return kOk;
}

int cmd_corpus_run(std::size_t max_steps) {
  int failures = 0;
  for (const auto& e : corpus()) {
    try {
      ParseOptions popts;
      popts.file = e.name + ".pde";
      AnalyzeOptions aopts;
      aopts.max_steps = max_steps;
      const AnalysisReport report = analyze(parse(e.source, popts), aopts);
      const auto diffs = compare(report, e.expected);
      if (diffs.empty()) {
        std::cout << "pass  " << e.name << "  DOF " << to_string(report.dof) << "\n";
      } else {
        ++failures;
        std::cout << "FAIL  " << e.name << "\n";
        for (const auto& d : diffs) std::cout << "      " << d << "\n";
      }
    } catch (const ParseError& err) {
      std::cerr << err.what() << "\n";
      return kInput;
    } catch (const BudgetExhausted& err) {
      std::cerr << e.name << ": " << err.what() << "\n";
      return kBudget;
    }
  }
  std::cout << corpus().size() - static_cast<std::size_t>(failures) << "/" << corpus().size() << " pass\n";
  return failures ? kMismatch : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"involutive completion and degree-of-freedom counting for linear PDE systems"};
  app.require_subcommand(1);

  std::string path;
  bool json = false;
  bool trace = false;
  std::optional<unsigned> oracle;
  std::vector<std::string> params;
  bool recheck = false;
  std::size_t max_steps = 32;

  auto* analyze_cmd = app.add_subcommand("analyze", "complete a system and report its counts");
  analyze_cmd->add_option("file", path, ".pde file")->required();
  analyze_cmd->add_flag("--json", json, "machine-readable report");
  analyze_cmd->add_flag("--trace", trace, "include the completion trace");
  analyze_cmd->add_option("--oracle-orders", oracle, "check H(r) against the series oracle for r = 0..R");
  analyze_cmd->add_option("--param", params, "override a parameter, NAME=VALUE")->allow_extra_args(false);
  analyze_cmd->add_flag("--recheck-param", recheck, "rerun at a second parameter value");
  analyze_cmd->add_option("--max-steps", max_steps, "completion step budget")->check(CLI::PositiveNumber);

  auto* corpus_cmd = app.add_subcommand("corpus", "built-in golden systems");
  corpus_cmd->require_subcommand(1);
  auto* list_cmd = corpus_cmd->add_subcommand("list", "print the corpus names");
  auto* run_cmd = corpus_cmd->add_subcommand("run", "analyze every entry and compare with golden values");
  run_cmd->add_option("--max-steps", max_steps, "completion step budget")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  if (analyze_cmd->parsed()) return cmd_analyze(path, json, trace, oracle, params, recheck, max_steps);
  if (list_cmd->parsed()) return cmd_corpus_list();
  if (run_cmd->parsed()) return cmd_corpus_run(max_steps);
  return kInput;
}
