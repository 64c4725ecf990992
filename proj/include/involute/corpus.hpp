#ifndef INVOLUTE_CORPUS_HPP
#define INVOLUTE_CORPUS_HPP

#include "involute/counting.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace involute {

struct ExpectedValues {
  unsigned r = 0;
  unsigned s = 0;
  std::vector<Integer> beta;
  std::vector<Integer> alpha;
  Polynomial hilbert;
  std::optional<Polynomial> hilbert_bar;
  std::optional<std::vector<Rational>> alpha_bar;
  Rational dof;
};

struct CorpusEntry {
  std::string name;
  std::string_view source;
  ExpectedValues expected;
  /// Massive theory without Stueckelberg fields.
  bool massive = false;
};

/// The 14 built-in systems, in listing order.
const std::vector<CorpusEntry>& corpus();

/// Throws std::out_of_range for unknown names.
const CorpusEntry& corpus_entry(std::string_view name);

/// One line per mismatching field; empty when the report matches.
std::vector<std::string> compare(const AnalysisReport& report, const ExpectedValues& expected);

}  // namespace involute

#endif  // INVOLUTE_CORPUS_HPP
