#ifndef INVOLUTE_TEST_HELPERS_HPP
#define INVOLUTE_TEST_HELPERS_HPP

#include "involute/corpus.hpp"
#include "involute/linalg.hpp"
#include "involute/parser.hpp"

#include <random>
#include <string>

namespace testing {

inline involute::PDESystem corpus_system(const std::string& name) {
  return involute::parse(involute::corpus_entry(name).source);
}

inline involute::PDESystem system_from(const std::string& text) { return involute::parse(text); }

inline involute::RationalMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                                              int density_percent = 60) {
  std::uniform_int_distribution<int> value(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> pct(0, 99);
  involute::RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (pct(rng) < density_percent) m(i, j) = involute::make_rational(value(rng), den(rng));
    }
  }
  return m;
}

/// The equations of `s` that lie in the row space of `container` (both
/// read at order `order`).
inline bool row_space_contains(const involute::PDESystem& container, const involute::PDESystem& s,
                               unsigned order) {
  involute::JetIndex index(s.n(), s.m(), order);
  involute::EchelonBasis basis;
  for (const auto& eq : container.equations()) basis.insert(involute::sparse_row(eq, index));
  for (const auto& eq : s.equations()) {
    if (!basis.contains(involute::sparse_row(eq, index))) return false;
  }
  return true;
}

}  // namespace testing

#endif  // INVOLUTE_TEST_HELPERS_HPP
