#include "involute/series_oracle.hpp"

#include "involute/linalg.hpp"

#include <algorithm>

namespace involute {

OracleRun run_oracle(const PDESystem& s, unsigned R) {
  const unsigned top = s.q() + R;
  JetIndex index(s.n(), s.m(), top);
  EchelonBasis basis;
  OracleRun run;
  for (unsigned j = 0; j <= R; ++j) {
    const std::vector<MultiIndex> shifts =
        j == 0 ? std::vector<MultiIndex>{MultiIndex(s.n())} : multi_indices_of_length(s.n(), j);
    for (const MultiIndex& by : shifts) {
      for (const auto& eq : s.equations()) {
        SparseRow row;
        row.reserve(eq.terms().size());
        for (const auto& [coord, c] : eq.terms()) {
          row.emplace_back(index.column({coord.field, coord.index + by}), c);
        }
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        const auto pivot = basis.insert(std::move(row));
        if (j > 0 && pivot && index[*pivot].order() < s.q() + j) {
          run.reclassified.push_back(index[*pivot]);
        }
      }
    }
  }
  for (unsigned r = 0; r <= R; ++r) {
    TaylorLayer layer;
    layer.order = s.q() + r;
    run.layers.push_back(std::move(layer));
  }
  for (std::size_t col = 0; col < index.size(); ++col) {
    const JetCoordinate& c = index[col];
    if (c.order() < s.q()) continue;
    TaylorLayer& layer = run.layers[c.order() - s.q()];
    (basis.has_pivot(col) ? layer.principal : layer.parametric).push_back(c);
  }
  return run;
}

std::vector<TaylorLayer> classify_layers(const PDESystem& s, unsigned R) {
  return run_oracle(s, R).layers;
}

bool solved_form_condition_check(const PDESystem& s, unsigned R) {
  return run_oracle(s, R).solved_form();
}

}  // namespace involute
