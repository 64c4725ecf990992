#ifndef INVOLUTE_SERIES_ORACLE_HPP
#define INVOLUTE_SERIES_ORACLE_HPP

#include "involute/system.hpp"

#include <vector>

namespace involute {

/// Classification of the Taylor coefficients of one order.
struct TaylorLayer {
  unsigned order = 0;
  std::vector<JetCoordinate> principal;
  std::vector<JetCoordinate> parametric;
};

struct OracleRun {
  std::vector<TaylorLayer> layers;  // orders q .. q+R
  /// Coordinates of order below q+j that became principal only when the
  /// derivatives of order j were adjoined (j >= 1).
  std::vector<JetCoordinate> reclassified;
  bool solved_form() const { return reclassified.empty(); }
};

/// Adjoins the derivatives D^J of all equations for |J| = 0..R one layer at
/// a time and reduces jointly, highest order first.
OracleRun run_oracle(const PDESystem& s, unsigned R);

std::vector<TaylorLayer> classify_layers(const PDESystem& s, unsigned R);

/// True iff no layer j >= 1 introduces a principal coordinate of order
/// below q+j.
bool solved_form_condition_check(const PDESystem& s, unsigned R);

}  // namespace involute

#endif  // INVOLUTE_SERIES_ORACLE_HPP
