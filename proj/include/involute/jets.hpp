#ifndef INVOLUTE_JETS_HPP
#define INVOLUTE_JETS_HPP

#include "involute/linalg.hpp"
#include "involute/system.hpp"

#include <cstddef>
#include <vector>

namespace involute {

/// D_mu applied to a constant-coefficient linear equation (mu 0-based).
LinearEquation formal_derivative(const LinearEquation& e, std::size_t mu);

/// The equations of s together with all their formal derivatives of total
/// order 1..r; order q + r.
PDESystem prolong(const PDESystem& s, unsigned r);

/// Eliminates in canonical column order (highest order first) and keeps the
/// reduced rows whose pivot has order <= target_order.
PDESystem project(const PDESystem& prolonged, unsigned target_order);

/// Coefficients of the order-q coordinates; columns in canonical order.
struct SymbolMatrix {
  RationalMatrix base;
  unsigned q = 0;
  std::vector<JetCoordinate> columns;
};

SymbolMatrix symbol(const PDESystem& s);

/// Rank of the symbol.
std::size_t symbol_rank(const PDESystem& s);

/// order_count(n, q, m) - rank of the symbol.
Integer dim_S(const PDESystem& s);

struct Characters {
  unsigned q = 0;
  std::vector<Integer> beta;   // beta[k-1] = beta^(k)
  std::vector<Integer> alpha;  // alpha[k-1] = alpha^(k)

  friend bool operator==(const Characters&, const Characters&) = default;
};

/// Pivot classes of the solved-form symbol.
Characters characters(const PDESystem& s);

/// Characters from an arbitrary symbol matrix whose columns are the given
/// order-q coordinates, in any order.
Characters characters_of(const RationalMatrix& symbol, const std::vector<JetCoordinate>& columns,
                         std::size_t n, std::size_t m, unsigned q);

/// sum_k k * beta^(k)
Integer num_multiplicative(const Characters& c);

/// rank S_{q+1} == #MV(S_q)
bool symbol_involutive(const PDESystem& s);

/// dim R_{q+1} - dim S_{q+1} < dim R_q
bool has_integrability_conditions(const PDESystem& s);

/// Characters of prolong(s, r) predicted from those of an involutive s.
Characters propagate_characters(const Characters& c, std::size_t n, unsigned r);

}  // namespace involute

#endif  // INVOLUTE_JETS_HPP
