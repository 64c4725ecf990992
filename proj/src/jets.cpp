#include "involute/jets.hpp"

#include <algorithm>
#include <stdexcept>

namespace involute {

namespace {

LinearEquation shifted(const LinearEquation& e, const MultiIndex& by) {
  LinearEquation out;
  for (const auto& [coord, c] : e.terms()) out.add({coord.field, coord.index + by}, c);
  return out;
}

LinearEquation equation_from_row(const SparseRow& row, const JetIndex& index) {
  LinearEquation eq;
  for (const auto& [col, c] : row) eq.add(index[col], c);
  return eq;
}

std::vector<SparseRow> symbol_rows(const PDESystem& s, const JetIndex& index, std::size_t width) {
  std::vector<SparseRow> rows;
  rows.reserve(s.equations().size());
  for (const auto& eq : s.equations()) {
    SparseRow row;
    for (const auto& [coord, c] : eq.terms()) {
      if (coord.order() != s.q()) break;  // terms are canonically sorted
      row.emplace_back(index.column(coord), c);
    }
    for (const auto& [col, c] : row) {
      if (col >= width) throw std::logic_error("symbol column outside order-q block");
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

LinearEquation formal_derivative(const LinearEquation& e, std::size_t mu) {
  if (e.empty()) return e;
  const std::size_t n = e.terms().begin()->first.index.dimensions();
  if (mu >= n) throw std::out_of_range("coordinate index out of range");
  MultiIndex by(n);
  by.set(mu, 1);
  return shifted(e, by);
}

PDESystem prolong(const PDESystem& s, unsigned r) {
  if (r == 0) throw std::invalid_argument("prolongation count must be positive");
  std::vector<LinearEquation> out = s.equations();
  for (unsigned j = 1; j <= r; ++j) {
    for (const MultiIndex& by : multi_indices_of_length(s.n(), j)) {
      for (const auto& eq : s.equations()) out.push_back(shifted(eq, by));
    }
  }
  return s.with_equations(std::move(out), s.q() + r);
}

PDESystem project(const PDESystem& prolonged, unsigned target_order) {
  if (target_order >= prolonged.q()) throw std::invalid_argument("projection must lower the order");
  JetIndex index(prolonged.n(), prolonged.m(), prolonged.q());
  EchelonBasis basis;
  for (const auto& eq : prolonged.equations()) basis.insert(sparse_row(eq, index));
  EchelonBasis low;
  for (const auto& [pivot, row] : basis.rows()) {
    if (index[pivot].order() <= target_order) low.insert(row);
  }
  std::vector<LinearEquation> equations;
  for (const auto& row : low.reduced_rows()) equations.push_back(equation_from_row(row, index));
  if (equations.empty()) throw std::domain_error("projection leaves no equations");
  return prolonged.with_equations(std::move(equations), target_order);
}

SymbolMatrix symbol(const PDESystem& s) {
  JetIndex index(s.n(), s.m(), s.q());
  const std::size_t width = to_size(order_count(static_cast<unsigned>(s.n()), s.q(), static_cast<unsigned>(s.m())));
  SymbolMatrix out;
  out.q = s.q();
  out.columns.assign(index.coordinates().begin(), index.coordinates().begin() + static_cast<std::ptrdiff_t>(width));
  out.base = RationalMatrix(s.equations().size(), width);
  const auto rows = symbol_rows(s, index, width);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [col, c] : rows[i]) out.base(i, col) = c;
  }
  std::vector<std::string> labels;
  for (const auto& coord : out.columns) labels.push_back(to_string(coord, s.fields(), s.coordinates()));
  out.base.set_column_labels(std::move(labels));
  return out;
}

namespace {

EchelonBasis symbol_basis(const PDESystem& s, const JetIndex& index) {
  const std::size_t width = to_size(order_count(static_cast<unsigned>(s.n()), s.q(), static_cast<unsigned>(s.m())));
  EchelonBasis basis;
  for (auto& row : symbol_rows(s, index, width)) basis.insert(std::move(row));
  return basis;
}

}  // namespace

std::size_t symbol_rank(const PDESystem& s) {
  JetIndex index(s.n(), s.m(), s.q());
  return symbol_basis(s, index).rank();
}

Integer dim_S(const PDESystem& s) {
  return order_count(static_cast<unsigned>(s.n()), s.q(), static_cast<unsigned>(s.m())) -
         static_cast<unsigned long>(symbol_rank(s));
}

namespace {

Characters from_pivots(const std::vector<std::size_t>& pivots, const std::vector<JetCoordinate>& columns,
                       std::size_t n, std::size_t m, unsigned q) {
  Characters out;
  out.q = q;
  out.beta.assign(n, 0);
  out.alpha.assign(n, 0);
  for (std::size_t p : pivots) out.beta[columns[p].index.class_of() - 1] += 1;
  for (std::size_t k = 1; k <= n; ++k) {
    out.alpha[k - 1] = class_size(static_cast<unsigned>(k), static_cast<unsigned>(n), q,
                                  static_cast<unsigned>(m)) -
                       out.beta[k - 1];
  }
  return out;
}

}  // namespace

Characters characters(const PDESystem& s) {
  if (s.q() == 0) throw std::domain_error("characters need order at least 1");
  JetIndex index(s.n(), s.m(), s.q());
  const EchelonBasis basis = symbol_basis(s, index);
  return from_pivots(basis.pivot_columns(), index.coordinates(), s.n(), s.m(), s.q());
}

Characters characters_of(const RationalMatrix& symbol, const std::vector<JetCoordinate>& columns,
                         std::size_t n, std::size_t m, unsigned q) {
  if (columns.size() != symbol.cols()) throw std::invalid_argument("column count mismatch");
  EchelonBasis basis;
  for (std::size_t i = 0; i < symbol.rows(); ++i) basis.insert(to_sparse(symbol.row(i)));
  return from_pivots(basis.pivot_columns(), columns, n, m, q);
}

Integer num_multiplicative(const Characters& c) {
  Integer total = 0;
  for (std::size_t k = 0; k < c.beta.size(); ++k) total += static_cast<unsigned long>(k + 1) * c.beta[k];
  return total;
}

bool symbol_involutive(const PDESystem& s) {
  return Integer(static_cast<unsigned long>(symbol_rank(prolong(s, 1)))) ==
         num_multiplicative(characters(s));
}

bool has_integrability_conditions(const PDESystem& s) {
  const PDESystem p = prolong(s, 1);
  return dim_R(p) - dim_S(p) < dim_R(s);
}

Characters propagate_characters(const Characters& c, std::size_t n, unsigned r) {
  if (r == 0) return c;
  Characters out;
  out.q = c.q + r;
  out.beta.assign(n, 0);
  out.alpha.assign(n, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = k; i <= n; ++i) {
      const Integer w = binomial(r + i - k - 1, r - 1);
      out.beta[k - 1] += w * c.beta[i - 1];
      out.alpha[k - 1] += w * c.alpha[i - 1];
    }
  }
  return out;
}

}  // namespace involute
