#include "involute/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace involute {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

void RationalMatrix::set_column_labels(std::vector<std::string> labels) {
  if (labels.size() != cols_) throw std::invalid_argument("label count does not match columns");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw std::invalid_argument("column labels are not distinct");
  labels_ = std::move(labels);
}

void RationalMatrix::append_row(std::span<const Rational> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw std::invalid_argument("row length does not match columns");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void RationalMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
}

bool RationalMatrix::row_is_zero(std::size_t i) const {
  const auto r = row(i);
  return std::all_of(r.begin(), r.end(), [](const Rational& v) { return v == 0; });
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

void apply(const RowOp& op, RationalMatrix& m) {
  switch (op.kind) {
    case RowOp::Kind::swap:
      m.swap_rows(op.source, op.target);
      break;
    case RowOp::Kind::scale:
      if (op.factor == 0) throw std::invalid_argument("scale factor must be non-zero");
      for (auto& v : m.row(op.target)) v *= op.factor;
      break;
    case RowOp::Kind::add: {
      if (op.source == op.target) throw std::invalid_argument("add needs distinct rows");
      auto src = m.row(op.source);
      auto dst = m.row(op.target);
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (src[j] != 0) dst[j] += op.factor * src[j];
      }
      break;
    }
  }
}

RationalMatrix replay(const RowOps& ops, RationalMatrix matrix) {
  for (const auto& op : ops) apply(op, matrix);
  return matrix;
}

RrefResult rref(const RationalMatrix& input) {
  RrefResult result{input, {}, {}};
  RationalMatrix& m = result.matrix;
  std::size_t next = 0;
  for (std::size_t col = 0; col < m.cols() && next < m.rows(); ++col) {
    std::size_t pivot = next;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != next) {
      RowOp op{RowOp::Kind::swap, pivot, next, Rational(0)};
      apply(op, m);
      result.ops.push_back(std::move(op));
    }
    if (m(next, col) != 1) {
      RowOp op{RowOp::Kind::scale, next, next, Rational(1) / m(next, col)};
      apply(op, m);
      result.ops.push_back(std::move(op));
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == next || m(i, col) == 0) continue;
      RowOp op{RowOp::Kind::add, next, i, -m(i, col)};
      apply(op, m);
      result.ops.push_back(std::move(op));
    }
    result.pivot_columns.push_back(col);
    ++next;
  }
  return result;
}

std::size_t rank(const RationalMatrix& matrix) {
  EchelonBasis basis;
  for (std::size_t i = 0; i < matrix.rows(); ++i) basis.insert(to_sparse(matrix.row(i)));
  return basis.rank();
}

bool row_space_equal(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.cols() || a.column_labels() != b.column_labels()) {
    throw std::invalid_argument("incomparable systems");
  }
  EchelonBasis basis_a;
  for (std::size_t i = 0; i < a.rows(); ++i) basis_a.insert(to_sparse(a.row(i)));
  EchelonBasis basis_b;
  for (std::size_t i = 0; i < b.rows(); ++i) basis_b.insert(to_sparse(b.row(i)));
  return basis_a.reduced_rows() == basis_b.reduced_rows();
}

SparseRow to_sparse(std::span<const Rational> dense) {
  SparseRow out;
  for (std::size_t j = 0; j < dense.size(); ++j) {
    if (dense[j] != 0) out.emplace_back(j, dense[j]);
  }
  return out;
}

SparseRow axpy(const SparseRow& a, const Rational& factor, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, factor * ib->second);
      ++ib;
    } else {
      Rational v = ia->second + factor * ib->second;
      if (v != 0) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

SparseRow EchelonBasis::reduce(SparseRow row) const {
  while (!row.empty()) {
    auto it = rows_.find(row.front().first);
    if (it == rows_.end()) break;
    const Rational factor = -row.front().second;
    row = axpy(row, factor, it->second);
  }
  return row;
}

std::optional<std::size_t> EchelonBasis::insert(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return std::nullopt;
  const Rational lead = row.front().second;
  if (lead != 1) {
    for (auto& entry : row) entry.second /= lead;
  }
  const std::size_t pivot = row.front().first;
  rows_.emplace(pivot, std::move(row));
  return pivot;
}

std::vector<std::size_t> EchelonBasis::pivot_columns() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto& [col, row] : rows_) out.push_back(col);
  return out;
}

std::vector<SparseRow> EchelonBasis::reduced_rows() const {
  // Back substitution from the rightmost pivot: every row already in
  // `done` has zeros in all other pivot columns.
  std::map<std::size_t, SparseRow> done;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SparseRow row = it->second;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 1; k < row.size(); ++k) {
        auto hit = done.find(row[k].first);
        if (hit == done.end()) continue;
        const Rational factor = -row[k].second;
        row = axpy(row, factor, hit->second);
        changed = true;
        break;
      }
    }
    done.emplace(it->first, std::move(row));
  }
  std::vector<SparseRow> out;
  out.reserve(done.size());
  for (auto& [col, row] : done) out.push_back(std::move(row));
  return out;
}

}  // namespace involute
