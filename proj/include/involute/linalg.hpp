#ifndef INVOLUTE_LINALG_HPP
#define INVOLUTE_LINALG_HPP

#include "involute/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace involute {

/// Dense exact-rational matrix with optional column labels.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  /// Labels must number cols() and be pairwise distinct.
  void set_column_labels(std::vector<std::string> labels);
  const std::vector<std::string>& column_labels() const { return labels_; }
  bool has_column_labels() const { return !labels_.empty(); }

  void append_row(std::span<const Rational> values);
  void swap_rows(std::size_t a, std::size_t b);
  bool row_is_zero(std::size_t i) const;

  RationalMatrix transposed() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
  std::vector<std::string> labels_;
};

/// One elementary row operation.
///   swap:  exchange rows `source` and `target`
///   scale: row `target` *= factor  (factor != 0)
///   add:   row `target` += factor * row `source`
struct RowOp {
  enum class Kind { swap, scale, add };
  Kind kind;
  std::size_t source;
  std::size_t target;
  Rational factor;
};

using RowOps = std::vector<RowOp>;

void apply(const RowOp& op, RationalMatrix& matrix);
RationalMatrix replay(const RowOps& ops, RationalMatrix matrix);

struct RrefResult {
  RationalMatrix matrix;
  RowOps ops;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row-echelon form. Columns are scanned left to right and the
/// pivot in each column is the topmost non-zero entry among rows not yet
/// used; pivots are scaled to 1 and zero rows end up at the bottom.
RrefResult rref(const RationalMatrix& matrix);

std::size_t rank(const RationalMatrix& matrix);

/// True iff both matrices have the same row space. Throws
/// std::invalid_argument("incomparable systems") when the column labels
/// (or, without labels, the column counts) differ.
bool row_space_equal(const RationalMatrix& a, const RationalMatrix& b);

/// Sparse row: strictly increasing column indices, no zero values.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

SparseRow to_sparse(std::span<const Rational> dense);

/// result = a + factor * b
SparseRow axpy(const SparseRow& a, const Rational& factor, const SparseRow& b);

/// Incremental row-echelon basis over sparse rows. The leading column of a
/// row is its smallest column index; each stored row is normalized so its
/// leading entry is 1. The set of leading columns equals the pivot set of
/// the reduced row-echelon form of all inserted rows, whatever the
/// insertion order.
class EchelonBasis {
 public:
  /// Reduces the row against the basis; stores it and returns its new
  /// pivot column when it is independent, std::nullopt otherwise.
  std::optional<std::size_t> insert(SparseRow row);

  /// Leading-entry reduction of `row` against the basis.
  SparseRow reduce(SparseRow row) const;

  bool contains(const SparseRow& row) const { return reduce(row).empty(); }

  std::size_t rank() const { return rows_.size(); }
  std::vector<std::size_t> pivot_columns() const;
  bool has_pivot(std::size_t column) const { return rows_.count(column) != 0; }

  /// Stored echelon rows keyed by pivot column.
  const std::map<std::size_t, SparseRow>& rows() const { return rows_; }

  /// Rows of the reduced row-echelon form, ordered by pivot column.
  std::vector<SparseRow> reduced_rows() const;

 private:
  std::map<std::size_t, SparseRow> rows_;
};

}  // namespace involute

#endif  // INVOLUTE_LINALG_HPP
