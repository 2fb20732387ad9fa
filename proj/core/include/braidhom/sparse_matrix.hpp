#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "braidhom/field.hpp"

namespace braidhom {

// Column-compressed exact sparse matrix. Each column holds (row, value)
// pairs sorted by row with no explicit zeros. The field tags the entries.
class SparseMatrix {
 public:
  using Entry = std::pair<std::uint32_t, Scalar>;
  using Column = std::vector<Entry>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols, Field field = Field());

  static SparseMatrix identity(std::size_t n, Field field = Field());

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  const Field& field() const { return field_; }
  std::size_t nnz() const;

  const Column& column(std::size_t j) const { return cols_[j]; }
  // Replaces column j. Entries may be unsorted, duplicated, or zero.
  void set_column(std::size_t j, Column entries);
  // Adds value to entry (i, j); slow path for tests and small builders.
  void add_entry(std::size_t i, std::size_t j, const Scalar& value);
  Scalar at(std::size_t i, std::size_t j) const;

  SparseMatrix transpose() const;
  SparseMatrix operator*(const SparseMatrix& rhs) const;
  SparseMatrix operator+(const SparseMatrix& rhs) const;
  SparseMatrix operator-(const SparseMatrix& rhs) const;
  SparseMatrix scaled(const Scalar& s) const;
  bool is_zero() const;

  // Re-reads the entries in F. Entries must be rationals whose
  // denominators are invertible in F; throws FieldMismatch otherwise.
  SparseMatrix reduced(const Field& F) const;
  // Applies row permutation rp (old row i -> rp[i]) and column permutation cp.
  SparseMatrix permuted(const std::vector<std::uint32_t>& rp,
                        const std::vector<std::uint32_t>& cp) const;
  // Selects columns in the given order.
  SparseMatrix select_columns(const std::vector<std::uint32_t>& cols) const;
  // Selects rows in the given order.
  SparseMatrix select_rows(const std::vector<std::uint32_t>& rows) const;
  // Horizontal concatenation [this | rhs].
  SparseMatrix hconcat(const SparseMatrix& rhs) const;

  // Dense column of a sparse vector applied: returns M * x for sparse x.
  Column apply(const Column& x) const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }

  // Sparse-triplet text format: header "rows cols nnz", then one
  // "row col value" line per entry (0-based, column-major order).
  void write_triplets(std::ostream& out) const;
  static SparseMatrix read_triplets(std::istream& in, Field field = Field());

 private:
  std::size_t rows_ = 0;
  Field field_;
  std::vector<Column> cols_;
};

// Sorts, merges duplicates, and drops zeros.
void normalize_column(SparseMatrix::Column& col, const Field& F);

}  // namespace braidhom
