#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "braidhom/field.hpp"
#include "braidhom/sparse_matrix.hpp"

namespace braidhom {

// Rank over F. Columns are eliminated sparsest first (ties by index); over Q
// the elimination is fraction-free on integer vectors. Throws FieldMismatch
// if M is not tagged with F.
std::size_t rank(const SparseMatrix& M, const Field& F);

// dim ker(d_out) - rank(d_in) at the middle term of C' -> C -> C''.
// Throws ComplexIntegrityError if d_out * d_in != 0 or shapes disagree.
std::size_t homology_rank(const SparseMatrix& d_in, const SparseMatrix& d_out,
                          const Field& F);

// Columns of the result span ker M.
SparseMatrix kernel_basis(const SparseMatrix& M, const Field& F);

// Inverse of a square matrix; throws Error if singular.
SparseMatrix inverse(const SparseMatrix& M, const Field& F);

// Some x with A x = b, or nullopt.
std::optional<SparseMatrix::Column> solve(const SparseMatrix& A,
                                          const SparseMatrix::Column& b,
                                          const Field& F);

// Incremental span of vectors in F^dim. Insertion order decides which
// vectors are kept; the lowest surviving row of each kept vector is its
// pivot. Not safe for concurrent use of one instance.
class SpanBasis {
 public:
  SpanBasis(std::size_t dim, const Field& F);
  ~SpanBasis();
  SpanBasis(SpanBasis&&) noexcept;
  SpanBasis& operator=(SpanBasis&&) noexcept;

  // Returns true if v was independent of the current span (and adds it).
  bool insert(const SparseMatrix::Column& v);
  bool contains(const SparseMatrix::Column& v);
  std::size_t rank() const;
  std::size_t dim() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace braidhom
