#pragma once

#include <memory>
#include <vector>

#include "braidhom/braided_space.hpp"
#include "braidhom/graded_complex.hpp"
#include "braidhom/sparse_matrix.hpp"

namespace braidhom {

using OrderedPartition = std::vector<std::size_t>;

// Ordered partitions (compositions) of n into k positive parts, in
// lexicographic order.
std::vector<OrderedPartition> ordered_partitions(std::size_t n, std::size_t k);

// A finite-dimensional representation of B_n.
class BraidModule {
 public:
  virtual ~BraidModule() = default;
  virtual std::size_t strands() const = 0;
  virtual std::size_t dim() const = 0;
  virtual const Field& field() const = 0;
  // sigma_gen (gen > 0) or its inverse (gen < 0) applied to x.
  virtual SparseMatrix::Column apply(int gen, const SparseMatrix::Column& x) const = 0;
};

// V^{⊗n} with the braided action.
class TensorPowerModule final : public BraidModule {
 public:
  TensorPowerModule(BraidedVectorSpace V, std::size_t n);
  std::size_t strands() const override { return n_; }
  std::size_t dim() const override { return dim_; }
  const Field& field() const override { return V_.field(); }
  SparseMatrix::Column apply(int gen, const SparseMatrix::Column& x) const override;
  const BraidedVectorSpace& space() const { return V_; }

 private:
  BraidedVectorSpace V_;
  std::size_t n_;
  std::size_t dim_;
};

// Permutation representation on a finite B_n-set of size dim: images[i-1][x]
// is sigma_i(x); inverses are derived.
class PermutationModule final : public BraidModule {
 public:
  PermutationModule(std::size_t n, std::size_t dim, std::vector<std::vector<std::size_t>> images,
                    Field F);
  std::size_t strands() const override { return n_; }
  std::size_t dim() const override { return dim_; }
  const Field& field() const override { return F_; }
  SparseMatrix::Column apply(int gen, const SparseMatrix::Column& x) const override;

 private:
  std::size_t n_, dim_;
  std::vector<std::vector<std::size_t>> fwd_, back_;
  Field F_;
};

// Cellular complex of the one-point compactification of Conf_n(C) with
// coefficients in V^{⊗n}: degree n + k has basis (ordered partitions with k
// parts, lexicographic) x (words, lexicographic), index part * r^n + word.
// Merging parts i, i+1 carries the sign (-1)^{i-1} and the coefficient
// operator sum over shuffles of (-1)^crossings times the lifted braid.
GradedComplex fnf_complex(const BraidedVectorSpace& V, std::size_t n, const Field& F);
// Same complex for an arbitrary braid-group module.
GradedComplex fnf_complex(const BraidModule& L);

// Ranks of H_j(B_n; V^{⊗n}) for j = 0..n, read at total degree 2n - j.
std::vector<std::size_t> braid_homology(const BraidedVectorSpace& V, std::size_t n,
                                        const Field& F);
std::vector<std::size_t> braid_homology(const BraidModule& L);

}  // namespace braidhom
