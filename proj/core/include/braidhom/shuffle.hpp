#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "braidhom/braided_space.hpp"
#include "braidhom/field.hpp"
#include "braidhom/sparse_matrix.hpp"

namespace braidhom {

// An (m, n)-shuffle as a bit string: 0 marks a left-block strand, 1 a
// right-block strand, read left to right in the output.
struct ShuffleRecord {
  std::size_t m = 0, n = 0;
  std::vector<std::uint8_t> interleaving;
  int sign = 1;
  std::size_t crossings = 0;  // number of (1, 0) pairs
};

// All C(m+n, n) shuffles in lexicographic order of the bit strings.
std::vector<ShuffleRecord> shuffles(std::size_t m, std::size_t n);

// coeff[k] = number of (m, n)-shuffles with k crossings.
std::vector<mpz_class> crossing_distribution(std::size_t m, std::size_t n);

// c_{m,n}: the sum of (-1)^crossings over all (m, n)-shuffles.
mpz_class signed_shuffle_count(std::size_t m, std::size_t n);

// (a choose b)_q as the crossing-weighted sum over (b, a-b)-shuffles; never divides.
Scalar quantum_binomial(std::size_t a, std::size_t b, const Scalar& q, const Field& F);

// Target position of each strand: strand i ends at perm[i] (0-based).
using Permutation = std::vector<std::size_t>;

// Reduced word in sigma_1..sigma_{n-1} for perm, by insertion sort; the
// swaps are recorded in time order, so the word is applied left to right.
std::vector<int> matsumoto_lift(const Permutation& perm);
std::size_t inversion_count(const Permutation& perm);
// Strand permutation of a shuffle: left strands go to the 0 slots in order,
// right strands to the 1 slots.
Permutation shuffle_permutation(const ShuffleRecord& s);

// Lift words of all (m, n)-shuffles, in shuffles() order.
std::vector<std::vector<int>> shuffle_lifts(std::size_t m, std::size_t n);

// Quantum shuffle product of a length-m tensor and a length-n tensor.
Tensor shuffle_product(const BraidedVectorSpace& V, const Tensor& u, std::size_t m,
                       const Tensor& v, std::size_t n);

// Sum over all tau in S_n of the lifted braid acting on V^{⊗n}.
SparseMatrix quantum_symmetrizer(const BraidedVectorSpace& V, std::size_t n);
// The same operator applied to a tensor.
Tensor apply_symmetrizer(const BraidedVectorSpace& V, std::size_t n, const Tensor& t);

}  // namespace braidhom
