#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidhom/braided_space.hpp"
#include "braidhom/fnf.hpp"
#include "braidhom/graded_complex.hpp"
#include "braidhom/rank_table.hpp"

namespace braidhom {

// Compositions of n into k parts in colex order (lexicographic on the
// reversed tuple).
std::vector<OrderedPartition> colex_partitions(std::size_t n, std::size_t k);

// Internal-degree-n reduced bar complex of the quantum shuffle algebra of V.
// Bar degree p has basis (colex compositions with p parts) x (words), index
// part * r^n + word; d merges blocks i, i+1 with sign (-1)^{i-1} by the
// quantum shuffle product.
struct BarComplex {
  std::size_t n = 0;
  std::vector<std::vector<OrderedPartition>> parts;  // parts[p]
  GradedComplex complex;                              // degrees 1..n
};

BarComplex bar_complex(const BraidedVectorSpace& V, std::size_t n, const Field& F);

// Ext^{s,n} of the quantum shuffle algebra of V for 0 <= s <= n <= nmax,
// axes (s, n).
RankTable ext_table(const BraidedVectorSpace& V, std::size_t nmax, const Field& F);

// Default truncation for a space of the given rank.
std::size_t default_ext_nmax(std::size_t rank);

// The diagonal ring R_n = Ext^{n,n} of the quantum shuffle algebra of V_eps,
// realized as the coinvariants of B_n on V^{⊗n}.
class ComponentsRing {
 public:
  std::size_t nmax() const { return dims_.size() - 1; }
  std::size_t dim(std::size_t n) const { return dims_.at(n); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  // True when every braid generator sends basis words to multiples of basis
  // words, so that the orbit basis and structure constants are available.
  bool monomial() const { return monomial_; }
  // Representative word of basis element i in degree n.
  Word representative(std::size_t n, std::size_t i) const { return reps_.at(n).at(i); }
  // Class of a word: (basis index, coefficient), or nullopt if it is zero.
  std::optional<std::pair<std::size_t, Scalar>> class_of(std::size_t n, Word w) const;
  // Product of basis elements i in degree m and j in degree n.
  std::optional<std::pair<std::size_t, Scalar>> multiply(std::size_t m, std::size_t i,
                                                         std::size_t n, std::size_t j) const;
  const Field& field() const { return field_; }

 private:
  friend ComponentsRing components_ring(const BraidedVectorSpace&, std::size_t, const Field&);
  Field field_;
  std::size_t r_ = 0;
  bool monomial_ = true;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<Word>> reps_;
  // Per degree and word: basis index (or npos) and coefficient.
  std::vector<std::vector<std::size_t>> orbit_;
  std::vector<std::vector<Scalar>> coeff_;
};

ComponentsRing components_ring(const BraidedVectorSpace& V, std::size_t nmax, const Field& F);

// Dimension of R_n computed as the rank of the kernel of the top bar
// differential over V_eps.
std::size_t top_bar_kernel_rank(const BraidedVectorSpace& V, std::size_t n, const Field& F);

struct MainCorReport {
  bool ok = true;
  bool matrices_match = true;
  std::vector<std::size_t> braid;  // H_j for j = 0..n
  std::vector<std::size_t> ext;    // Ext^{n-j,n} of V_eps for j = 0..n
  std::string message;
};

// Compares H_j(B_n; V^{⊗n}) with Ext^{n-j,n} over the algebra of V_eps, and
// the two complexes matrix by matrix under the basis bijection.
MainCorReport verify_main_cor(const BraidedVectorSpace& V, std::size_t n, const Field& F);

}  // namespace braidhom
