#pragma once

#include <map>
#include <memory>
#include <vector>

#include "braidhom/braided_space.hpp"
#include "braidhom/sparse_matrix.hpp"

namespace braidhom {

struct NicholsDims {
  std::vector<std::size_t> dims;  // dims[n] for n <= nmax
  bool stably_zero = false;       // two consecutive zeros were seen
};

// dim B(V)_n = rank of the quantum symmetrizer, n <= nmax.
NicholsDims nichols_dims(const BraidedVectorSpace& V, std::size_t nmax, const Field& F);

// <u, phi> = phi^T S_n u, the sum over S_n of the lifted braids paired
// termwise. Tensors of different lengths pair to zero.
Scalar hopf_pairing(const BraidedVectorSpace& V, const Tensor& u, std::size_t n_u,
                    const Tensor& phi, std::size_t n_phi);

// One degree of the Nichols data. B(V)_p has basis the words `primal`
// (columns of S_p independent in word order); B(V*)_p has basis the dual
// words `dual` (rows of S_p[:, primal] independent in word order).
struct NicholsDegree {
  std::size_t p = 0;
  SparseMatrix symmetrizer;   // S_p on V^{⊗p}
  std::vector<Word> primal;   // J
  std::vector<Word> dual;     // I
  SparseMatrix gram;          // S_p[I, J], invertible
  // Coordinates in the dual basis of a dual tensor phi: G^{-T} (S_p^T phi)[J].
  SparseMatrix dual_reduction;  // |I| x r^p
  std::size_t dim() const { return primal.size(); }
};

// Nichols data of V through degree pmax, built degree by degree. Elements
// of B(V*)_p are coordinate columns over the basis `dual`.
class NicholsData {
 public:
  NicholsData(BraidedVectorSpace V, std::size_t pmax, const Field& F);

  const BraidedVectorSpace& space() const { return V_; }
  const Field& field() const { return field_; }
  std::size_t pmax() const { return degrees_.size() - 1; }
  const NicholsDegree& degree(std::size_t p) const { return degrees_.at(p); }
  std::size_t dim(std::size_t p) const { return degrees_.at(p).dim(); }
  // Largest p <= pmax with B_p != 0.
  std::size_t top_degree() const;

  // Coordinates of a dual tensor of length p.
  SparseMatrix::Column reduce_dual(std::size_t p, const Tensor& phi) const;
  // d_w: B(V*)_p -> B(V*)_{p-|w|} with <d_w phi, x> = <phi, w x>, so that
  // d_{vw} = d_w d_v. Throws Error if a Gram matrix is singular.
  SparseMatrix derivation(const std::vector<std::size_t>& word, std::size_t p) const;
  // The single-letter derivation d_v, cached.
  const SparseMatrix& skew_derivation(std::size_t v, std::size_t p) const;
  // Product B(V*)_a x B(V*)_b -> B(V*)_{a+b} on basis pairs, as a matrix whose
  // column i * dim(b) + j is the product of basis elements i and j.
  SparseMatrix dual_product(std::size_t a, std::size_t b) const;
  // Right multiplication by the dual letter g*: B(V*)_p -> B(V*)_{p+1}.
  SparseMatrix right_multiplication(std::size_t g, std::size_t p) const;
  // The letter v carried rightwards across dual basis word i of degree p,
  // one crossing sigma(v ⊗ a) = x' (a ⊗ v^a) at a time: returns the final
  // letter v' and the product of the x'. With it the skew-Leibniz rule reads
  // d_v(phi psi) = d_v(phi) psi + x' phi d_{v'}(psi).
  std::pair<std::size_t, Scalar> carry(std::size_t v, std::size_t p, std::size_t i) const;
  // Twist phi -> phi^g by the action of the label g: on dual letters
  // a* -> x'(a, g) (a^g)*, where x' is the signed cocycle of sigma.
  SparseMatrix twist(std::size_t g, std::size_t p) const;

 private:
  BraidedVectorSpace V_;
  Field field_;
  std::vector<NicholsDegree> degrees_;
  mutable std::map<std::pair<std::size_t, std::size_t>, SparseMatrix> cache_;
};

}  // namespace braidhom
