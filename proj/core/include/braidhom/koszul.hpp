#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "braidhom/hurwitz.hpp"
#include "braidhom/nichols.hpp"
#include "braidhom/rank_table.hpp"

namespace braidhom {

// K(M)^{p,q} = B(V*)_p ⊗ M_q for the rack space V of c with the sign
// cocycle, and d(psi ⊗ r) = sum_v d_v(psi) ⊗ [r | v], of bidegree
// (-1, +1). The per-class pieces d_i sum v over the conjugacy class c_i.
// Basis of (p, q): index i * dim M_q + m.
class KoszulComplex {
 public:
  KoszulComplex(std::shared_ptr<const NicholsData> nichols, GradedOrbitModule module,
                std::size_t pmax, std::size_t qmax);

  std::size_t pmax() const { return pmax_; }
  std::size_t qmax() const { return qmax_; }
  std::size_t class_count() const { return classes_.size(); }
  const NicholsData& nichols() const { return *nichols_; }
  const GradedOrbitModule& module() const { return module_; }
  const Field& field() const { return nichols_->field(); }

  // dim B(V*)_p, zero beyond the assembled range.
  std::size_t nichols_dim(std::size_t p) const;
  std::size_t dim(std::size_t p, std::size_t q) const;
  // d: (p, q) -> (p-1, q+1); a zero map when either end is outside the range.
  SparseMatrix differential(std::size_t p, std::size_t q) const;
  SparseMatrix class_differential(std::size_t i, std::size_t p, std::size_t q) const;
  // Prepending v on the module: (p, q) -> (p, q+1). Commutes with d.
  SparseMatrix left_action(std::size_t v, std::size_t p, std::size_t q) const;
  // P_g(psi ⊗ r) = psi g* ⊗ r: (p, q) -> (p+1, q).
  SparseMatrix append_dual(std::size_t g, std::size_t p, std::size_t q) const;
  // The conjugated multiplication T_g(psi ⊗ r) = sum x' psi ⊗ [r | v] over the
  // letters v whose carry across psi is g: (p, q) -> (p, q+1).
  SparseMatrix conjugated_multiplication(std::size_t g, std::size_t p, std::size_t q) const;

  // Replaces d_v on B(V*)_p (negative controls in tests).
  void set_derivation(std::size_t v, std::size_t p, SparseMatrix D);

 private:
  SparseMatrix letter_differential(std::size_t v, std::size_t p, std::size_t q) const;
  std::shared_ptr<const NicholsData> nichols_;
  GradedOrbitModule module_;
  std::size_t pmax_, qmax_;
  std::vector<std::vector<std::size_t>> classes_;  // letters per class
  std::vector<std::vector<SparseMatrix>> derivations_;  // [v][p], p = 1..top
};

// Koszul complex of a graded orbit module (R, R^{(H)}, or the ring of a
// restricted class set). Nichols data are assembled to degree pmax + 1.
KoszulComplex koszul_complex(std::shared_ptr<const ConjClassSet> c, const GradedOrbitModule& M,
                             std::size_t pmax, std::size_t qmax, const Field& F);
// Convenience: the complex of R itself for c.
KoszulComplex koszul_complex_ring(std::shared_ptr<const ConjClassSet> c, std::size_t pmax,
                                  std::size_t qmax, const Field& F);

// rk H^{p,q} for p <= pmax, q <= qmax, axes (p, q).
RankTable koszul_homology(const KoszulComplex& K);
// The same split by the d-invariant multigrade (letters of psi plus letters
// of r, per class), axes (p, q, t_1, ..., t_m).
RankTable koszul_homology_multigraded(const KoszulComplex& K);

struct KoszulReport {
  bool d_squared = true;
  bool anticommute = true;
  bool trivial_action = true;
  bool homotopy = true;
  std::string witness;  // first failure, if any
  bool ok() const { return d_squared && anticommute && trivial_action && homotopy; }
};

// (a) d^2 = 0 and d_i d_j + d_j d_i = 0; (b) prepending any letter acts by
// zero on homology; (c) d P_g - P_g d = T_g for every letter g.
KoszulReport verify_koszul_identities(const KoszulComplex& K);

struct VanishingInfo {
  std::optional<int> last_nonzero;  // largest q <= qmax with H^{p,q} != 0
  std::size_t zeros_after = 0;      // zero degrees observed after it
};
VanishingInfo vanishing(const RankTable& H, std::size_t p, std::size_t qmax);

// count(j) = sum_q rk H^{1+j,q}(K(R)) for j <= jmax. Throws Error asking for
// a larger qmax unless the top three degrees of each row vanish.
std::vector<std::size_t> generator_counts(const KoszulComplex& K, std::size_t jmax);

}  // namespace braidhom
