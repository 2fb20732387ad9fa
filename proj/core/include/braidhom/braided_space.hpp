#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "braidhom/field.hpp"
#include "braidhom/rack.hpp"
#include "braidhom/sparse_matrix.hpp"

namespace braidhom {

// Basis word of V^{⊗n} encoded in base r, first letter most significant, so
// numeric order is lexicographic order.
using Word = std::uint64_t;
// Sparse tensor: sorted (word, coefficient) pairs, no zeros.
using Tensor = std::vector<std::pair<Word, Scalar>>;

void normalize_tensor(Tensor& t, const Field& F);

class WordCodec {
 public:
  WordCodec(std::size_t r, std::size_t n);
  std::size_t rank() const { return r_; }
  std::size_t length() const { return n_; }
  Word count() const { return pow_[n_]; }
  // Weight of position k (0-based from the left).
  Word weight(std::size_t k) const { return pow_[n_ - 1 - k]; }
  std::size_t letter(Word w, std::size_t k) const { return (w / weight(k)) % r_; }
  std::vector<std::size_t> letters(Word w) const;
  Word encode(const std::vector<std::size_t>& letters) const;

 private:
  std::size_t r_, n_;
  std::vector<Word> pow_;
};

// Concatenation of a length-m word u and a length-n word v over r letters.
Word concat_words(Word u, Word v, std::size_t r, std::size_t n);
Word checked_power(std::size_t r, std::size_t n);

class BraidedVectorSpace {
 public:
  // Generic constructor from a braiding matrix on V⊗V (pair index a*r+b).
  static BraidedVectorSpace from_matrix(std::vector<std::string> labels, SparseMatrix sigma);

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Field& field() const { return sigma_.field(); }
  const SparseMatrix& sigma() const { return sigma_; }
  const SparseMatrix& sigma_inv() const { return sigma_inv_; }
  bool invertible() const { return invertible_; }

  // Rack-type data, when built by braided_space().
  const Rack* rack() const { return rack_.get(); }
  std::shared_ptr<const Rack> rack_ptr() const { return rack_; }
  const Cocycle* cocycle() const { return cocycle_ ? &*cocycle_ : nullptr; }
  bool epsilon() const { return epsilon_; }
  bool graded() const { return rack_ && rack_->class_set(); }

  // sigma -> -sigma; for rack-type spaces this toggles epsilon.
  BraidedVectorSpace epsilon_twisted() const;
  // Dual braiding: the transpose of sigma in the dual basis.
  BraidedVectorSpace dual() const;
  // Same space with scalars read in F (from Q, or identity if already F).
  BraidedVectorSpace over(const Field& F) const;

 private:
  friend BraidedVectorSpace braided_space(const Rack&, const Cocycle&, bool, const Field&);

  std::vector<std::string> labels_;
  SparseMatrix sigma_;
  SparseMatrix sigma_inv_;
  bool invertible_ = true;
  std::shared_ptr<const Rack> rack_;
  std::optional<Cocycle> cocycle_;
  bool epsilon_ = false;
};

// sigma(a⊗b) = ±x_ab (b ⊗ a^b), sign -1 iff epsilon. Throws InvalidInput on a
// cocycle violation.
BraidedVectorSpace braided_space(const Rack& R, const Cocycle& x, bool epsilon, const Field& F);
// Rank-one space with sigma = q.
BraidedVectorSpace rank_one_space(const Scalar& q, const Field& F);

// Applies sigma_gen (gen > 0) or its inverse (gen < 0) on V^{⊗n}.
Tensor apply_generator(const BraidedVectorSpace& V, std::size_t n, int gen, const Tensor& t);
// Applies a braid word left to right: the first letter acts first.
Tensor apply_braid_word(const BraidedVectorSpace& V, std::size_t n, const std::vector<int>& word,
                        Tensor t);
// Matrix of the word on V^{⊗n} in the lexicographic word basis.
SparseMatrix braid_word_action(const BraidedVectorSpace& V, std::size_t n,
                               const std::vector<int>& word);

struct BraidCheckReport {
  bool ok = true;
  std::string message;
  std::optional<std::array<std::size_t, 3>> witness;  // basis triple
};

// Invertibility, the braid equation on V^{⊗3}, and grading compatibility.
BraidCheckReport check_braided(const BraidedVectorSpace& V);

}  // namespace braidhom
