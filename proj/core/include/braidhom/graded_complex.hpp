#pragma once

#include <map>
#include <string>
#include <vector>

#include "braidhom/field.hpp"
#include "braidhom/rank_table.hpp"
#include "braidhom/sparse_matrix.hpp"

namespace braidhom {

// Based vector spaces C_q for q in [min_degree, max_degree] with
// differentials d_q: C_q -> C_{q-1}. Missing differentials are zero maps.
class GradedComplex {
 public:
  GradedComplex() = default;
  GradedComplex(int min_degree, int max_degree, Field field);

  int min_degree() const { return min_; }
  int max_degree() const { return max_; }
  const Field& field() const { return field_; }

  void set_dim(int q, std::size_t dim);
  std::size_t dim(int q) const;
  void set_differential(int q, SparseMatrix d);
  // d_q with shape dim(q-1) x dim(q); a zero matrix when unset.
  SparseMatrix differential(int q) const;
  void set_labels(int q, std::vector<std::string> labels) { labels_[q] = std::move(labels); }
  const std::vector<std::string>* labels(int q) const;

  // Throws ComplexIntegrityError if some d_{q-1} d_q is nonzero.
  void check_d_squared() const;
  // Homology rank at degree q.
  std::size_t homology(int q) const;
  // Homology at every degree, computed concurrently.
  std::map<int, std::size_t> homology_all() const;
  // Alternating sum of dimensions.
  long long euler_characteristic() const;

 private:
  int min_ = 0, max_ = -1;
  Field field_;
  std::map<int, std::size_t> dims_;
  std::map<int, SparseMatrix> diffs_;
  std::map<int, std::vector<std::string>> labels_;
};

}  // namespace braidhom
