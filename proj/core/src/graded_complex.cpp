#include "braidhom/graded_complex.hpp"

#include <algorithm>

#include "braidhom/error.hpp"
#include "braidhom/linalg.hpp"
#include "braidhom/parallel.hpp"

namespace braidhom {

GradedComplex::GradedComplex(int min_degree, int max_degree, Field field)
    : min_(min_degree), max_(max_degree), field_(field) {}

void GradedComplex::set_dim(int q, std::size_t dim) { dims_[q] = dim; }

std::size_t GradedComplex::dim(int q) const {
  auto it = dims_.find(q);
  return it == dims_.end() ? 0 : it->second;
}

void GradedComplex::set_differential(int q, SparseMatrix d) {
  if (d.rows() != dim(q - 1) || d.cols() != dim(q)) {
    throw ComplexIntegrityError("differential d_" + std::to_string(q) + " has shape " +
                                std::to_string(d.rows()) + "x" + std::to_string(d.cols()) +
                                ", expected " + std::to_string(dim(q - 1)) + "x" +
                                std::to_string(dim(q)));
  }
  if (d.field() != field_) throw FieldMismatch("differential over the wrong field");
  diffs_[q] = std::move(d);
}

SparseMatrix GradedComplex::differential(int q) const {
  auto it = diffs_.find(q);
  if (it != diffs_.end()) return it->second;
  return SparseMatrix(dim(q - 1), dim(q), field_);
}

const std::vector<std::string>* GradedComplex::labels(int q) const {
  auto it = labels_.find(q);
  return it == labels_.end() ? nullptr : &it->second;
}

void GradedComplex::check_d_squared() const {
  for (int q = min_ + 1; q <= max_; ++q) {
    if (!(differential(q - 1) * differential(q)).is_zero()) {
      throw ComplexIntegrityError("d_" + std::to_string(q - 1) + " d_" + std::to_string(q) +
                                  " != 0");
    }
  }
}

std::size_t GradedComplex::homology(int q) const {
  return homology_rank(differential(q + 1), differential(q), field_);
}

std::map<int, std::size_t> GradedComplex::homology_all() const {
  check_d_squared();
  // rank of d_q for q in [min, max + 1]
  std::size_t count = static_cast<std::size_t>(std::max(0, max_ - min_ + 2));
  std::vector<std::size_t> ranks(count);
  parallel_for(count, [&](std::size_t i) {
    int q = min_ + static_cast<int>(i);
    ranks[i] = rank(differential(q), field_);
  });
  std::map<int, std::size_t> out;
  for (int q = min_; q <= max_; ++q) {
    std::size_t i = static_cast<std::size_t>(q - min_);
    out[q] = dim(q) - ranks[i] - ranks[i + 1];
  }
  return out;
}

long long GradedComplex::euler_characteristic() const {
  long long chi = 0;
  for (int q = min_; q <= max_; ++q) {
    chi += (q % 2 == 0 ? 1 : -1) * static_cast<long long>(dim(q));
  }
  return chi;
}

}  // namespace braidhom
