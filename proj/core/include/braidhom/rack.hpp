#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "braidhom/field.hpp"
#include "braidhom/perm_group.hpp"

namespace braidhom {

// Finite rack on labels 0..r-1 with act(a, b) = a^b.
class Rack {
 public:
  Rack(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> action);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t act(std::size_t a, std::size_t b) const { return action_[a][b]; }
  // The unique x with x^b = a.
  std::size_t act_inv(std::size_t a, std::size_t b) const { return inverse_[a][b]; }
  bool is_quandle() const { return quandle_; }

  // Set when the rack came from conjugation in a group.
  const ConjClassSet* class_set() const { return classes_.get(); }
  std::shared_ptr<const ConjClassSet> class_set_ptr() const { return classes_; }
  // Group element of label a (requires class_set()).
  PermGroup::Id degree_of(std::size_t a) const { return degrees_.at(a); }
  std::optional<std::size_t> label_of(PermGroup::Id g) const;

  // First failure of the rack axioms (empty if none).
  std::string check_axioms() const;

 private:
  friend Rack conjugation_rack(std::shared_ptr<const ConjClassSet>);

  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> action_;
  std::vector<std::vector<std::size_t>> inverse_;
  bool quandle_ = true;
  std::shared_ptr<const ConjClassSet> classes_;
  std::vector<PermGroup::Id> degrees_;
};

// Rack on the elements of c (in element-id order) with a^b = b^-1 a b.
Rack conjugation_rack(std::shared_ptr<const ConjClassSet> c);
// The one-element rack.
Rack trivial_rack(std::size_t size = 1);

// Scalar table x(a, b). Stored over Q; reduced into a field on use.
class Cocycle {
 public:
  Cocycle() = default;
  Cocycle(std::size_t r, std::vector<std::vector<Scalar>> table);
  static Cocycle constant(std::size_t r, const Scalar& value);

  std::size_t size() const { return table_.size(); }
  const Scalar& operator()(std::size_t a, std::size_t b) const { return table_[a][b]; }
  // Constant value when all entries agree.
  std::optional<Scalar> constant_value() const;

  // x_ab x_{a^b c} = x_ac x_{a^c b^c} over F; empty string if it holds.
  std::string check(const Rack& R, const Field& F) const;

 private:
  std::vector<std::vector<Scalar>> table_;
};

}  // namespace braidhom
