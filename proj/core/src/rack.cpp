#include "braidhom/rack.hpp"

#include <algorithm>

#include "braidhom/error.hpp"

namespace braidhom {

Rack::Rack(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> action)
    : labels_(std::move(labels)), action_(std::move(action)) {
  std::size_t r = labels_.size();
  if (r == 0) throw InvalidInput("rack must be nonempty");
  if (action_.size() != r) throw InvalidInput("rack action table has wrong size");
  inverse_.assign(r, std::vector<std::size_t>(r, r));
  for (std::size_t a = 0; a < r; ++a) {
    if (action_[a].size() != r) throw InvalidInput("rack action table has wrong size");
    for (std::size_t b = 0; b < r; ++b) {
      if (action_[a][b] >= r) throw InvalidInput("rack action value out of range");
    }
  }
  for (std::size_t b = 0; b < r; ++b) {
    for (std::size_t a = 0; a < r; ++a) {
      std::size_t img = action_[a][b];
      if (inverse_[img][b] != r) {
        throw InvalidInput("rack action x -> x^" + labels_[b] + " is not a bijection");
      }
      inverse_[img][b] = a;
    }
    if (action_[b][b] != b) quandle_ = false;
  }
  std::string err = check_axioms();
  if (!err.empty()) throw InvalidInput(err);
}

std::string Rack::check_axioms() const {
  std::size_t r = size();
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      for (std::size_t c = 0; c < r; ++c) {
        if (act(act(a, b), c) != act(act(a, c), act(b, c))) {
          return "self-distributivity fails at (" + labels_[a] + ", " + labels_[b] + ", " +
                 labels_[c] + ")";
        }
      }
    }
  }
  return {};
}

std::optional<std::size_t> Rack::label_of(PermGroup::Id g) const {
  for (std::size_t a = 0; a < degrees_.size(); ++a) {
    if (degrees_[a] == g) return a;
  }
  return std::nullopt;
}

Rack conjugation_rack(std::shared_ptr<const ConjClassSet> c) {
  const PermGroup& G = c->group();
  const auto& elems = c->elements();
  std::vector<std::string> labels;
  for (auto e : elems) labels.push_back(cycle_string(G.element(e)));
  std::vector<std::vector<std::size_t>> action(elems.size(), std::vector<std::size_t>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = 0; b < elems.size(); ++b) {
      auto img = G.conj(elems[a], elems[b]);
      auto it = std::lower_bound(elems.begin(), elems.end(), img);
      if (it == elems.end() || *it != img) throw InvalidInput("class set not conjugation closed");
      action[a][b] = static_cast<std::size_t>(it - elems.begin());
    }
  }
  Rack R(std::move(labels), std::move(action));
  R.classes_ = std::move(c);
  R.degrees_ = elems;
  return R;
}

Rack trivial_rack(std::size_t size) {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> action(size, std::vector<std::size_t>(size));
  for (std::size_t a = 0; a < size; ++a) {
    labels.push_back(size == 1 ? "x" : "x" + std::to_string(a + 1));
    for (std::size_t b = 0; b < size; ++b) action[a][b] = a;
  }
  return Rack(std::move(labels), std::move(action));
}

Cocycle::Cocycle(std::size_t r, std::vector<std::vector<Scalar>> table) : table_(std::move(table)) {
  if (table_.size() != r) throw InvalidInput("cocycle table has wrong size");
  for (const auto& row : table_) {
    if (row.size() != r) throw InvalidInput("cocycle table has wrong size");
    for (const auto& v : row) {
      if (sgn(v) == 0) throw InvalidInput("cocycle entries must be nonzero");
    }
  }
}

Cocycle Cocycle::constant(std::size_t r, const Scalar& value) {
  return Cocycle(r, std::vector<std::vector<Scalar>>(r, std::vector<Scalar>(r, value)));
}

std::optional<Scalar> Cocycle::constant_value() const {
  if (table_.empty()) return std::nullopt;
  const Scalar& v = table_[0][0];
  for (const auto& row : table_) {
    for (const auto& x : row) {
      if (x != v) return std::nullopt;
    }
  }
  return v;
}

std::string Cocycle::check(const Rack& R, const Field& F) const {
  std::size_t r = R.size();
  if (size() != r) return "cocycle size does not match rack";
  std::vector<std::vector<Scalar>> x(r, std::vector<Scalar>(r));
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      x[a][b] = F.from_rational(table_[a][b]);
      if (Field::is_zero(x[a][b])) return "cocycle entry vanishes in " + F.name();
    }
  }
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      for (std::size_t c = 0; c < r; ++c) {
        Scalar lhs = F.mul(x[a][b], x[R.act(a, b)][c]);
        Scalar rhs = F.mul(x[a][c], x[R.act(a, c)][R.act(b, c)]);
        if (lhs != rhs) {
          return "cocycle condition fails at (" + R.labels()[a] + ", " + R.labels()[b] + ", " +
                 R.labels()[c] + ")";
        }
      }
    }
  }
  return {};
}

}  // namespace braidhom
