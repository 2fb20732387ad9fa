#include "braidhom/braided_space.hpp"

#include <algorithm>

#include "braidhom/error.hpp"
#include "braidhom/linalg.hpp"

namespace braidhom {

void normalize_tensor(Tensor& t, const Field& F) {
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < t.size();) {
    Word w = t[i].first;
    Scalar acc = std::move(t[i].second);
    std::size_t k = i + 1;
    for (; k < t.size() && t[k].first == w; ++k) acc = F.add(acc, t[k].second);
    if (!Field::is_zero(acc)) t[out++] = {w, std::move(acc)};
    i = k;
  }
  t.resize(out);
}

Word checked_power(std::size_t r, std::size_t n) {
  Word p = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (r != 0 && p > (Word(1) << 62) / r) {
      throw CapExceeded("tensor power " + std::to_string(r) + "^" + std::to_string(n) +
                        " is too large to index");
    }
    p *= r;
  }
  return p;
}

WordCodec::WordCodec(std::size_t r, std::size_t n) : r_(r), n_(n) {
  checked_power(r, n);
  pow_.resize(n + 1);
  pow_[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) pow_[k] = pow_[k - 1] * r;
}

std::vector<std::size_t> WordCodec::letters(Word w) const {
  std::vector<std::size_t> out(n_);
  for (std::size_t k = n_; k-- > 0;) {
    out[k] = w % r_;
    w /= r_;
  }
  return out;
}

Word WordCodec::encode(const std::vector<std::size_t>& letters) const {
  Word w = 0;
  for (auto l : letters) w = w * r_ + l;
  return w;
}

Word concat_words(Word u, Word v, std::size_t r, std::size_t n) {
  return u * checked_power(r, n) + v;
}

BraidedVectorSpace BraidedVectorSpace::from_matrix(std::vector<std::string> labels,
                                                   SparseMatrix sigma) {
  std::size_t r = labels.size();
  if (sigma.rows() != r * r || sigma.cols() != r * r) {
    throw InvalidInput("braiding must be a " + std::to_string(r * r) + "x" +
                       std::to_string(r * r) + " matrix");
  }
  BraidedVectorSpace V;
  V.labels_ = std::move(labels);
  V.sigma_ = std::move(sigma);
  try {
    V.sigma_inv_ = inverse(V.sigma_, V.sigma_.field());
  } catch (const Error&) {
    V.invertible_ = false;
    V.sigma_inv_ = SparseMatrix(r * r, r * r, V.sigma_.field());
  }
  return V;
}

BraidedVectorSpace braided_space(const Rack& R, const Cocycle& x, bool epsilon, const Field& F) {
  std::string err = x.check(R, F);
  if (!err.empty()) throw InvalidInput(err);
  std::size_t r = R.size();
  SparseMatrix sigma(r * r, r * r, F);
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      Scalar v = F.from_rational(x(a, b));
      if (epsilon) v = F.neg(v);
      sigma.set_column(a * r + b, {{static_cast<std::uint32_t>(b * r + R.act(a, b)), v}});
    }
  }
  BraidedVectorSpace V = BraidedVectorSpace::from_matrix(R.labels(), std::move(sigma));
  V.rack_ = std::make_shared<const Rack>(R);
  V.cocycle_ = x;
  V.epsilon_ = epsilon;
  return V;
}

BraidedVectorSpace rank_one_space(const Scalar& q, const Field& F) {
  return braided_space(trivial_rack(1), Cocycle::constant(1, q), false, F);
}

BraidedVectorSpace BraidedVectorSpace::epsilon_twisted() const {
  BraidedVectorSpace V = *this;
  V.sigma_ = sigma_.scaled(field().from_int(-1));
  V.sigma_inv_ = sigma_inv_.scaled(field().from_int(-1));
  V.epsilon_ = !epsilon_;
  return V;
}

BraidedVectorSpace BraidedVectorSpace::dual() const {
  BraidedVectorSpace V = from_matrix(labels_, sigma_.transpose());
  for (auto& l : V.labels_) l += "*";
  return V;
}

BraidedVectorSpace BraidedVectorSpace::over(const Field& F) const {
  if (F == field()) return *this;
  if (rack_ && cocycle_) return braided_space(*rack_, *cocycle_, epsilon_, F);
  return from_matrix(labels_, sigma_.reduced(F));
}

Tensor apply_generator(const BraidedVectorSpace& V, std::size_t n, int gen, const Tensor& t) {
  std::size_t i = static_cast<std::size_t>(gen > 0 ? gen : -gen);
  if (gen == 0 || i >= n) {
    throw InvalidInput("braid generator " + std::to_string(gen) + " out of range for n = " +
                       std::to_string(n));
  }
  const SparseMatrix& M = gen > 0 ? V.sigma() : V.sigma_inv();
  const Field& F = V.field();
  std::size_t r = V.rank();
  WordCodec codec(r, n);
  Word wa = codec.weight(i - 1), wb = codec.weight(i);
  Tensor out;
  out.reserve(t.size());
  for (const auto& [w, c] : t) {
    std::size_t a = codec.letter(w, i - 1), b = codec.letter(w, i);
    Word base = w - a * wa - b * wb;
    for (const auto& [p, v] : M.column(a * r + b)) {
      out.push_back({base + (p / r) * wa + (p % r) * wb, F.mul(c, v)});
    }
  }
  normalize_tensor(out, F);
  return out;
}

Tensor apply_braid_word(const BraidedVectorSpace& V, std::size_t n, const std::vector<int>& word,
                        Tensor t) {
  for (int g : word) t = apply_generator(V, n, g, t);
  return t;
}

SparseMatrix braid_word_action(const BraidedVectorSpace& V, std::size_t n,
                               const std::vector<int>& word) {
  for (int g : word) {
    if (g == 0 || static_cast<std::size_t>(g > 0 ? g : -g) >= n) {
      throw InvalidInput("braid generator " + std::to_string(g) + " out of range for n = " +
                         std::to_string(n));
    }
  }
  const Field& F = V.field();
  Word count = checked_power(V.rank(), n);
  SparseMatrix M(count, count, F);
  for (Word w = 0; w < count; ++w) {
    Tensor t = apply_braid_word(V, n, word, {{w, F.from_int(1)}});
    SparseMatrix::Column col;
    col.reserve(t.size());
    for (auto& [u, c] : t) col.push_back({static_cast<std::uint32_t>(u), std::move(c)});
    M.set_column(w, std::move(col));
  }
  return M;
}

BraidCheckReport check_braided(const BraidedVectorSpace& V) {
  BraidCheckReport rep;
  const Field& F = V.field();
  std::size_t r = V.rank();
  if (!V.invertible() ||
      !(V.sigma() * V.sigma_inv() == SparseMatrix::identity(r * r, F))) {
    rep.ok = false;
    rep.message = "braiding is not invertible";
    return rep;
  }
  WordCodec codec(r, 3);
  for (Word w = 0; w < codec.count(); ++w) {
    Tensor e{{w, F.from_int(1)}};
    if (apply_braid_word(V, 3, {1, 2, 1}, e) != apply_braid_word(V, 3, {2, 1, 2}, e)) {
      auto l = codec.letters(w);
      rep.ok = false;
      rep.witness = std::array<std::size_t, 3>{l[0], l[1], l[2]};
      rep.message = "braid equation fails on " + V.labels()[l[0]] + "⊗" + V.labels()[l[1]] + "⊗" +
                    V.labels()[l[2]];
      return rep;
    }
  }
  if (V.graded()) {
    const Rack& R = *V.rack();
    const PermGroup& G = R.class_set()->group();
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t b = 0; b < r; ++b) {
        auto target = R.label_of(G.conj(R.degree_of(a), R.degree_of(b)));
        for (const auto& [p, v] : V.sigma().column(a * r + b)) {
          if (!target || p != b * r + *target) {
            rep.ok = false;
            rep.message = "grading incompatible at " + V.labels()[a] + "⊗" + V.labels()[b];
            return rep;
          }
        }
      }
    }
  }
  rep.message = "ok";
  return rep;
}

}  // namespace braidhom
