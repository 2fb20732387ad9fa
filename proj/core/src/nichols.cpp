#include "braidhom/nichols.hpp"

#include <mutex>

#include "braidhom/error.hpp"
#include "braidhom/linalg.hpp"
#include "braidhom/shuffle.hpp"

namespace braidhom {

namespace {

std::mutex cache_mutex;

}  // namespace

NicholsDims nichols_dims(const BraidedVectorSpace& V0, std::size_t nmax, const Field& F) {
  BraidedVectorSpace V = V0.over(F);
  NicholsDims out;
  for (std::size_t n = 0; n <= nmax; ++n) {
    out.dims.push_back(rank(quantum_symmetrizer(V, n), F));
    if (n >= 1 && out.dims[n] == 0 && out.dims[n - 1] == 0) out.stably_zero = true;
  }
  return out;
}

Scalar hopf_pairing(const BraidedVectorSpace& V0, const Tensor& u, std::size_t n_u,
                    const Tensor& phi, std::size_t n_phi) {
  const Field& F = V0.field();
  if (n_u != n_phi) return F.from_int(0);
  Tensor su = apply_symmetrizer(V0, n_u, u);
  Scalar total = F.from_int(0);
  std::size_t i = 0, j = 0;
  while (i < su.size() && j < phi.size()) {
    if (su[i].first < phi[j].first) {
      ++i;
    } else if (phi[j].first < su[i].first) {
      ++j;
    } else {
      total = F.add(total, F.mul(su[i].second, phi[j].second));
      ++i;
      ++j;
    }
  }
  return total;
}

NicholsData::NicholsData(BraidedVectorSpace V, std::size_t pmax, const Field& F)
    : V_(V.over(F)), field_(F) {
  for (std::size_t p = 0; p <= pmax; ++p) {
    NicholsDegree d;
    d.p = p;
    d.symmetrizer = quantum_symmetrizer(V_, p);
    const SparseMatrix& S = d.symmetrizer;
    SpanBasis cols(S.rows(), F);
    for (std::size_t j = 0; j < S.cols(); ++j) {
      if (cols.insert(S.column(j))) d.primal.push_back(j);
    }
    std::vector<std::uint32_t> J(d.primal.begin(), d.primal.end());
    SparseMatrix SJ = S.select_columns(J);
    SparseMatrix SJt = SJ.transpose();
    SpanBasis rows(SJt.rows(), F);
    for (std::size_t i = 0; i < SJt.cols(); ++i) {
      if (rows.insert(SJt.column(i))) d.dual.push_back(i);
    }
    if (d.dual.size() != d.primal.size()) throw Error("symmetrizer row and column ranks differ");
    std::vector<std::uint32_t> I(d.dual.begin(), d.dual.end());
    d.gram = SJ.select_rows(I);
    SparseMatrix ginv;
    try {
      ginv = inverse(d.gram, F);
    } catch (const Error&) {
      throw Error("Gram matrix singular in degree " + std::to_string(p));
    }
    d.dual_reduction = (SJ * ginv).transpose();
    degrees_.push_back(std::move(d));
  }
}

std::size_t NicholsData::top_degree() const {
  std::size_t top = 0;
  for (std::size_t p = 0; p < degrees_.size(); ++p) {
    if (degrees_[p].dim() > 0) top = p;
  }
  return top;
}

SparseMatrix::Column NicholsData::reduce_dual(std::size_t p, const Tensor& phi) const {
  SparseMatrix::Column col;
  col.reserve(phi.size());
  for (const auto& [w, c] : phi) col.push_back({static_cast<std::uint32_t>(w), c});
  return degree(p).dual_reduction.apply(col);
}

SparseMatrix NicholsData::derivation(const std::vector<std::size_t>& word, std::size_t p) const {
  std::size_t k = word.size();
  std::size_t r = V_.rank();
  if (k > p) throw InvalidInput("derivation word longer than the degree");
  const NicholsDegree& hi = degree(p);
  const NicholsDegree& lo = degree(p - k);
  WordCodec codec(r, k);
  Word prefix = codec.encode(word);
  // T[j', i] = <phi_i, w x_{j'}> = S_p[i, w x_{j'}]
  SparseMatrix T(lo.primal.size(), hi.dual.size(), field_);
  std::vector<std::uint32_t> dual_pos(hi.symmetrizer.rows(), UINT32_MAX);
  for (std::size_t i = 0; i < hi.dual.size(); ++i) dual_pos[hi.dual[i]] = static_cast<std::uint32_t>(i);
  std::vector<SparseMatrix::Column> cols(hi.dual.size());
  for (std::size_t jj = 0; jj < lo.primal.size(); ++jj) {
    Word w = concat_words(prefix, lo.primal[jj], r, p - k);
    for (const auto& [row, c] : hi.symmetrizer.column(w)) {
      if (dual_pos[row] != UINT32_MAX) cols[dual_pos[row]].push_back({static_cast<std::uint32_t>(jj), c});
    }
  }
  for (std::size_t i = 0; i < cols.size(); ++i) T.set_column(i, std::move(cols[i]));
  SparseMatrix ginv = inverse(lo.gram, field_);
  return ginv.transpose() * T;
}

const SparseMatrix& NicholsData::skew_derivation(std::size_t v, std::size_t p) const {
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto key = std::make_pair(v, p);
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, derivation({v}, p)).first;
  return it->second;
}

SparseMatrix NicholsData::dual_product(std::size_t a, std::size_t b) const {
  const NicholsDegree& A = degree(a);
  const NicholsDegree& B = degree(b);
  std::size_t r = V_.rank();
  SparseMatrix M(dim(a + b), A.dual.size() * B.dual.size(), field_);
  for (std::size_t i = 0; i < A.dual.size(); ++i) {
    for (std::size_t j = 0; j < B.dual.size(); ++j) {
      Word w = concat_words(A.dual[i], B.dual[j], r, b);
      M.set_column(i * B.dual.size() + j, degree(a + b).dual_reduction.column(w));
    }
  }
  return M;
}

SparseMatrix NicholsData::right_multiplication(std::size_t g, std::size_t p) const {
  const NicholsDegree& A = degree(p);
  std::size_t r = V_.rank();
  SparseMatrix M(dim(p + 1), A.dual.size(), field_);
  for (std::size_t i = 0; i < A.dual.size(); ++i) {
    M.set_column(i, degree(p + 1).dual_reduction.column(concat_words(A.dual[i], g, r, 1)));
  }
  return M;
}

std::pair<std::size_t, Scalar> NicholsData::carry(std::size_t v, std::size_t p,
                                                  std::size_t i) const {
  std::size_t r = V_.rank();
  WordCodec codec(r, p);
  Scalar c = field_.from_int(1);
  for (auto a : codec.letters(degree(p).dual.at(i))) {
    const auto& col = V_.sigma().column(v * r + a);
    if (col.size() != 1 || col[0].first / r != a) {
      throw InvalidInput("carry needs a rack-type braiding");
    }
    c = field_.mul(c, col[0].second);
    v = col[0].first % r;
  }
  return {v, c};
}

SparseMatrix NicholsData::twist(std::size_t g, std::size_t p) const {
  std::size_t r = V_.rank();
  // sigma(a ⊗ g) = x' (g ⊗ a^g) read off the braiding.
  std::vector<std::size_t> image(r);
  std::vector<Scalar> scale(r);
  for (std::size_t a = 0; a < r; ++a) {
    const auto& col = V_.sigma().column(a * r + g);
    if (col.size() != 1 || col[0].first / r != g) {
      throw InvalidInput("twist needs a rack-type braiding");
    }
    image[a] = col[0].first % r;
    scale[a] = col[0].second;
  }
  const NicholsDegree& A = degree(p);
  WordCodec codec(r, p);
  SparseMatrix M(dim(p), A.dual.size(), field_);
  for (std::size_t i = 0; i < A.dual.size(); ++i) {
    auto letters = codec.letters(A.dual[i]);
    Scalar c = field_.from_int(1);
    for (auto& a : letters) {
      c = field_.mul(c, scale[a]);
      a = image[a];
    }
    Tensor t{{codec.encode(letters), c}};
    M.set_column(i, reduce_dual(p, t));
  }
  return M;
}

}  // namespace braidhom
