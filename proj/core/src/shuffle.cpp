#include "braidhom/shuffle.hpp"

#include <algorithm>
#include <numeric>

#include "braidhom/error.hpp"

namespace braidhom {

std::vector<ShuffleRecord> shuffles(std::size_t m, std::size_t n) {
  std::vector<ShuffleRecord> out;
  std::vector<std::uint8_t> bits(m + n, 0);
  std::fill(bits.begin() + static_cast<long>(m), bits.end(), 1);
  do {
    ShuffleRecord s;
    s.m = m;
    s.n = n;
    s.interleaving = bits;
    std::size_t ones = 0;
    for (auto b : bits) {
      if (b) {
        ++ones;
      } else {
        s.crossings += ones;
      }
    }
    s.sign = (s.crossings % 2) ? -1 : 1;
    out.push_back(std::move(s));
  } while (std::next_permutation(bits.begin(), bits.end()));
  return out;
}

std::vector<mpz_class> crossing_distribution(std::size_t m, std::size_t n) {
  // dist[i][j] = polynomial for i zeros and j ones; appending a 0 after j
  // ones adds j crossings.
  std::vector<std::vector<std::vector<mpz_class>>> dist(
      m + 1, std::vector<std::vector<mpz_class>>(n + 1));
  dist[0][0] = {1};
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      if (i == 0 && j == 0) continue;
      std::vector<mpz_class> poly(i * j + 1, 0);
      if (j > 0) {
        const auto& p = dist[i][j - 1];
        for (std::size_t k = 0; k < p.size(); ++k) poly[k] += p[k];
      }
      if (i > 0) {
        const auto& p = dist[i - 1][j];
        for (std::size_t k = 0; k < p.size(); ++k) poly[k + j] += p[k];
      }
      dist[i][j] = std::move(poly);
    }
  }
  return dist[m][n];
}

mpz_class signed_shuffle_count(std::size_t m, std::size_t n) {
  mpz_class total = 0;
  auto d = crossing_distribution(m, n);
  for (std::size_t k = 0; k < d.size(); ++k) total += (k % 2) ? -d[k] : d[k];
  return total;
}

Scalar quantum_binomial(std::size_t a, std::size_t b, const Scalar& q, const Field& F) {
  if (b > a) throw InvalidInput("quantum binomial requires b <= a");
  auto d = crossing_distribution(b, a - b);
  Scalar qf = F.from_rational(q);
  Scalar sum = F.from_int(0);
  Scalar power = F.from_int(1);
  for (const auto& c : d) {
    sum = F.add(sum, F.mul(F.from_rational(mpq_class(c)), power));
    power = F.mul(power, qf);
  }
  return sum;
}

std::vector<int> matsumoto_lift(const Permutation& perm) {
  std::vector<char> seen(perm.size(), 0);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) throw InvalidInput("not a permutation");
    seen[p] = 1;
  }
  Permutation a = perm;
  std::vector<int> word;
  for (std::size_t i = 1; i < a.size(); ++i) {
    for (std::size_t j = i; j > 0 && a[j - 1] > a[j]; --j) {
      std::swap(a[j - 1], a[j]);
      word.push_back(static_cast<int>(j));
    }
  }
  return word;
}

std::size_t inversion_count(const Permutation& perm) {
  std::size_t inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) inv += perm[i] > perm[j];
  }
  return inv;
}

Permutation shuffle_permutation(const ShuffleRecord& s) {
  Permutation perm(s.m + s.n);
  std::size_t left = 0, right = s.m;
  for (std::size_t pos = 0; pos < s.interleaving.size(); ++pos) {
    perm[s.interleaving[pos] ? right++ : left++] = pos;
  }
  return perm;
}

std::vector<std::vector<int>> shuffle_lifts(std::size_t m, std::size_t n) {
  std::vector<std::vector<int>> out;
  for (const auto& s : shuffles(m, n)) out.push_back(matsumoto_lift(shuffle_permutation(s)));
  return out;
}

Tensor shuffle_product(const BraidedVectorSpace& V, const Tensor& u, std::size_t m,
                       const Tensor& v, std::size_t n) {
  const Field& F = V.field();
  std::size_t r = V.rank();
  Tensor concat;
  for (const auto& [a, ca] : u) {
    for (const auto& [b, cb] : v) concat.push_back({concat_words(a, b, r, n), F.mul(ca, cb)});
  }
  normalize_tensor(concat, F);
  if (m == 0 || n == 0) return concat;
  Tensor out;
  for (const auto& word : shuffle_lifts(m, n)) {
    Tensor t = apply_braid_word(V, m + n, word, concat);
    out.insert(out.end(), t.begin(), t.end());
  }
  normalize_tensor(out, F);
  return out;
}

// Uses S_k = C_k ∘ (S_{k-1} ⊗ id) with C_k = sum over j of the chain
// sigma_{k-1} sigma_{k-2} ... sigma_{k-j} (applied in that order), the
// coset decomposition of S_k over S_{k-1}.
Tensor apply_symmetrizer(const BraidedVectorSpace& V, std::size_t n, const Tensor& t) {
  const Field& F = V.field();
  Tensor acc = t;
  for (std::size_t k = 2; k <= n && !acc.empty(); ++k) {
    Tensor chained = acc;
    Tensor cur = acc;
    for (std::size_t j = 1; j < k; ++j) {
      cur = apply_generator(V, n, static_cast<int>(k - j), cur);
      chained.insert(chained.end(), cur.begin(), cur.end());
    }
    normalize_tensor(chained, F);
    acc = std::move(chained);
  }
  return acc;
}

SparseMatrix quantum_symmetrizer(const BraidedVectorSpace& V, std::size_t n) {
  const Field& F = V.field();
  Word count = checked_power(V.rank(), n);
  SparseMatrix S(count, count, F);
  for (Word w = 0; w < count; ++w) {
    Tensor t = apply_symmetrizer(V, n, {{w, F.from_int(1)}});
    SparseMatrix::Column col;
    col.reserve(t.size());
    for (auto& [u, c] : t) col.push_back({static_cast<std::uint32_t>(u), std::move(c)});
    S.set_column(w, std::move(col));
  }
  return S;
}

}  // namespace braidhom
