#include "braidhom/qsa.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "braidhom/error.hpp"
#include "braidhom/linalg.hpp"
#include "braidhom/parallel.hpp"
#include "braidhom/shuffle.hpp"

namespace braidhom {

std::vector<OrderedPartition> colex_partitions(std::size_t n, std::size_t k) {
  auto parts = ordered_partitions(n, k);
  std::sort(parts.begin(), parts.end(), [](const OrderedPartition& a, const OrderedPartition& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return parts;
}

BarComplex bar_complex(const BraidedVectorSpace& V0, std::size_t n, const Field& F) {
  if (n == 0) throw InvalidInput("bar complex needs n >= 1");
  BraidedVectorSpace V = V0.over(F);
  std::size_t r = V.rank();
  Word D = checked_power(r, n);
  BarComplex B;
  B.n = n;
  B.parts.resize(n + 1);
  B.complex = GradedComplex(1, static_cast<int>(n), F);
  std::vector<std::map<OrderedPartition, std::size_t>> index(n + 1);
  for (std::size_t p = 1; p <= n; ++p) {
    B.parts[p] = colex_partitions(n, p);
    for (std::size_t i = 0; i < B.parts[p].size(); ++i) index[p][B.parts[p][i]] = i;
    B.complex.set_dim(static_cast<int>(p), B.parts[p].size() * D);
  }

  // products[(a, b)][u] = (u_1 ⋆ u_2) for u = u_1 u_2 with |u_1| = a, |u_2| = b
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Tensor>> products;
  auto product_table = [&](std::size_t a, std::size_t b) -> const std::vector<Tensor>& {
    auto key = std::make_pair(a, b);
    auto it = products.find(key);
    if (it != products.end()) return it->second;
    Word rb = checked_power(r, b);
    Word count = checked_power(r, a + b);
    std::vector<Tensor> table(count);
    for (Word u = 0; u < count; ++u) {
      table[u] = shuffle_product(V, {{u / rb, F.from_int(1)}}, a, {{u % rb, F.from_int(1)}}, b);
    }
    return products.emplace(key, std::move(table)).first->second;
  };

  for (std::size_t p = 2; p <= n; ++p) {
    SparseMatrix d(B.parts[p - 1].size() * D, B.parts[p].size() * D, F);
    for (std::size_t pi = 0; pi < B.parts[p].size(); ++pi) {
      const auto& lam = B.parts[p][pi];
      struct Merge {
        std::size_t target;
        const std::vector<Tensor>* table;
        Word low, block;
        bool negative;
      };
      std::vector<Merge> merges;
      std::size_t offset = 0;
      for (std::size_t i = 0; i + 1 < p; ++i) {
        OrderedPartition merged = lam;
        merged[i] += merged[i + 1];
        merged.erase(merged.begin() + static_cast<long>(i) + 1);
        std::size_t len = lam[i] + lam[i + 1];
        merges.push_back({index[p - 1].at(merged), &product_table(lam[i], lam[i + 1]),
                          checked_power(r, n - offset - len), checked_power(r, len), i % 2 == 1});
        offset += lam[i];
      }
      for (Word w = 0; w < D; ++w) {
        SparseMatrix::Column col;
        for (const auto& m : merges) {
          Word suffix = w % m.low;
          Word u = (w / m.low) % m.block;
          Word prefix = w / (m.low * m.block);
          for (const auto& [u2, c] : (*m.table)[u]) {
            Word w2 = (prefix * m.block + u2) * m.low + suffix;
            col.push_back({static_cast<std::uint32_t>(m.target * D + w2),
                           m.negative ? F.neg(c) : c});
          }
        }
        d.set_column(pi * D + w, std::move(col));
      }
    }
    B.complex.set_differential(static_cast<int>(p), std::move(d));
  }
  return B;
}

RankTable ext_table(const BraidedVectorSpace& V, std::size_t nmax, const Field& F) {
  RankTable table({"s", "n"});
  table.set({0, 0}, 1);
  std::vector<std::map<int, std::size_t>> results(nmax + 1);
  parallel_for(nmax, [&](std::size_t i) {
    std::size_t n = i + 1;
    results[n] = bar_complex(V, n, F).complex.homology_all();
  });
  for (std::size_t n = 1; n <= nmax; ++n) {
    for (const auto& [s, rk] : results[n]) table.set({s, static_cast<int>(n)}, rk);
  }
  return table;
}

std::size_t default_ext_nmax(std::size_t rank) {
  if (rank <= 1) return 8;
  if (rank <= 3) return 6;
  if (rank <= 6) return 5;
  return 4;
}

std::optional<std::pair<std::size_t, Scalar>> ComponentsRing::class_of(std::size_t n,
                                                                       Word w) const {
  if (!monomial_) throw InvalidInput("orbit basis needs a monomial braiding");
  std::size_t idx = orbit_.at(n).at(w);
  if (idx == static_cast<std::size_t>(-1)) return std::nullopt;
  return std::make_pair(idx, coeff_[n][w]);
}

std::optional<std::pair<std::size_t, Scalar>> ComponentsRing::multiply(std::size_t m,
                                                                       std::size_t i,
                                                                       std::size_t n,
                                                                       std::size_t j) const {
  if (m + n > nmax()) throw InvalidInput("product exceeds the computed degree range");
  Word w = concat_words(representative(m, i), representative(n, j), r_, n);
  return class_of(m + n, w);
}

namespace {

bool is_monomial(const BraidedVectorSpace& V) {
  for (std::size_t j = 0; j < V.sigma().cols(); ++j) {
    if (V.sigma().column(j).size() != 1) return false;
  }
  return true;
}

}  // namespace

ComponentsRing components_ring(const BraidedVectorSpace& V0, std::size_t nmax, const Field& F) {
  BraidedVectorSpace V = V0.over(F);
  ComponentsRing R;
  R.field_ = F;
  R.r_ = V.rank();
  R.monomial_ = is_monomial(V);
  R.dims_.assign(nmax + 1, 0);
  R.reps_.resize(nmax + 1);
  R.orbit_.resize(nmax + 1);
  R.coeff_.resize(nmax + 1);
  const std::size_t npos = static_cast<std::size_t>(-1);
  for (std::size_t n = 0; n <= nmax; ++n) {
    Word D = checked_power(R.r_, n);
    if (!R.monomial_) {
      if (n <= 1) {
        R.dims_[n] = D;
        continue;
      }
      SparseMatrix stacked(D, 0, F);
      for (int i = 1; i < static_cast<int>(n); ++i) {
        stacked = stacked.hconcat(SparseMatrix::identity(D, F) - braid_word_action(V, n, {i}));
      }
      R.dims_[n] = D - rank(stacked, F);
      continue;
    }
    auto& orbit = R.orbit_[n];
    auto& coeff = R.coeff_[n];
    orbit.assign(D, npos);
    coeff.assign(D, F.from_int(0));
    std::vector<char> seen(D, 0);
    for (Word start = 0; start < D; ++start) {
      if (seen[start]) continue;
      // In the coinvariants [w] = [sigma_i w] = c [w'], so [w'] = c^-1 [w].
      std::vector<Word> members{start};
      std::vector<Scalar> value(1, F.from_int(1));
      std::map<Word, std::size_t> pos{{start, 0}};
      seen[start] = 1;
      bool dead = false;
      for (std::size_t k = 0; k < members.size(); ++k) {
        for (int i = 1; i < static_cast<int>(n); ++i) {
          Tensor t = apply_generator(V, n, i, {{members[k], F.from_int(1)}});
          auto [w2, c] = t.front();
          Scalar v2 = F.mul(F.inv(c), value[k]);
          auto it = pos.find(w2);
          if (it == pos.end()) {
            pos[w2] = members.size();
            members.push_back(w2);
            value.push_back(v2);
            seen[w2] = 1;
          } else if (value[it->second] != v2) {
            dead = true;
          }
        }
      }
      if (dead) continue;
      std::size_t idx = R.reps_[n].size();
      R.reps_[n].push_back(start);
      for (std::size_t k = 0; k < members.size(); ++k) {
        orbit[members[k]] = idx;
        coeff[members[k]] = value[k];
      }
    }
    R.dims_[n] = R.reps_[n].size();
  }
  return R;
}

std::size_t top_bar_kernel_rank(const BraidedVectorSpace& V, std::size_t n, const Field& F) {
  if (n == 0) return 1;
  BarComplex B = bar_complex(V.epsilon_twisted(), n, F);
  return B.complex.dim(static_cast<int>(n)) -
         rank(B.complex.differential(static_cast<int>(n)), F);
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << "]";
  return out.str();
}

}  // namespace

MainCorReport verify_main_cor(const BraidedVectorSpace& V0, std::size_t n, const Field& F) {
  if (n == 0) throw InvalidInput("verify_main_cor needs n >= 1");
  BraidedVectorSpace V = V0.over(F);
  MainCorReport rep;
  GradedComplex C = fnf_complex(V, n, F);
  BarComplex B = bar_complex(V.epsilon_twisted(), n, F);

  auto hc = C.homology_all();
  auto hb = B.complex.homology_all();
  rep.braid.assign(n + 1, 0);
  rep.ext.assign(n + 1, 0);
  for (std::size_t j = 0; j < n; ++j) {
    rep.braid[j] = hc.at(static_cast<int>(2 * n - j));
    rep.ext[j] = hb.at(static_cast<int>(n - j));
  }
  rep.ok = rep.braid == rep.ext;

  // fnf degree n+k <-> bar degree k; the word factor is shared.
  std::size_t D = checked_power(V.rank(), n);
  std::vector<std::vector<std::uint32_t>> to_bar(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    auto lex = ordered_partitions(n, k);
    std::map<OrderedPartition, std::size_t> colex_index;
    for (std::size_t i = 0; i < B.parts[k].size(); ++i) colex_index[B.parts[k][i]] = i;
    to_bar[k].resize(lex.size() * D);
    for (std::size_t i = 0; i < lex.size(); ++i) {
      std::size_t t = colex_index.at(lex[i]);
      for (std::size_t w = 0; w < D; ++w) {
        to_bar[k][i * D + w] = static_cast<std::uint32_t>(t * D + w);
      }
    }
  }
  for (std::size_t k = 2; k <= n; ++k) {
    SparseMatrix moved = C.differential(static_cast<int>(n + k)).permuted(to_bar[k - 1], to_bar[k]);
    if (moved != B.complex.differential(static_cast<int>(k))) {
      rep.matrices_match = false;
      rep.ok = false;
      rep.message += "differential mismatch at bar degree " + std::to_string(k) + "; ";
    }
  }
  rep.message += "H_j = " + join(rep.braid) + ", Ext^{n-j,n} = " + join(rep.ext);
  return rep;
}

}  // namespace braidhom
