#include "braidhom/fnf.hpp"

#include <map>

#include "braidhom/error.hpp"
#include "braidhom/shuffle.hpp"

namespace braidhom {

std::vector<OrderedPartition> ordered_partitions(std::size_t n, std::size_t k) {
  std::vector<OrderedPartition> out;
  if (k == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  if (n < k) return out;
  OrderedPartition cur;
  auto rec = [&](auto&& self, std::size_t remaining, std::size_t parts) -> void {
    if (parts == 1) {
      cur.push_back(remaining);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (std::size_t first = 1; first + (parts - 1) <= remaining; ++first) {
      cur.push_back(first);
      self(self, remaining - first, parts - 1);
      cur.pop_back();
    }
  };
  rec(rec, n, k);
  return out;
}

TensorPowerModule::TensorPowerModule(BraidedVectorSpace V, std::size_t n)
    : V_(std::move(V)), n_(n), dim_(checked_power(V_.rank(), n)) {
  if (dim_ > (std::size_t(1) << 31)) throw CapExceeded("tensor power too large");
}

SparseMatrix::Column TensorPowerModule::apply(int gen, const SparseMatrix::Column& x) const {
  Tensor t;
  t.reserve(x.size());
  for (const auto& [r, v] : x) t.push_back({r, v});
  t = apply_generator(V_, n_, gen, t);
  SparseMatrix::Column out;
  out.reserve(t.size());
  for (auto& [w, v] : t) out.push_back({static_cast<std::uint32_t>(w), std::move(v)});
  return out;
}

PermutationModule::PermutationModule(std::size_t n, std::size_t dim,
                                     std::vector<std::vector<std::size_t>> images, Field F)
    : n_(n), dim_(dim), fwd_(std::move(images)), F_(F) {
  if (fwd_.size() + 1 != n && !(n <= 1 && fwd_.empty())) {
    throw InvalidInput("permutation module needs one table per generator");
  }
  back_.assign(fwd_.size(), std::vector<std::size_t>(dim_, dim_));
  for (std::size_t g = 0; g < fwd_.size(); ++g) {
    if (fwd_[g].size() != dim_) throw InvalidInput("permutation tables differ in size");
    for (std::size_t x = 0; x < dim_; ++x) {
      std::size_t y = fwd_[g][x];
      if (y >= dim_ || back_[g][y] != dim_) throw InvalidInput("generator table is not a bijection");
      back_[g][y] = x;
    }
  }
}

SparseMatrix::Column PermutationModule::apply(int gen, const SparseMatrix::Column& x) const {
  std::size_t g = static_cast<std::size_t>(gen > 0 ? gen : -gen);
  if (gen == 0 || g >= n_) throw InvalidInput("generator out of range");
  const auto& table = gen > 0 ? fwd_[g - 1] : back_[g - 1];
  SparseMatrix::Column out;
  out.reserve(x.size());
  for (const auto& [r, v] : x) out.push_back({static_cast<std::uint32_t>(table[r]), v});
  normalize_column(out, F_);
  return out;
}

namespace {

// Signed shuffle sum on strands offset+1..offset+a+b, as a matrix on L.
SparseMatrix block_operator(const BraidModule& L, std::size_t offset, std::size_t a, std::size_t b) {
  const Field& F = L.field();
  auto records = shuffles(a, b);
  auto lifts = shuffle_lifts(a, b);
  SparseMatrix M(L.dim(), L.dim(), F);

  if (const auto* T = dynamic_cast<const TensorPowerModule*>(&L)) {
    // Act on the (a+b)-letter block only, then splice it back into each word.
    const BraidedVectorSpace& V = T->space();
    std::size_t r = V.rank(), len = a + b, n = L.strands();
    Word block_count = checked_power(r, len);
    std::vector<Tensor> local(block_count);
    for (Word u = 0; u < block_count; ++u) {
      Tensor acc;
      for (std::size_t s = 0; s < lifts.size(); ++s) {
        Tensor t = apply_braid_word(V, len, lifts[s], {{u, F.from_int(1)}});
        for (auto& [w, c] : t) acc.push_back({w, records[s].sign < 0 ? F.neg(c) : c});
      }
      normalize_tensor(acc, F);
      local[u] = std::move(acc);
    }
    Word low = checked_power(r, n - offset - len);
    for (Word w = 0; w < L.dim(); ++w) {
      Word suffix = w % low;
      Word u = (w / low) % block_count;
      Word prefix = w / (low * block_count);
      SparseMatrix::Column col;
      col.reserve(local[u].size());
      for (const auto& [u2, c] : local[u]) {
        col.push_back({static_cast<std::uint32_t>((prefix * block_count + u2) * low + suffix), c});
      }
      M.set_column(w, std::move(col));
    }
    return M;
  }

  for (std::size_t x = 0; x < L.dim(); ++x) {
    SparseMatrix::Column acc;
    for (std::size_t s = 0; s < lifts.size(); ++s) {
      SparseMatrix::Column v{{static_cast<std::uint32_t>(x), F.from_int(records[s].sign)}};
      for (int g : lifts[s]) v = L.apply(g + static_cast<int>(offset), v);
      acc.insert(acc.end(), v.begin(), v.end());
    }
    M.set_column(x, std::move(acc));
  }
  return M;
}

}  // namespace

GradedComplex fnf_complex(const BraidModule& L) {
  std::size_t n = L.strands();
  if (n == 0) throw InvalidInput("fnf complex needs n >= 1");
  const Field& F = L.field();
  std::size_t D = L.dim();
  GradedComplex C(static_cast<int>(n + 1), static_cast<int>(2 * n), F);
  std::vector<std::vector<OrderedPartition>> parts(n + 1);
  std::vector<std::map<OrderedPartition, std::size_t>> index(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    parts[k] = ordered_partitions(n, k);
    for (std::size_t i = 0; i < parts[k].size(); ++i) index[k][parts[k][i]] = i;
    C.set_dim(static_cast<int>(n + k), parts[k].size() * D);
  }
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, SparseMatrix> blocks;
  auto block = [&](std::size_t o, std::size_t a, std::size_t b) -> const SparseMatrix& {
    auto key = std::make_tuple(o, a, b);
    auto it = blocks.find(key);
    if (it == blocks.end()) it = blocks.emplace(key, block_operator(L, o, a, b)).first;
    return it->second;
  };
  for (std::size_t k = 2; k <= n; ++k) {
    SparseMatrix d(parts[k - 1].size() * D, parts[k].size() * D, F);
    for (std::size_t pi = 0; pi < parts[k].size(); ++pi) {
      const auto& lam = parts[k][pi];
      std::vector<std::pair<std::size_t, const SparseMatrix*>> merges;
      std::vector<bool> negative;
      std::size_t offset = 0;
      for (std::size_t i = 0; i + 1 < k; ++i) {
        OrderedPartition merged = lam;
        merged[i] += merged[i + 1];
        merged.erase(merged.begin() + static_cast<long>(i) + 1);
        merges.push_back({index[k - 1].at(merged), &block(offset, lam[i], lam[i + 1])});
        negative.push_back(i % 2 == 1);
        offset += lam[i];
      }
      for (std::size_t x = 0; x < D; ++x) {
        SparseMatrix::Column col;
        for (std::size_t m = 0; m < merges.size(); ++m) {
          for (const auto& [y, c] : merges[m].second->column(x)) {
            col.push_back({static_cast<std::uint32_t>(merges[m].first * D + y),
                           negative[m] ? F.neg(c) : c});
          }
        }
        d.set_column(pi * D + x, std::move(col));
      }
    }
    C.set_differential(static_cast<int>(n + k), std::move(d));
  }
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::string> labels;
    if (parts[k].size() * D <= 4096) {
      for (const auto& lam : parts[k]) {
        std::string s = "(";
        for (std::size_t i = 0; i < lam.size(); ++i) s += (i ? "," : "") + std::to_string(lam[i]);
        s += ")";
        for (std::size_t x = 0; x < D; ++x) labels.push_back(s + "#" + std::to_string(x));
      }
      C.set_labels(static_cast<int>(n + k), std::move(labels));
    }
  }
  return C;
}

GradedComplex fnf_complex(const BraidedVectorSpace& V, std::size_t n, const Field& F) {
  return fnf_complex(TensorPowerModule(V.over(F), n));
}

std::vector<std::size_t> braid_homology(const BraidModule& L) {
  std::size_t n = L.strands();
  GradedComplex C = fnf_complex(L);
  auto h = C.homology_all();
  std::vector<std::size_t> out(n + 1, 0);
  for (std::size_t j = 0; j + 1 <= n; ++j) out[j] = h.at(static_cast<int>(2 * n - j));
  return out;
}

std::vector<std::size_t> braid_homology(const BraidedVectorSpace& V, std::size_t n,
                                        const Field& F) {
  return braid_homology(TensorPowerModule(V.over(F), n));
}

}  // namespace braidhom
