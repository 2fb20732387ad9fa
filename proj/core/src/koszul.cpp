#include "braidhom/koszul.hpp"

#include <algorithm>
#include <map>

#include "braidhom/error.hpp"
#include "braidhom/linalg.hpp"
#include "braidhom/parallel.hpp"

namespace braidhom {

namespace {

SparseMatrix kron(const SparseMatrix& A, const SparseMatrix& B) {
  const Field& F = A.field();
  SparseMatrix K(A.rows() * B.rows(), A.cols() * B.cols(), F);
  for (std::size_t i = 0; i < A.cols(); ++i) {
    for (std::size_t m = 0; m < B.cols(); ++m) {
      SparseMatrix::Column col;
      for (const auto& [a, x] : A.column(i)) {
        for (const auto& [b, y] : B.column(m)) {
          col.push_back({static_cast<std::uint32_t>(a * B.rows() + b), F.mul(x, y)});
        }
      }
      K.set_column(i * B.cols() + m, std::move(col));
    }
  }
  return K;
}

}  // namespace

KoszulComplex::KoszulComplex(std::shared_ptr<const NicholsData> nichols, GradedOrbitModule module,
                             std::size_t pmax, std::size_t qmax)
    : nichols_(std::move(nichols)), module_(std::move(module)), pmax_(pmax), qmax_(qmax) {
  if (module_.qmax < qmax + 1) throw InvalidInput("module data must reach degree qmax + 1");
  const ConjClassSet& c = *module_.c;
  std::size_t r = c.size();
  if (nichols_->space().rank() != r) throw InvalidInput("Nichols data and module disagree on c");
  classes_.assign(c.classes().size(), {});
  for (std::size_t v = 0; v < r; ++v) classes_[c.class_of(c.elements()[v])].push_back(v);
  derivations_.assign(r, {});
  std::size_t top = nichols_->pmax();
  for (std::size_t v = 0; v < r; ++v) {
    derivations_[v].resize(top + 1);
    for (std::size_t p = 1; p <= top; ++p) derivations_[v][p] = nichols_->derivation({v}, p);
  }
}

std::size_t KoszulComplex::nichols_dim(std::size_t p) const {
  return p <= nichols_->pmax() ? nichols_->dim(p) : 0;
}

std::size_t KoszulComplex::dim(std::size_t p, std::size_t q) const {
  if (q > module_.qmax) return 0;
  return nichols_dim(p) * module_.dim(q);
}

void KoszulComplex::set_derivation(std::size_t v, std::size_t p, SparseMatrix D) {
  if (D.rows() != nichols_dim(p - 1) || D.cols() != nichols_dim(p)) {
    throw InvalidInput("derivation has the wrong shape");
  }
  derivations_.at(v).at(p) = std::move(D);
}

SparseMatrix KoszulComplex::letter_differential(std::size_t v, std::size_t p, std::size_t q) const {
  const Field& F = field();
  std::size_t rows = p >= 1 ? dim(p - 1, q + 1) : 0;
  if (p == 0 || p > nichols_->pmax() || q + 1 > module_.qmax) {
    return SparseMatrix(rows, dim(p, q), F);
  }
  return kron(derivations_[v][p], module_.right[v][q]);
}

SparseMatrix KoszulComplex::class_differential(std::size_t i, std::size_t p, std::size_t q) const {
  std::size_t rows = p >= 1 ? dim(p - 1, q + 1) : 0;
  SparseMatrix d(rows, dim(p, q), field());
  for (auto v : classes_.at(i)) d = d + letter_differential(v, p, q);
  return d;
}

SparseMatrix KoszulComplex::differential(std::size_t p, std::size_t q) const {
  std::size_t rows = p >= 1 ? dim(p - 1, q + 1) : 0;
  SparseMatrix d(rows, dim(p, q), field());
  for (std::size_t i = 0; i < classes_.size(); ++i) d = d + class_differential(i, p, q);
  return d;
}

SparseMatrix KoszulComplex::left_action(std::size_t v, std::size_t p, std::size_t q) const {
  const Field& F = field();
  if (q + 1 > module_.qmax) return SparseMatrix(0, dim(p, q), F);
  return kron(SparseMatrix::identity(nichols_dim(p), F), module_.left[v][q]);
}

SparseMatrix KoszulComplex::append_dual(std::size_t g, std::size_t p, std::size_t q) const {
  const Field& F = field();
  if (p + 1 > nichols_->pmax() || q > module_.qmax) {
    return SparseMatrix(dim(p + 1, q), dim(p, q), F);
  }
  return kron(nichols_->right_multiplication(g, p), SparseMatrix::identity(module_.dim(q), F));
}

SparseMatrix KoszulComplex::conjugated_multiplication(std::size_t g, std::size_t p,
                                                      std::size_t q) const {
  const Field& F = field();
  SparseMatrix T(dim(p, q + 1), dim(p, q), F);
  if (q + 1 > module_.qmax) return T;
  std::size_t dq = module_.dim(q), dq1 = module_.dim(q + 1);
  std::size_t r = module_.c->size();
  for (std::size_t i = 0; i < nichols_dim(p); ++i) {
    std::vector<std::pair<std::size_t, Scalar>> hits;
    for (std::size_t v = 0; v < r; ++v) {
      auto [carried, s] = nichols_->carry(v, p, i);
      if (carried == g) hits.push_back({v, s});
    }
    for (std::size_t m = 0; m < dq; ++m) {
      SparseMatrix::Column col;
      for (const auto& [v, s] : hits) {
        for (const auto& [m2, x] : module_.right[v][q].column(m)) {
          col.push_back({static_cast<std::uint32_t>(i * dq1 + m2), F.mul(s, x)});
        }
      }
      T.set_column(i * dq + m, std::move(col));
    }
  }
  return T;
}

KoszulComplex koszul_complex(std::shared_ptr<const ConjClassSet> c, const GradedOrbitModule& M,
                             std::size_t pmax, std::size_t qmax, const Field& F) {
  Rack R = conjugation_rack(c);
  BraidedVectorSpace V = braided_space(R, Cocycle::constant(R.size(), 1), true, F);
  // One degree past pmax so that H^{pmax,q} is exact.
  auto B = std::make_shared<const NicholsData>(V, pmax + 1, F);
  return KoszulComplex(B, M, pmax, qmax);
}

KoszulComplex koszul_complex_ring(std::shared_ptr<const ConjClassSet> c, std::size_t pmax,
                                  std::size_t qmax, const Field& F) {
  return koszul_complex(c, ring_module(c, qmax + 1, F), pmax, qmax, F);
}

RankTable koszul_homology(const KoszulComplex& K) {
  RankTable H({"p", "q"});
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t p = 0; p <= K.pmax(); ++p) {
    for (std::size_t q = 0; q <= K.qmax(); ++q) cells.push_back({p, q});
  }
  std::vector<std::size_t> ranks(cells.size());
  parallel_for(cells.size(), [&](std::size_t k) {
    auto [p, q] = cells[k];
    SparseMatrix d_out = K.differential(p, q);
    SparseMatrix d_in = q >= 1 ? K.differential(p + 1, q - 1)
                               : SparseMatrix(K.dim(p, q), 0, K.field());
    ranks[k] = homology_rank(d_in, d_out, K.field());
  });
  for (std::size_t k = 0; k < cells.size(); ++k) {
    H.set({static_cast<int>(cells[k].first), static_cast<int>(cells[k].second)}, ranks[k]);
  }
  return H;
}

namespace {

// Multigrade of each basis vector of (p, q).
std::vector<std::vector<int>> term_grades(const KoszulComplex& K, std::size_t p, std::size_t q) {
  const auto& M = K.module();
  const ConjClassSet& c = *M.c;
  std::size_t r = c.size();
  std::vector<std::vector<int>> out;
  if (K.dim(p, q) == 0) return out;
  WordCodec codec(r, p);
  for (std::size_t i = 0; i < K.nichols_dim(p); ++i) {
    std::vector<int> psi(c.classes().size(), 0);
    for (auto a : codec.letters(K.nichols().degree(p).dual[i])) ++psi[c.class_of(c.elements()[a])];
    for (std::size_t m = 0; m < M.dim(q); ++m) {
      std::vector<int> t = psi;
      for (std::size_t k = 0; k < t.size(); ++k) t[k] += M.multigrade[q][m][k];
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<std::uint32_t> positions(const std::vector<std::vector<int>>& grades,
                                     const std::vector<int>& t) {
  std::vector<std::uint32_t> out;
  for (std::size_t k = 0; k < grades.size(); ++k) {
    if (grades[k] == t) out.push_back(static_cast<std::uint32_t>(k));
  }
  return out;
}

}  // namespace

RankTable koszul_homology_multigraded(const KoszulComplex& K) {
  std::vector<std::string> axes{"p", "q"};
  for (std::size_t i = 0; i < K.class_count(); ++i) axes.push_back("t" + std::to_string(i + 1));
  RankTable H(axes);
  for (std::size_t p = 0; p <= K.pmax(); ++p) {
    for (std::size_t q = 0; q <= K.qmax(); ++q) {
      auto mid = term_grades(K, p, q);
      auto out = p >= 1 ? term_grades(K, p - 1, q + 1) : std::vector<std::vector<int>>{};
      auto in = q >= 1 ? term_grades(K, p + 1, q - 1) : std::vector<std::vector<int>>{};
      SparseMatrix d_out = K.differential(p, q);
      SparseMatrix d_in = q >= 1 ? K.differential(p + 1, q - 1)
                                 : SparseMatrix(K.dim(p, q), 0, K.field());
      std::map<std::vector<int>, int> seen;
      for (const auto& t : mid) seen[t] = 1;
      for (const auto& [t, unused] : seen) {
        (void)unused;
        auto m = positions(mid, t);
        auto o = positions(out, t);
        auto n = positions(in, t);
        SparseMatrix a = d_in.select_columns(n).select_rows(m);
        SparseMatrix b = d_out.select_columns(m).select_rows(o);
        std::size_t rk = homology_rank(a, b, K.field());
        RankTable::Grade g{static_cast<int>(p), static_cast<int>(q)};
        g.insert(g.end(), t.begin(), t.end());
        H.set(g, rk);
      }
    }
  }
  return H;
}

KoszulReport verify_koszul_identities(const KoszulComplex& K) {
  KoszulReport rep;
  const Field& F = K.field();
  std::size_t r = K.module().c->size();
  auto at = [](const char* what, std::size_t p, std::size_t q) {
    return std::string(what) + " at (p,q) = (" + std::to_string(p) + "," + std::to_string(q) + ")";
  };
  auto note = [&](bool& flag, const std::string& w) {
    if (flag && rep.witness.empty()) rep.witness = w;
    flag = false;
  };
  // (a) on every (p, q) whose image stays inside the assembled module range
  for (std::size_t p = 2; p <= K.pmax(); ++p) {
    for (std::size_t q = 0; q + 2 <= K.qmax() + 1; ++q) {
      if (!(K.differential(p - 1, q + 1) * K.differential(p, q)).is_zero()) {
        note(rep.d_squared, at("d^2 != 0", p, q));
      }
      for (std::size_t i = 0; i < K.class_count(); ++i) {
        for (std::size_t j = i; j < K.class_count(); ++j) {
          SparseMatrix s = K.class_differential(i, p - 1, q + 1) * K.class_differential(j, p, q);
          if (i != j) s = s + K.class_differential(j, p - 1, q + 1) * K.class_differential(i, p, q);
          if (!s.is_zero()) {
            note(rep.anticommute, at(("d_" + std::to_string(i + 1) + " d_" + std::to_string(j + 1) +
                                      " + d_" + std::to_string(j + 1) + " d_" +
                                      std::to_string(i + 1) + " != 0").c_str(),
                                     p, q));
          }
        }
      }
    }
  }
  // (b) prepending v maps cycles at (p, q) to boundaries at (p, q+1)
  for (std::size_t p = 0; p <= K.pmax(); ++p) {
    for (std::size_t q = 0; q + 1 <= K.qmax(); ++q) {
      SparseMatrix d_out = K.differential(p, q);
      SparseMatrix Z = kernel_basis(d_out, F);
      SparseMatrix B = K.differential(p + 1, q);
      for (std::size_t v = 0; v < r; ++v) {
        SparseMatrix rho = K.left_action(v, p, q);
        if (p >= 1 && q + 2 <= K.module().qmax &&
            K.differential(p, q + 1) * rho != K.left_action(v, p - 1, q + 1) * d_out) {
          note(rep.trivial_action, at("prepending does not commute with d", p, q));
        }
        SpanBasis span(B.rows(), F);
        for (std::size_t k = 0; k < B.cols(); ++k) span.insert(B.column(k));
        for (std::size_t k = 0; k < Z.cols(); ++k) {
          if (!span.contains(rho.apply(Z.column(k)))) {
            note(rep.trivial_action, at("prepending acts nontrivially on homology", p, q));
            break;
          }
        }
      }
    }
  }
  // (c) d P_g - P_g d = T_g
  for (std::size_t p = 0; p < K.pmax(); ++p) {
    for (std::size_t q = 0; q + 1 <= K.qmax(); ++q) {
      for (std::size_t g = 0; g < r; ++g) {
        SparseMatrix lhs = K.differential(p + 1, q) * K.append_dual(g, p, q);
        if (p >= 1) lhs = lhs - K.append_dual(g, p - 1, q + 1) * K.differential(p, q);
        if (lhs != K.conjugated_multiplication(g, p, q)) {
          note(rep.homotopy, at("d P_g - P_g d != T_g", p, q));
        }
      }
    }
  }
  return rep;
}

VanishingInfo vanishing(const RankTable& H, std::size_t p, std::size_t qmax) {
  VanishingInfo info;
  for (std::size_t q = 0; q <= qmax; ++q) {
    if (H.get({static_cast<int>(p), static_cast<int>(q)}) != 0) info.last_nonzero = static_cast<int>(q);
  }
  int start = info.last_nonzero ? *info.last_nonzero + 1 : 0;
  info.zeros_after = static_cast<std::size_t>(static_cast<int>(qmax) + 1 - start);
  return info;
}

std::vector<std::size_t> generator_counts(const KoszulComplex& K, std::size_t jmax) {
  if (jmax + 1 > K.pmax()) throw InvalidInput("generator counts need pmax >= jmax + 1");
  RankTable H = koszul_homology(K);
  std::vector<std::size_t> counts;
  for (std::size_t j = 0; j <= jmax; ++j) {
    VanishingInfo v = vanishing(H, j + 1, K.qmax());
    if (v.zeros_after < 3) {
      throw Error("Koszul homology in row p = " + std::to_string(j + 1) +
                  " has not vanished within qmax = " + std::to_string(K.qmax()) +
                  "; increase qmax");
    }
    std::size_t total = 0;
    for (std::size_t q = 0; q <= K.qmax(); ++q) total += H.get({static_cast<int>(j + 1), static_cast<int>(q)});
    counts.push_back(total);
  }
  return counts;
}

}  // namespace braidhom
