#include <doctest.h>

#include <memory>

#include "braidhom/linalg.hpp"
#include "braidhom/nichols.hpp"
#include "braidhom/perm_group.hpp"
#include "braidhom/shuffle.hpp"
#include "oracles.hpp"

using namespace braidhom;

namespace {

BraidedVectorSpace rack_space(const char* group, const char* sel, bool eps, const Field& F,
                              long x = 1) {
  auto c = std::make_shared<const ConjClassSet>(select_classes(builtin_group(group), sel));
  Rack R = conjugation_rack(c);
  return braided_space(R, Cocycle::constant(R.size(), Scalar(x)), eps, F);
}

SparseMatrix::Column kron(const SparseMatrix::Column& x, const SparseMatrix::Column& y,
                          std::size_t dy, const Field& F) {
  SparseMatrix::Column out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) out.push_back({static_cast<std::uint32_t>(i * dy + j), F.mul(a, b)});
  normalize_column(out, F);
  return out;
}

// d_v(phi psi) = d_v(phi) psi + x' phi d_{v'}(psi), v' = v carried across phi.
bool skew_leibniz_holds(const NicholsData& N, std::size_t pmax) {
  const Field& F = N.field();
  std::size_t r = N.space().rank();
  for (std::size_t a = 1; a < pmax; ++a)
    for (std::size_t b = 1; a + b <= pmax; ++b) {
      if (N.dim(a) == 0 || N.dim(b) == 0) continue;
      SparseMatrix Pab = N.dual_product(a, b), P1 = N.dual_product(a - 1, b),
                   P2 = N.dual_product(a, b - 1);
      for (std::size_t v = 0; v < r; ++v) {
        const SparseMatrix& Dab = N.skew_derivation(v, a + b);
        const SparseMatrix& Da = N.skew_derivation(v, a);
        for (std::size_t i = 0; i < N.dim(a); ++i) {
          auto [w, s] = N.carry(v, a, i);
          const SparseMatrix& Db = N.skew_derivation(w, b);
          for (std::size_t j = 0; j < N.dim(b); ++j) {
            SparseMatrix::Column ei{{static_cast<std::uint32_t>(i), s}};
            SparseMatrix::Column ej{{static_cast<std::uint32_t>(j), F.from_int(1)}};
            auto lhs = Dab.apply(Pab.column(i * N.dim(b) + j));
            auto rhs = P1.apply(kron(Da.column(i), ej, N.dim(b), F));
            auto t2 = P2.apply(kron(ei, Db.column(j), N.dim(b - 1), F));
            rhs.insert(rhs.end(), t2.begin(), t2.end());
            normalize_column(rhs, F);
            normalize_column(lhs, F);
            if (lhs != rhs) return false;
          }
        }
      }
    }
  return true;
}

}  // namespace

TEST_SUITE("nichols") {

TEST_CASE("Hilbert series examples") {
  Field Q;
  NicholsDims e = nichols_dims(rank_one_space(Scalar(-1), Q), 5, Q);
  CHECK(e.dims == std::vector<std::size_t>{1, 1, 0, 0, 0, 0});
  CHECK(e.stably_zero);
  NicholsDims s3 = nichols_dims(rack_space("S3", "transpositions", true, Q), 6, Q);
  CHECK(s3.dims == std::vector<std::size_t>{1, 3, 4, 3, 1, 0, 0});
  NicholsDims k = nichols_dims(rank_one_space(Scalar(1), Q), 6, Q);
  CHECK(k.dims == std::vector<std::size_t>(7, 1));
  CHECK_FALSE(k.stably_zero);
}

TEST_CASE("quantum lines at roots of unity follow quantum integer residues") {
  for (long long p : {5, 7, 11}) {
    Field F = Field::prime(p);
    for (long long q = 2; q < p; ++q) {
      NicholsDims nd = nichols_dims(rank_one_space(F.from_int(q), F), 8, F);
      // x^n survives iff [1]_q [2]_q ... [n]_q != 0
      bool alive = true;
      for (long long n = 1; n <= 8; ++n) {
        alive = alive && oracle::quantum_integer_mod(n, q, p) != 0;
        CHECK(nd.dims[n] == (alive ? 1u : 0u));
      }
    }
  }
}

TEST_CASE("rank-nullity in degree two") {
  Field Q;
  for (bool eps : {false, true}) {
    auto V = rack_space("S3", "all", eps, Q);
    SparseMatrix S2 = quantum_symmetrizer(V, 2);
    CHECK(nichols_dims(V, 2, Q).dims[2] + kernel_basis(S2, Q).cols() == V.rank() * V.rank());
  }
}

TEST_CASE("Hopf pairing") {
  Field Q;
  auto V = rack_space("S3", "transpositions", true, Q);
  CHECK(hopf_pairing(V, {{0, Scalar(1)}}, 0, {{0, Scalar(1)}}, 0) == 1);
  for (Word i = 0; i < 3; ++i)
    for (Word j = 0; j < 3; ++j)
      CHECK(hopf_pairing(V, {{i, Scalar(1)}}, 1, {{j, Scalar(1)}}, 1) == (i == j ? 1 : 0));
  auto eps = rank_one_space(Scalar(-1), Q);
  CHECK(hopf_pairing(eps, {{0, Scalar(1)}}, 2, {{0, Scalar(1)}}, 2) == 0);
  CHECK(hopf_pairing(V, {{0, Scalar(1)}}, 1, {{0, Scalar(1)}}, 2) == 0);
  // entries of S_n in dual bases
  SparseMatrix S3 = quantum_symmetrizer(V, 3);
  for (Word u : {0u, 5u, 13u})
    for (Word phi : {0u, 7u, 21u}) CHECK(hopf_pairing(V, {{u, Scalar(1)}}, 3, {{phi, Scalar(1)}}, 3) == S3.at(phi, u));
}

TEST_CASE("Gram matrices are invertible on the chosen bases") {
  Field Q;
  NicholsData N(rack_space("S3", "transpositions", true, Q), 5, Q);
  CHECK(N.top_degree() == 4);
  for (std::size_t p = 0; p <= 5; ++p) {
    const NicholsDegree& D = N.degree(p);
    CHECK(D.dual.size() == D.primal.size());
    CHECK(rank(D.gram, Q) == D.dim());
  }
}

TEST_CASE("skew derivations") {
  Field Q;
  NicholsData N(rack_space("S3", "transpositions", true, Q), 4, Q);
  for (std::size_t v = 0; v < 3; ++v) {
    const SparseMatrix& D1 = N.skew_derivation(v, 1);
    for (std::size_t j = 0; j < 3; ++j) CHECK(D1.at(0, j) == (v == N.degree(1).dual[j] ? 1 : 0));
    CHECK_THROWS(N.skew_derivation(v, 0));
  }
  // d_{vw} = d_w d_v
  for (std::size_t p = 2; p <= 4; ++p)
    for (std::size_t v = 0; v < 3; ++v)
      for (std::size_t w = 0; w < 3; ++w)
        CHECK(N.derivation({w}, p - 1) * N.derivation({v}, p) == N.derivation({v, w}, p));
}

TEST_CASE("skew-Leibniz rule") {
  Field Q;
  for (bool eps : {false, true}) {
    CHECK(skew_leibniz_holds(NicholsData(rack_space("S3", "transpositions", eps, Q), 4, Q), 4));
    CHECK(skew_leibniz_holds(NicholsData(rack_space("A4", "3-cycles", eps, Q), 3, Q), 3));
  }
  CHECK(skew_leibniz_holds(NicholsData(rack_space("S3", "transpositions", true, Q, -1), 4, Q), 4));
}

TEST_CASE("dual product is associative") {
  Field Q;
  NicholsData N(rack_space("S3", "transpositions", true, Q), 4, Q);
  SparseMatrix P11 = N.dual_product(1, 1), P21 = N.dual_product(2, 1), P12 = N.dual_product(1, 2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        SparseMatrix::Column ek{{static_cast<std::uint32_t>(k), Scalar(1)}};
        SparseMatrix::Column ei{{static_cast<std::uint32_t>(i), Scalar(1)}};
        auto left = P21.apply(kron(P11.column(i * 3 + j), ek, 3, Q));
        auto right = P12.apply(kron(ei, P11.column(j * 3 + k), N.dim(2), Q));
        CHECK(left == right);
      }
}

}
