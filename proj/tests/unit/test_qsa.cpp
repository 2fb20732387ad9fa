#include <doctest.h>

#include <memory>

#include "braidhom/fnf.hpp"
#include "braidhom/hurwitz.hpp"
#include "braidhom/perm_group.hpp"
#include "braidhom/qsa.hpp"
#include "oracles.hpp"

using namespace braidhom;

namespace {

std::shared_ptr<const ConjClassSet> classes(const char* group, const char* sel) {
  return std::make_shared<const ConjClassSet>(select_classes(builtin_group(group), sel));
}

BraidedVectorSpace rack_space(std::shared_ptr<const ConjClassSet> c, bool eps, const Field& F,
                              long x = 1) {
  Rack R = conjugation_rack(c);
  return braided_space(R, Cocycle::constant(R.size(), Scalar(x)), eps, F);
}

// Standard two-dimensional Hecke-type braiding at parameter q.
BraidedVectorSpace hecke_space(const Scalar& q, const Field& F) {
  SparseMatrix s(4, 4, F);
  s.add_entry(0, 0, q);                       // x0 x0 -> q x0 x0
  s.add_entry(3, 3, q);                       // x1 x1 -> q x1 x1
  s.add_entry(2, 1, F.from_int(1));           // x0 x1 -> x1 x0
  s.add_entry(1, 2, F.from_int(1));           // x1 x0 -> x0 x1 + (q - 1/q) x1 x0
  s.add_entry(2, 2, F.sub(q, F.inv(q)));
  return BraidedVectorSpace::from_matrix({"x0", "x1"}, s);
}

}  // namespace

TEST_SUITE("qsa") {

TEST_CASE("colex compositions") {
  CHECK(colex_partitions(3, 2) == std::vector<OrderedPartition>{{2, 1}, {1, 2}});
  CHECK(colex_partitions(4, 3).size() == 3);
  CHECK(colex_partitions(4, 3).front() == OrderedPartition{2, 1, 1});
}

TEST_CASE("bar complex examples") {
  Field Q;
  auto k = rank_one_space(Scalar(1), Q), eps = rank_one_space(Scalar(-1), Q);
  BarComplex B1 = bar_complex(k, 1, Q);
  CHECK(B1.complex.dim(1) == 1);
  CHECK(B1.complex.differential(1).is_zero());
  CHECK(bar_complex(eps, 2, Q).complex.differential(2).is_zero());
  CHECK(bar_complex(k, 2, Q).complex.differential(2).at(0, 0) == 2);
  auto V = rack_space(classes("S3", "transpositions"), true, Q);
  for (std::size_t n = 1; n <= 4; ++n) CHECK_NOTHROW(bar_complex(V, n, Q).complex.check_d_squared());
}

TEST_CASE("Ext of the divided power examples") {
  Field Q, F2 = Field::prime(2);
  auto eps = rank_one_space(Scalar(-1), Q);
  RankTable T = ext_table(eps, 8, Q);
  for (int n = 0; n <= 8; ++n)
    for (int s = 0; s <= n; ++s) CHECK(T.get({s, n}) == ((n == s || (n - s == 1 && n >= 2)) ? 1u : 0u));
  RankTable T2 = ext_table(rank_one_space(Scalar(-1), F2), 8, F2);
  for (int n = 0; n <= 8; ++n)
    for (int s = 0; s <= n; ++s) CHECK(T2.get({s, n}) == oracle::divided_power_monomials(s, n));
}

TEST_CASE("quantum line away from roots of unity") {
  Field Q;
  for (long sigma : {2L, -2L}) {
    RankTable T = ext_table(rank_one_space(Scalar(sigma), Q), 6, Q);
    CHECK(T.total() == 2);
    CHECK(T.get({0, 0}) == 1);
    CHECK(T.get({1, 1}) == 1);
  }
}

TEST_CASE("Ext vanishes outside 0 <= s <= n and satisfies Euler bookkeeping") {
  Field F = Field::prime(5);
  auto V = rack_space(classes("S3", "transpositions"), true, F);
  RankTable T = ext_table(V, 4, F);
  for (const auto& [g, r] : T.entries()) {
    CHECK(g[0] >= 0);
    CHECK(g[0] <= g[1]);
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    BarComplex B = bar_complex(V, n, F);
    long long ext = 0, cells = 0;
    for (int s = 1; s <= static_cast<int>(n); ++s) {
      long long sign = s % 2 ? -1 : 1;
      ext += sign * static_cast<long long>(T.get({s, static_cast<int>(n)}));
      cells += sign * static_cast<long long>(B.complex.dim(s));
    }
    CHECK(ext == cells);
  }
}

TEST_CASE("diagonal Ext counts Hurwitz orbits") {
  Field Q;
  auto c = classes("S3", "transpositions");
  auto V = rack_space(c, false, Q);
  RankTable T = ext_table(V.epsilon_twisted(), 4, Q);
  for (int n = 0; n <= 4; ++n) CHECK(T.get({n, n}) == hurwitz_orbits(c, n).size());
}

TEST_CASE("ring of components") {
  Field Q;
  auto c = classes("S3", "transpositions");
  auto V = rack_space(c, false, Q);
  ComponentsRing R = components_ring(V, 5, Q);
  CHECK(R.monomial());
  CHECK(R.dim(0) == 1);
  CHECK(R.dim(1) == 3);
  CHECK(R.dim(2) == 5);
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(R.dim(n) == hurwitz_orbits(c, n).size());
    CHECK(R.dim(n) == top_bar_kernel_rank(V, n, Q));
  }
  // associativity on degree-one generators
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t d = 0; d < 3; ++d) {
        auto ab = R.multiply(1, a, 1, b);
        auto bd = R.multiply(1, b, 1, d);
        REQUIRE(ab);
        REQUIRE(bd);
        auto left = R.multiply(2, ab->first, 1, d);
        auto right = R.multiply(1, a, 2, bd->first);
        REQUIRE(left);
        REQUIRE(right);
        CHECK(left->first == right->first);
        CHECK(left->second * ab->second == right->second * bd->second);
      }
  // representatives classify to themselves
  for (std::size_t i = 0; i < R.dim(3); ++i) {
    auto cls = R.class_of(3, R.representative(3, i));
    REQUIRE(cls);
    CHECK(cls->first == i);
  }
  // with signs, some orbits die
  ComponentsRing Re = components_ring(V.epsilon_twisted(), 3, Q);
  CHECK(Re.dim(1) == 3);
  for (std::size_t n = 1; n <= 3; ++n) CHECK(Re.dim(n) == top_bar_kernel_rank(V.epsilon_twisted(), n, Q));
}

TEST_CASE("ring of components for a non-monomial braiding") {
  Field Q;
  auto H = hecke_space(Scalar(2), Q);
  REQUIRE(check_braided(H).ok);
  ComponentsRing R = components_ring(H, 4, Q);
  CHECK_FALSE(R.monomial());
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(R.dim(n) == braid_homology(H, n, Q)[0]);
    CHECK(R.dim(n) == top_bar_kernel_rank(H, n, Q));
  }
}

TEST_CASE("braid homology matches Ext of the twisted space") {
  Field Q, F2 = Field::prime(2);
  auto k = rank_one_space(Scalar(1), Q);
  for (std::size_t n = 1; n <= 6; ++n) {
    MainCorReport r = verify_main_cor(k, n, Q);
    CHECK(r.ok);
    CHECK(r.matrices_match);
    CHECK(r.braid == braid_homology(k, n, Q));
  }
  auto eps = rank_one_space(Scalar(-1), F2);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(verify_main_cor(eps, n, F2).ok);
  for (bool sign : {false, true}) {
    auto V = rack_space(classes("S3", "transpositions"), sign, Q);
    for (std::size_t n = 1; n <= 3; ++n) {
      MainCorReport r = verify_main_cor(V, n, Q);
      CHECK(r.ok);
      CHECK(r.matrices_match);
    }
  }
  auto H = hecke_space(Scalar(3), Q);
  for (std::size_t n = 1; n <= 4; ++n) CHECK(verify_main_cor(H, n, Q).ok);
}

TEST_CASE("default truncations") {
  CHECK(default_ext_nmax(1) == 8);
  CHECK(default_ext_nmax(3) == 6);
  CHECK(default_ext_nmax(6) == 5);
}

}
