#include <doctest.h>

#include <memory>

#include "braidhom/error.hpp"
#include "braidhom/koszul.hpp"
#include "braidhom/linalg.hpp"
#include "braidhom/perm_group.hpp"

using namespace braidhom;

namespace {

std::shared_ptr<const ConjClassSet> classes(const char* group, const char* sel) {
  return std::make_shared<const ConjClassSet>(select_classes(builtin_group(group), sel));
}

}  // namespace

TEST_SUITE("koszul") {

TEST_CASE("homology of K(R) for S3 transpositions") {
  Field Q;
  auto c = classes("S3", "transpositions");
  KoszulComplex K = koszul_complex_ring(c, 4, 6, Q);
  CHECK(K.nichols_dim(4) == 1);
  CHECK(K.nichols_dim(5) == 0);
  RankTable H = koszul_homology(K);
  CHECK(H.get({0, 0}) == 1);
  CHECK(H.get({3, 3}) == 1);
  CHECK(H.total() == 2);
  CHECK(generator_counts(K, 3) == std::vector<std::size_t>{0, 0, 1, 0});
  CHECK_THROWS_AS(generator_counts(K, 4), InvalidInput);
}

TEST_CASE("dimensions and differentials") {
  Field Q;
  auto c = classes("S3", "transpositions");
  KoszulComplex K = koszul_complex_ring(c, 2, 3, Q);
  CHECK(K.dim(1, 2) == 3 * 5);
  CHECK(K.dim(2, 0) == 4);
  CHECK(K.differential(0, 1).rows() == 0);
  // p = 1: d(x_v* ⊗ 1) = 1 ⊗ [v]
  SparseMatrix d10 = K.differential(1, 0);
  CHECK(d10.rows() == 3);
  CHECK(d10.cols() == 3);
  CHECK(rank(d10, Q) == 3);
  // pmax = 0 still sees the incoming map from p = 1, so only the unit survives
  KoszulComplex K0 = koszul_complex_ring(c, 0, 2, Q);
  RankTable H0 = koszul_homology(K0);
  CHECK(H0.get({0, 0}) == 1);
  CHECK(H0.total() == 1);
}

TEST_CASE("identities hold on R and on each stratum") {
  Field Q;
  for (auto [g, s] : {std::pair{"S3", "transpositions"}, {"S3", "all"}, {"Z/3", "nontrivial"}}) {
    auto c = classes(g, s);
    KoszulComplex K = koszul_complex_ring(c, 3, 4, Q);
    KoszulReport rep = verify_koszul_identities(K);
    CHECK_MESSAGE(rep.ok(), g, " ", s, ": ", rep.witness);
    auto L = subgroup_lattice(*c);
    for (const auto& H : L.subgroups()) {
      KoszulComplex KH = koszul_complex(c, filtered_module(c, H, 5, Q), 3, 4, Q);
      KoszulReport rh = verify_koszul_identities(KH);
      CHECK_MESSAGE(rh.ok(), g, " ", s, ": ", rh.witness);
    }
  }
}

TEST_CASE("a corrupted derivation is caught") {
  Field Q;
  auto c = classes("S3", "transpositions");
  KoszulComplex K = koszul_complex_ring(c, 3, 4, Q);
  const SparseMatrix& D = K.nichols().skew_derivation(0, 2);
  K.set_derivation(0, 2, SparseMatrix(D.rows(), D.cols(), Q));
  KoszulReport rep = verify_koszul_identities(K);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.witness.empty());
  CHECK_THROWS_AS(K.set_derivation(0, 2, SparseMatrix(1, 1, Q)), InvalidInput);
}

TEST_CASE("multigraded homology refines the bigraded table") {
  Field Q;
  auto c = classes("S3", "transpositions+3-cycles");
  KoszulComplex K = koszul_complex_ring(c, 2, 4, Q);
  RankTable H = koszul_homology(K);
  RankTable M = koszul_homology_multigraded(K);
  RankTable folded({"p", "q"});
  for (const auto& [g, r] : M.entries()) {
    CHECK(g[2] + g[3] == g[0] + g[1]);
    folded.set({g[0], g[1]}, folded.get({g[0], g[1]}) + r);
  }
  for (const auto& [g, r] : H.entries()) CHECK(folded.get(g) == r);
  CHECK(folded.total() == H.total());
}

TEST_CASE("strata bound the homology of R") {
  Field Q;
  for (auto [g, s] : {std::pair{"S3", "transpositions"}, {"S3", "all"}}) {
    auto c = classes(g, s);
    std::size_t pmax = 3, qmax = 4;
    RankTable HR = koszul_homology(koszul_complex_ring(c, pmax, qmax, Q));
    RankTable sum({"p", "q"});
    auto L = subgroup_lattice(*c);
    for (const auto& H : L.subgroups()) {
      RankTable h = koszul_homology(koszul_complex(c, filtered_module(c, H, qmax + 1, Q), pmax, qmax, Q));
      for (const auto& [k, r] : h.entries()) sum.set(k, sum.get(k) + r);
    }
    sum.set({0, 0}, sum.get({0, 0}) + 1);  // the empty word
    for (int p = 0; p <= static_cast<int>(pmax); ++p)
      for (int q = 0; q <= static_cast<int>(qmax); ++q) CHECK(HR.get({p, q}) <= sum.get({p, q}));
  }
}

TEST_CASE("vanishing bookkeeping") {
  RankTable H({"p", "q"});
  H.set({1, 2}, 4);
  VanishingInfo v = vanishing(H, 1, 6);
  REQUIRE(v.last_nonzero);
  CHECK(*v.last_nonzero == 2);
  CHECK(v.zeros_after == 4);
  VanishingInfo none = vanishing(H, 2, 6);
  CHECK_FALSE(none.last_nonzero);
  CHECK(none.zeros_after == 7);
}

TEST_CASE("abelian classes give no relations") {
  Field Q;
  auto z2 = classes("Z/2", "nontrivial");
  KoszulComplex K = koszul_complex_ring(z2, 2, 6, Q);
  CHECK(generator_counts(K, 1) == std::vector<std::size_t>{0, 0});
}

}
