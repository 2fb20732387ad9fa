#include <doctest.h>

#include <memory>

#include "braidhom/error.hpp"
#include "braidhom/hurwitz.hpp"
#include "braidhom/malle.hpp"
#include "braidhom/perm_group.hpp"

using namespace braidhom;

namespace {

ConjClassSet classes(const char* group, const char* sel) {
  return select_classes(builtin_group(group), sel);
}

}  // namespace

TEST_SUITE("malle") {

TEST_CASE("index of a permutation") {
  CHECK(perm_index(parse_cycles("()", 4)) == 0);
  CHECK(perm_index(parse_cycles("(1,2)", 4)) == 1);
  CHECK(perm_index(parse_cycles("(1,2,3)", 4)) == 2);
  CHECK(perm_index(parse_cycles("(1,2)(3,4)", 4)) == 2);
  CHECK(perm_index(parse_cycles("(1,2,3,4)", 4)) == 3);
}

TEST_CASE("Malle's a-invariant") {
  CHECK(malle_a(classes("S3", "all")) == 1);
  CHECK(malle_a(classes("S3", "3-cycles")) == mpq_class(1, 2));
  CHECK(malle_a(classes("Z/3", "nontrivial")) == mpq_class(1, 2));
  CHECK(malle_a(classes("S4", "transpositions")) == 1);
  // a(G, c) <= a(G), the latter taken over all nontrivial classes
  for (const char* g : {"S3", "S4", "A4", "D4", "Z/4"}) {
    mpq_class top = malle_a(classes(g, "nontrivial"));
    auto G = builtin_group(g);
    auto cls = G->conjugacy_classes();
    for (std::size_t i = 1; i < cls.size(); ++i) {
      ConjClassSet one = select_classes(G, "class:" + cycle_string(G->element(cls[i].front())));
      CHECK(malle_a(one) <= top);
    }
  }
}

TEST_CASE("discriminant degree") {
  ConjClassSet c = classes("S3", "transpositions");
  CHECK(discriminant_degree(c, {4}) == 4);
  ConjClassSet all = classes("S3", "all");
  // one 3-cycle and two transpositions
  std::vector<std::size_t> counts(all.classes().size(), 0);
  for (std::size_t i = 0; i < all.classes().size(); ++i) {
    const Perm& p = all.group().element(all.classes()[i].front());
    counts[i] = perm_index(p) == 1 ? 2 : 1;
  }
  CHECK(discriminant_degree(all, counts) == 4);
  CHECK_THROWS_AS(discriminant_degree(c, {1, 2}), InvalidInput);
}

TEST_CASE("group centres") {
  CHECK(group_center(*builtin_group("S3")).size() == 1);
  CHECK(group_center(*builtin_group("Z/4")).size() == 4);
  CHECK(group_center(*builtin_group("D4")).size() == 2);
  CHECK(group_center(*builtin_group("A4")).size() == 1);
  MalleConstants m = malle_constants(classes("S3", "all"));
  CHECK(m.a == 1);
  CHECK(m.center_order == 1);
  REQUIRE(m.class_index.size() == 2);
}

TEST_CASE("point-count bounds") {
  PointCountBound k = point_count_bound(7, 3, {1, 0}, 0);
  REQUIRE(k.bound.rational());
  CHECK(*k.bound.rational() == 343);
  CHECK(*k.ratio.rational() == 1);
  // b = (1, 1) at q = 4: q^n (1 + 1/2)
  PointCountBound h = point_count_bound(4, 2, {1, 1}, 0);
  REQUIRE(h.bound.rational());
  CHECK(*h.bound.rational() == 24);
  // q not a square keeps the sqrt part
  PointCountBound s = point_count_bound(2, 3, {1, 1, 1}, 1);
  // 8 (1 + 1/2) + 8 2^{-1/2} = 12 + 4 sqrt(2)
  CHECK(s.bound.A == 12);
  CHECK(s.bound.B == 4);
  CHECK_FALSE(s.bound.rational());
  CHECK(s.ratio.A == mpq_class(1, 2));
  CHECK(s.ratio.B == mpq_class(1, 6));
  CHECK(s.bound.approx() == doctest::Approx(12 + 4 * 1.4142135623730951));
  CHECK(s.bound.str() == "12 + 4*sqrt(2)");
  CHECK_THROWS_AS(point_count_bound(4, 2, {1, -1}, 0), InvalidInput);
  CHECK_THROWS_AS(point_count_bound(6, 2, {1}, 0), InvalidInput);
  CHECK_THROWS_AS(point_count_bound(4, 0, {1}, 1), InvalidInput);
  // larger ranks give larger bounds
  CHECK(point_count_bound(5, 4, {1, 2, 3}, 0).bound.approx() <
        point_count_bound(5, 4, {1, 2, 4}, 0).bound.approx());
}

TEST_CASE("prime powers") {
  for (std::uint64_t q : {2u, 3u, 4u, 8u, 9u, 25u, 27u, 49u, 1024u}) CHECK(is_prime_power(q));
  for (std::uint64_t q : {0u, 1u, 6u, 10u, 12u, 36u, 100u}) CHECK_FALSE(is_prime_power(q));
}

TEST_CASE("counting sums") {
  for (std::uint64_t q : {2u, 3u, 5u})
    for (std::size_t N = 1; N <= 6; ++N) {
      mpz_class qN;
      mpz_ui_pow_ui(qN.get_mpz_t(), q, N);
      mpq_class closed = mpq_class(3 * q * (qN - 1)) / (q - 1);
      CHECK(malle_sum(3, 0, q, N) == closed);
      for (std::size_t d = 0; d <= 3; ++d) CHECK(malle_sum(3, d, q, N) <= malle_sum_bound(3, d, q, N));
    }
  CHECK(malle_sum(1, 1, 2, 2) == 2 + 8);
}

TEST_CASE("empirical degree") {
  auto lin = empirical_degree({1, 3, 5, 7, 9});
  REQUIRE(lin);
  CHECK(lin->d == 1);
  auto quad = empirical_degree({0, 1, 4, 9, 16, 25}, 1);
  REQUIRE(quad);
  CHECK(quad->d == 2);
  CHECK(quad->n0 == 1);
  CHECK(quad->n1 == 6);
  auto cst = empirical_degree({5, 5, 5});
  REQUIRE(cst);
  CHECK(cst->d == 0);
  CHECK_FALSE(empirical_degree({1, 2}));
  CHECK_FALSE(empirical_degree({1, 2, 4, 8, 16}));
  // orbit counts of S3 transpositions are constant from n = 3 on
  auto c = std::make_shared<const ConjClassSet>(classes("S3", "transpositions"));
  std::vector<long long> r;
  for (std::size_t n = 0; n <= 7; ++n) r.push_back(static_cast<long long>(hurwitz_orbits(c, n).size()));
  auto e = empirical_degree(r);
  REQUIRE(e);
  CHECK(e->d == 0);
}

}
