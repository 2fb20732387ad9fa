#include <doctest.h>

#include <memory>

#include "braidhom/braided_space.hpp"
#include "braidhom/error.hpp"
#include "braidhom/perm_group.hpp"
#include "braidhom/rack.hpp"

using namespace braidhom;

namespace {

std::shared_ptr<const ConjClassSet> classes(const char* group, const char* sel) {
  return std::make_shared<const ConjClassSet>(select_classes(builtin_group(group), sel));
}

BraidedVectorSpace rack_space(const char* group, const char* sel, bool eps, const Field& F,
                              long x = 1) {
  Rack R = conjugation_rack(classes(group, sel));
  return braided_space(R, Cocycle::constant(R.size(), Scalar(x)), eps, F);
}

}  // namespace

TEST_SUITE("braided") {

TEST_CASE("permutations use the right action") {
  Perm a = parse_cycles("(1,2)", 3), b = parse_cycles("(1,3)", 3);
  // x^(ab) = (x^a)^b: 1 -> 2 -> 2, 2 -> 1 -> 3, 3 -> 3 -> 1
  CHECK(cycle_string(compose(a, b)) == "(1,2,3)");
  CHECK(compose(a, invert(a)) == identity_perm(3));
  CHECK(cycle_type(parse_cycles("(1,2)(3,4,5)", 6)) == std::vector<int>{3, 2, 1});
  CHECK(perm_order(parse_cycles("(1,2)(3,4,5)", 5)) == 6);
  CHECK(parse_cycles("()", 2) == identity_perm(2));
  CHECK_THROWS(parse_cycles("(1,4)", 3));
}

TEST_CASE("builtin groups have the expected orders") {
  CHECK(builtin_group("S2")->order() == 2);
  CHECK(builtin_group("S3")->order() == 6);
  CHECK(builtin_group("S4")->order() == 24);
  CHECK(builtin_group("S5")->order() == 120);
  CHECK(builtin_group("A4")->order() == 12);
  CHECK(builtin_group("A5")->order() == 60);
  CHECK(builtin_group("Z/7")->order() == 7);
  CHECK(builtin_group("D4")->order() == 8);
  CHECK_THROWS_AS(builtin_group("Q8"), InvalidInput);
  CHECK_THROWS_AS(builtin_group("Z/13"), InvalidInput);

  auto G = parse_group_text("degree 4\n# Klein four\n(1,2)(3,4)\n(1,3)(2,4)\n", "V4");
  CHECK(G->order() == 4);
  CHECK(G->center().size() == 4);
}

TEST_CASE("group structure") {
  auto G = builtin_group("S3");
  CHECK(G->identity() == 0);
  CHECK(G->element(0) == identity_perm(3));
  CHECK(G->conjugacy_classes().size() == 3);
  CHECK(G->center().size() == 1);
  for (PermGroup::Id a = 0; a < G->order(); ++a) {
    CHECK(G->mul(a, G->inv(a)) == G->identity());
    CHECK(G->power(a, static_cast<long long>(G->element_order(a))) == G->identity());
  }
  auto t = G->id_of(parse_cycles("(1,2)", 3));
  CHECK(G->generated_subgroup({t}).size() == 2);
  CHECK(G->generated_subgroup({t, G->id_of(parse_cycles("(1,3)", 3))}).size() == 6);
}

TEST_CASE("class selectors") {
  CHECK(classes("S3", "transpositions")->size() == 3);
  CHECK(classes("S3", "3-cycles")->size() == 2);
  CHECK(classes("S3", "all")->size() == 5);
  CHECK(classes("S3", "all")->classes().size() == 2);
  CHECK(classes("S3", "transpositions+3-cycles")->size() == 5);
  CHECK(classes("S4", "type:2,2")->size() == 3);
  CHECK(classes("A4", "3-cycles")->classes().size() == 2);
  CHECK_FALSE(classes("A4", "class:(1,2,3)")->rational());
  CHECK(classes("A4", "3-cycles")->rational());
  CHECK(classes("S3", "transpositions")->generates_group());
  CHECK_FALSE(classes("S4", "type:2,2")->generates_group());
  CHECK_THROWS_AS(select_classes(builtin_group("S3"), "5-cycles"), InvalidInput);
  CHECK_THROWS_AS(select_classes(builtin_group("S3"), "bogus"), InvalidInput);
}

TEST_CASE("conjugation racks") {
  Rack R2 = conjugation_rack(classes("S2", "transpositions"));
  CHECK(R2.size() == 1);
  CHECK(R2.act(0, 0) == 0);

  auto c = classes("S3", "transpositions");
  Rack R = conjugation_rack(c);
  CHECK(R.size() == 3);
  CHECK(R.is_quandle());
  CHECK(R.check_axioms().empty());
  const PermGroup& G = c->group();
  auto t12 = *R.label_of(G.id_of(parse_cycles("(1,2)", 3)));
  auto t13 = *R.label_of(G.id_of(parse_cycles("(1,3)", 3)));
  auto t23 = *R.label_of(G.id_of(parse_cycles("(2,3)", 3)));
  CHECK(R.act(t12, t13) == t23);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) CHECK(R.act(R.act_inv(a, b), b) == a);

  Rack R3 = conjugation_rack(classes("S3", "3-cycles"));
  CHECK(R3.size() == 2);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) CHECK(R3.act(a, b) == a);

  // a^b = a + 1 on Z/3 is a rack (not a quandle)
  Rack shift({"0", "1", "2"}, {{1, 1, 1}, {2, 2, 2}, {0, 0, 0}});
  CHECK_FALSE(shift.is_quandle());
  CHECK_THROWS_AS(Rack({"0", "1"}, {{0, 0}, {0, 1}}), InvalidInput);
}

TEST_CASE("cocycles") {
  Field Q;
  Rack R = conjugation_rack(classes("S3", "transpositions"));
  CHECK(Cocycle::constant(3, Scalar(-1)).check(R, Q).empty());
  std::vector<std::vector<Scalar>> t(3, std::vector<Scalar>(3, Scalar(1)));
  t[0][0] = 2;
  Cocycle bad(3, t);
  CHECK_FALSE(bad.check(R, Q).empty());
  CHECK_THROWS_AS(braided_space(R, bad, false, Q), InvalidInput);
}

TEST_CASE("braided space examples") {
  Field Q;
  Rack one = trivial_rack();
  auto k = braided_space(one, Cocycle::constant(1, Scalar(1)), false, Q);
  CHECK(k.sigma() == SparseMatrix::identity(1, Q));
  auto eps = braided_space(one, Cocycle::constant(1, Scalar(1)), true, Q);
  CHECK(eps.sigma().at(0, 0) == -1);
  CHECK(check_braided(eps).ok);

  auto V = rack_space("S3", "transpositions", true, Q);
  const Rack& R = *V.rack();
  CHECK(V.sigma().rows() == 9);
  CHECK(V.sigma().nnz() == 9);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      const auto& col = V.sigma().column(a * 3 + b);
      REQUIRE(col.size() == 1);
      CHECK(col[0].first == b * 3 + R.act(a, b));
      CHECK(col[0].second == -1);
    }
  CHECK(check_braided(V).ok);
  CHECK(check_braided(rack_space("S3", "transpositions", false, Q)).ok);
  CHECK(check_braided(rack_space("S3", "transpositions", false, Q, -1)).ok);
  CHECK(check_braided(rack_space("A4", "3-cycles", true, Field::prime(7))).ok);
  CHECK(V.epsilon_twisted().sigma() == rack_space("S3", "transpositions", false, Q).sigma());
  CHECK(check_braided(V.dual()).ok);
}

TEST_CASE("corrupted action fails the braid check with a witness") {
  Field Q;
  auto V = rack_space("S3", "transpositions", false, Q);
  SparseMatrix s = V.sigma();
  auto c0 = s.column(1), c1 = s.column(2);
  s.set_column(1, c1);
  s.set_column(2, c0);
  auto W = BraidedVectorSpace::from_matrix(V.labels(), s);
  auto rep = check_braided(W);
  CHECK_FALSE(rep.ok);
  CHECK(rep.witness.has_value());
}

TEST_CASE("braid word action") {
  Field Q;
  auto eps = rank_one_space(Scalar(-1), Q);
  CHECK(braid_word_action(eps, 3, {}) == SparseMatrix::identity(1, Q));
  CHECK(braid_word_action(eps, 3, {1, 2, 1}) == SparseMatrix::identity(1, Q).scaled(Scalar(-1)));
  auto V = rack_space("S3", "transpositions", true, Q);
  CHECK(braid_word_action(V, 3, {1, -1}) == SparseMatrix::identity(27, Q));
  CHECK_THROWS(braid_word_action(V, 3, {3}));
  CHECK_THROWS(braid_word_action(V, 3, {0}));
}

TEST_CASE("braid relations, signed permutations and multidegree on tensor powers") {
  Field Q;
  for (bool eps : {false, true}) {
    auto V = rack_space("S3", "all", eps, Q);
    const Rack& R = *V.rack();
    const ConjClassSet& c = *R.class_set();
    for (std::size_t n = 3; n <= 4; ++n) {
      WordCodec codec(V.rank(), n);
      for (int i = 1; i + 1 < static_cast<int>(n); ++i) {
        CHECK(braid_word_action(V, n, {i, i + 1, i}) == braid_word_action(V, n, {i + 1, i, i + 1}));
      }
      for (int i = 1; i < static_cast<int>(n); ++i) {
        SparseMatrix M = braid_word_action(V, n, {i});
        for (std::size_t w = 0; w < M.cols(); ++w) {
          REQUIRE(M.column(w).size() == 1);
          auto [img, val] = M.column(w)[0];
          CHECK((val == 1 || val == -1));
          std::vector<int> from(c.classes().size(), 0), to(c.classes().size(), 0);
          for (auto l : codec.letters(w)) ++from[c.class_of(c.elements()[l])];
          for (auto l : codec.letters(img)) ++to[c.class_of(c.elements()[l])];
          CHECK(from == to);
        }
      }
    }
  }
}

}
