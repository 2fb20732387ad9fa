#include <doctest.h>

#include <cmath>
#include <map>
#include <memory>
#include <numeric>

#include "braidhom/error.hpp"
#include "braidhom/hurwitz.hpp"
#include "braidhom/perm_group.hpp"
#include "braidhom/qsa.hpp"
#include "oracles.hpp"

using namespace braidhom;

namespace {

std::shared_ptr<const ConjClassSet> classes(const char* group, const char* sel) {
  return std::make_shared<const ConjClassSet>(select_classes(builtin_group(group), sel));
}

std::vector<oracle::P> as_oracle(const ConjClassSet& c) {
  std::vector<oracle::P> out;
  for (auto e : c.elements()) {
    const Perm& p = c.group().element(e);
    out.emplace_back(p.begin(), p.end());
  }
  return out;
}

}  // namespace

TEST_SUITE("hurwitz") {

TEST_CASE("small orbit tables") {
  auto c = classes("S3", "transpositions");
  CHECK(hurwitz_orbits(c, 0).size() == 1);
  CHECK(hurwitz_orbits(c, 1).size() == 3);
  OrbitTable T = hurwitz_orbits(c, 2);
  REQUIRE(T.size() == 5);
  std::multiset<std::size_t> sizes;
  for (const auto& o : T.orbits()) sizes.insert(o.size);
  CHECK(sizes == std::multiset<std::size_t>{1, 1, 1, 3, 3});
  const PermGroup& G = c->group();
  for (const auto& o : T.orbits())
    if (o.size == 3) {
      CHECK(G.element_order(o.product) == 3);
      CHECK(T.subgroups()[o.monodromy].size() == 6);
    }
}

TEST_CASE("orbit counts agree with a naive search and the symmetric-power bound") {
  for (auto [g, s] : {std::pair{"S3", "transpositions"}, {"S4", "transpositions"},
                      {"A4", "3-cycles"}, {"S3", "all"}, {"D4", "nontrivial"}}) {
    auto c = classes(g, s);
    auto oc = as_oracle(*c);
    std::size_t d = c->size();
    for (unsigned n = 0; n <= 5; ++n) {
      OrbitTable T = hurwitz_orbits(c, n);
      CHECK(T.size() == oracle::hurwitz_orbit_count(oc, n));
      CHECK(T.size() <= oracle::binomial(n + d - 1, n));
      std::size_t total = 0;
      for (const auto& o : T.orbits()) total += o.size;
      CHECK(total == static_cast<std::size_t>(std::pow(d, n) + 0.5));
    }
  }
}

TEST_CASE("multigrade, product class and monodromy are orbit invariants") {
  auto c = classes("S4", "transpositions+3-cycles");
  Rack R = conjugation_rack(c);
  const PermGroup& G = c->group();
  std::size_t n = 3;
  OrbitTable T = hurwitz_orbits(c, n);
  WordCodec codec(c->size(), n);
  for (Word w = 0; w < codec.count(); ++w) {
    const HurwitzOrbit& o = T.orbits()[T.orbit_of(w)];
    std::vector<int> mg(c->classes().size(), 0);
    std::vector<PermGroup::Id> letters;
    PermGroup::Id prod = G.identity();
    for (auto l : codec.letters(w)) {
      ++mg[c->class_of(c->elements()[l])];
      letters.push_back(c->elements()[l]);
      prod = G.mul(prod, c->elements()[l]);
    }
    CHECK(mg == o.multigrade);
    CHECK(prod == o.product);
    CHECK(monodromy_group(G, letters) == T.subgroups()[o.monodromy]);
    CHECK(o.representative <= w);
    for (int i = 1; i < static_cast<int>(n); ++i) {
      CHECK(T.orbit_of(hurwitz_move(R, n, i, w)) == T.orbit_of(w));
      CHECK(hurwitz_move(R, n, -i, hurwitz_move(R, n, i, w)) == w);
    }
  }
}

TEST_CASE("state-space cap") {
  auto c = classes("S4", "transpositions");
  CHECK_THROWS_AS(hurwitz_orbits(c, 5, 1000), CapExceeded);
}

TEST_CASE("monodromy groups") {
  auto G = builtin_group("S3");
  auto t12 = G->id_of(parse_cycles("(1,2)", 3)), t13 = G->id_of(parse_cycles("(1,3)", 3));
  CHECK(monodromy_group(*G, {}) == Subgroup{G->identity()});
  CHECK(monodromy_group(*G, {t12, t12}).size() == 2);
  CHECK(monodromy_group(*G, {t12, t13}).size() == 6);
}

TEST_CASE("subgroup lattices") {
  auto L2 = subgroup_lattice(*classes("S2", "transpositions"));
  CHECK(L2.size() == 1);
  auto L = subgroup_lattice(*classes("S3", "transpositions"));
  REQUIRE(L.size() == 4);
  CHECK(L.subgroups()[0].size() == 2);
  CHECK(L.subgroups()[3].size() == 6);
  for (std::size_t i = 0; i < 3; ++i) CHECK(L.contains(3, i));
  CHECK_FALSE(L.contains(0, 1));
  auto L5 = subgroup_lattice(*classes("S3", "transpositions+3-cycles"));
  CHECK(L5.size() == 5);
  CHECK(L5.subgroups()[3].size() == 3);
}

TEST_CASE("monodromy strata partition the orbits") {
  Field Q;
  for (auto [g, s] : {std::pair{"S3", "transpositions"}, {"S3", "all"}, {"A4", "3-cycles"}}) {
    auto c = classes(g, s);
    auto L = subgroup_lattice(*c);
    std::size_t qmax = 4;
    GradedOrbitModule R = ring_module(c, qmax, Q);
    std::vector<std::size_t> sum(qmax + 1, 0);
    for (const auto& H : L.subgroups()) {
      GradedOrbitModule M = filtered_module(c, H, qmax, Q);
      for (std::size_t q = 0; q <= qmax; ++q) sum[q] += M.dim(q);
    }
    sum[0] += 1;  // the empty word has trivial monodromy
    for (std::size_t q = 0; q <= qmax; ++q) CHECK(sum[q] == R.dim(q));
  }
}

TEST_CASE("filtered module examples") {
  Field Q;
  auto c = classes("S3", "transpositions");
  auto L = subgroup_lattice(*c);
  GradedOrbitModule full = filtered_module(c, L.subgroups()[3], 3, Q);
  CHECK(full.dim(0) == 0);
  CHECK(full.dim(2) == 2);
  const PermGroup& G = c->group();
  Subgroup h12 = G.generated_subgroup({G.id_of(parse_cycles("(1,2)", 3))});
  GradedOrbitModule one = filtered_module(c, h12, 3, Q);
  CHECK(one.dim(2) == 1);
  CHECK(one.dim(3) == 1);
  GradedOrbitModule triv = filtered_module(c, Subgroup{G.identity()}, 3, Q);
  CHECK(triv.dim(0) == 1);
  CHECK(triv.dim(1) == 0);
  Subgroup a3 = G.generated_subgroup({G.id_of(parse_cycles("(1,2,3)", 3))});
  CHECK_THROWS_AS(filtered_module(c, a3, 3, Q), InvalidInput);
  // a letter outside the stratum acts by zero
  std::size_t t12 = *conjugation_rack(c).label_of(G.id_of(parse_cycles("(1,2)", 3)));
  for (std::size_t v = 0; v < 3; ++v) {
    if (v == t12) CHECK_FALSE(one.left[v][1].is_zero());
    else CHECK(one.left[v][1].is_zero());
  }
  // left and right actions commute on R
  GradedOrbitModule R = ring_module(c, 4, Q);
  for (std::size_t u = 0; u < 3; ++u)
    for (std::size_t v = 0; v < 3; ++v)
      for (std::size_t q = 0; q + 2 <= 4; ++q)
        CHECK(R.left[u][q + 1] * R.right[v][q] == R.right[v][q + 1] * R.left[u][q]);
}

TEST_CASE("ring module dims agree with the ring of components") {
  Field Q;
  auto c = classes("S4", "transpositions");
  Rack Rk = conjugation_rack(c);
  auto V = braided_space(Rk, Cocycle::constant(Rk.size(), Scalar(1)), false, Q);
  ComponentsRing CR = components_ring(V, 4, Q);
  GradedOrbitModule R = ring_module(c, 4, Q);
  for (std::size_t q = 0; q <= 4; ++q) CHECK(R.dim(q) == CR.dim(q));
}

TEST_CASE("restricting classes to a subgroup") {
  auto c = classes("S3", "transpositions+3-cycles");
  auto L = subgroup_lattice(*c);
  auto ch = restrict_classes(*c, L.subgroups()[3]);  // the order-3 subgroup
  CHECK(ch->group().order() == 3);
  CHECK(ch->size() == 2);
}

TEST_CASE("Nielsen classes") {
  Field Q;
  auto c = classes("S3", "transpositions");
  NielsenResult n1 = nielsen_components(c, 1, Q);
  CHECK(n1.components == 0);
  NielsenResult n2 = nielsen_components(c, 2, Q);
  CHECK(n2.components == 1);
  CHECK(n2.betti[0] == n2.components);
  for (std::size_t n = 2; n <= 4; ++n) {
    NielsenResult r = nielsen_components(c, n, Q);
    CHECK(r.betti[0] == r.components);
    CHECK(r.betti.size() == n + 1);
  }
  auto z2 = classes("Z/2", "nontrivial");
  NielsenResult zr = nielsen_components(z2, 1, Q);
  CHECK(zr.components == 1);
  CHECK(zr.betti == std::vector<std::size_t>{1, 0});
  auto z3 = classes("Z/3", "nontrivial");
  CHECK(nielsen_components(z3, 1, Q).components == 2);
  CHECK(nielsen_components(classes("S4", "transpositions"), 1, Q).components == 0);
}

TEST_CASE("stabilization thresholds") {
  Field Q;
  auto z2 = classes("Z/2", "nontrivial");
  StabilizationReport zr = stabilization_thresholds(z2, 0, 6, Q);
  CHECK(zr.well_defined);
  REQUIRE(zr.threshold);
  CHECK(*zr.threshold == 0);
  // the empty word has trivial monodromy, so only q >= 1 is in R^{(G)}
  for (const auto& s : zr.steps) CHECK(s.bijective() == (s.source[0] >= 1));

  auto c = classes("S3", "transpositions");
  StabilizationReport r = stabilization_thresholds(c, 0, 8, Q);
  CHECK(r.well_defined);
  REQUIRE(r.threshold);
  for (const auto& s : r.steps)
    if (s.source[0] > *r.threshold) CHECK(s.bijective());
  bool some_failure_at_threshold = false;
  for (const auto& s : r.steps)
    if (s.source[0] == *r.threshold && !s.bijective()) some_failure_at_threshold = true;
  CHECK(some_failure_at_threshold);
}

}
