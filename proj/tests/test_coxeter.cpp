#include <catch2/catch_amalgamated.hpp>

#include "qdl/coxeter.hpp"
#include "qdl/iso.hpp"
#include "qdl/quandle.hpp"

using namespace qdl;

TEST_CASE("coxeter matrix validation", "[coxeter]") {
  CHECK_NOTHROW(validate_coxeter_matrix(coxeter_A(3)));
  CHECK_NOTHROW(validate_coxeter_matrix(coxeter_B(2)));
  CHECK_NOTHROW(validate_coxeter_matrix(coxeter_I2(7)));

  CoxeterMatrix bad;
  bad.m = {{1, 2}, {3, 1}};
  CHECK_THROWS_AS(validate_coxeter_matrix(bad), Error);
  bad.m = {{2, 3}, {3, 1}};
  CHECK_THROWS_AS(validate_coxeter_matrix(bad), Error);
  bad.m = {{1, 1}, {1, 1}};
  CHECK_THROWS_AS(validate_coxeter_matrix(bad), Error);
  bad.m = {{1, 3, 3}, {3, 1, 3}};
  CHECK_THROWS_AS(validate_coxeter_matrix(bad), Error);
}

TEST_CASE("artin and coxeter group presentations", "[coxeter]") {
  GroupPresentation a3 = artin_presentation(coxeter_A(3));
  CHECK(a3.gens == std::vector<std::string>{"s1", "s2", "s3"});
  CHECK(a3.relators.size() == 3);  // two braid edges and one commuting edge

  GroupPresentation w3 = coxeter_presentation(coxeter_A(3));
  CHECK(w3.relators.size() == 6);  // + one square per generator

  GroupPresentation b = braid_presentation(4);
  CHECK(b.gens.size() == 3);
  CHECK_THROWS_AS(braid_presentation(1), Error);

  // infinite label: no relator for the pair
  CoxeterMatrix inf;
  inf.m = {{1, 0}, {0, 1}};
  CHECK(artin_presentation(inf).relators.empty());
}

TEST_CASE("permutation realizations match the classical orders", "[coxeter]") {
  CHECK(realize_coxeter(coxeter_A(1)).group.order() == 2);
  CHECK(realize_coxeter(coxeter_A(2)).group.order() == 6);
  CHECK(realize_coxeter(coxeter_A(3)).group.order() == 24);
  CHECK(realize_coxeter(coxeter_A(4)).group.order() == 120);
  CHECK(realize_coxeter(coxeter_B(2)).group.order() == 8);
  CHECK(realize_coxeter(coxeter_B(3)).group.order() == 48);
  CHECK(realize_coxeter(coxeter_I2(5)).group.order() == 10);
  CHECK(realize_coxeter(coxeter_I2(6)).group.order() == 12);

  CoxeterMatrix h3;  // icosahedral diagram: no realization wired up
  h3.m = {{1, 5, 2}, {5, 1, 3}, {2, 3, 1}};
  CHECK_THROWS_AS(realize_coxeter(h3), UnsupportedType);
}

TEST_CASE("simple reflections generate and square to the identity", "[coxeter]") {
  CoxeterRealization r = realize_coxeter(coxeter_B(3));
  REQUIRE(r.simple.size() == 3);
  for (const Perm& s : r.simple) CHECK(is_identity(compose(s, s)));
  // braid test on the 4-edge: (s2 s3)^4 = 1 but (s2 s3)^2 != 1
  Perm st = compose(r.simple[1], r.simple[2]);
  CHECK_FALSE(is_identity(compose(st, st)));
  CHECK(is_identity(compose(compose(st, st), compose(st, st))));
}

TEST_CASE("reflection quandle sizes", "[coxeter]") {
  CHECK(coxeter_quandle(coxeter_A(2)).size() == 3);
  CHECK(coxeter_quandle(coxeter_A(3)).size() == 6);
  CHECK(coxeter_quandle(coxeter_A(4)).size() == 10);
  CHECK(coxeter_quandle(coxeter_I2(4)).size() == 4);
  CHECK(coxeter_quandle(coxeter_B(3)).size() == 9);

  CHECK(is_connected(coxeter_quandle(coxeter_A(3))));
  CHECK(orbits(coxeter_quandle(coxeter_I2(4))).size() == 2);
  CHECK(orbits(coxeter_quandle(coxeter_B(3))).size() == 2);
  for (auto cm : {coxeter_A(3), coxeter_B(3), coxeter_I2(4)})
    CHECK(is_n_quandle(coxeter_quandle(cm), 2));
}

TEST_CASE("quandle presentation builders copy the edge structure", "[coxeter]") {
  QuandlePresentation p = artin_quandle_presentation(coxeter_A(2));
  REQUIRE(p.gens.size() == 2);
  // one stabilizer relation per generator plus the two odd-edge conjugations
  CHECK(p.rels.size() == 4);

  QuandlePresentation even = artin_quandle_presentation(coxeter_I2(4));
  for (const QuandleRelation& r : even.rels)
    CHECK(r.lhs.base == r.rhs.base);  // even edges add only stabilizer-shaped relations

  QuandlePresentation c = coxeter_quandle_presentation(coxeter_A(2));
  CHECK(c.rels.size() == p.rels.size() + 2);  // + x*y*y = x both ways
}
