#include <catch2/catch_amalgamated.hpp>

#include "qdl/quandle.hpp"

using namespace qdl;

TEST_CASE("axiom scan accepts dihedral tables and pinpoints corruptions", "[quandle]") {
  for (int n : {1, 2, 3, 5, 8}) {
    Table t = dihedral_quandle(n).table();
    REQUIRE_FALSE(find_axiom_violation(t).has_value());
  }

  SECTION("idempotency") {
    Table t = dihedral_quandle(5).table();
    t[2][2] = 3;
    auto w = find_axiom_violation(t);
    REQUIRE(w.has_value());
    // the broken diagonal also breaks column 2's bijectivity, reported first
    CHECK((w->axiom == Axiom::Idempotency || w->axiom == Axiom::RightTranslation));
  }
  SECTION("right translation bijectivity") {
    Table t = trivial_quandle(4).table();
    t[1][0] = 0;  // column 0 now hits 0 twice
    auto w = find_axiom_violation(t);
    REQUIRE(w.has_value());
    CHECK(w->axiom == Axiom::RightTranslation);
  }
  SECTION("distributivity") {
    // swap two off-diagonal entries of a column of R_5 keeping it a bijection
    Table t = dihedral_quandle(5).table();
    std::swap(t[0][1], t[3][1]);
    auto w = find_axiom_violation(t);
    REQUIRE(w.has_value());
  }
  SECTION("out of range entries") {
    Table t = trivial_quandle(3).table();
    t[0][1] = 7;
    REQUIRE(find_axiom_violation(t).has_value());
  }

  SECTION("checked constructor throws, unchecked does not") {
    Table t = trivial_quandle(3).table();
    t[0][1] = 1;
    REQUIRE_THROWS_AS(FiniteQuandle::checked(t), AxiomViolation);
    REQUIRE_NOTHROW(FiniteQuandle::unchecked(t));
  }
}

TEST_CASE("inverse operation and powers", "[quandle]") {
  FiniteQuandle q = dihedral_quandle(7);
  for (int x = 0; x < 7; ++x)
    for (int y = 0; y < 7; ++y) {
      CHECK(q.inv_op(q.op(x, y), y) == x);
      CHECK(q.op(q.inv_op(x, y), y) == x);
      CHECK(q.op_pow(x, y, 2) == x);   // dihedral quandles are involutory
      CHECK(q.op_pow(x, y, -1) == q.op(x, y));
    }
}

TEST_CASE("n-quandle predicate", "[quandle]") {
  CHECK(is_n_quandle(dihedral_quandle(6), 2));
  CHECK(is_n_quandle(trivial_quandle(4), 1));
  CHECK(is_n_quandle(trivial_quandle(4), 5));
  CHECK_FALSE(is_n_quandle(dihedral_quandle(5), 3));
}

TEST_CASE("orbits and connectivity", "[quandle]") {
  CHECK(is_connected(dihedral_quandle(3)));
  CHECK(is_connected(dihedral_quandle(5)));
  CHECK_FALSE(is_connected(dihedral_quandle(4)));  // even dihedral splits in two
  CHECK(orbits(dihedral_quandle(4)).size() == 2);
  CHECK(orbits(trivial_quandle(5)).size() == 5);
  CHECK(orbits(trivial_quandle(1)).size() == 1);
}

TEST_CASE("translation order profile", "[quandle]") {
  auto nu = nu_profile(dihedral_quandle(5));
  for (auto v : nu) CHECK(v == 2);
  nu = nu_profile(trivial_quandle(3));
  for (auto v : nu) CHECK(v == 1);
}

TEST_CASE("inner group of small quandles", "[quandle]") {
  // R_3's translations generate the symmetric group on 3 points
  CHECK(inner_group(dihedral_quandle(3)).elements.size() == 6);
  CHECK(inner_group(trivial_quandle(4)).elements.size() == 1);
}

TEST_CASE("labels travel with the table", "[quandle]") {
  FiniteQuandle q = FiniteQuandle::checked(dihedral_quandle(3).table(), {"u", "v", "w"});
  CHECK(q.has_labels());
  CHECK(q.label(1) == "v");
  CHECK(dihedral_quandle(3).label(1) == "1");
  REQUIRE_THROWS_AS(FiniteQuandle::checked(dihedral_quandle(3).table(), {"u"}), Error);
}
