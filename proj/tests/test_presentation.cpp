#include <catch2/catch_amalgamated.hpp>

#include "qdl/enumerate.hpp"
#include "qdl/parser.hpp"
#include "qdl/presentation.hpp"
#include "qdl/quandle.hpp"

using namespace qdl;

TEST_CASE("relation simplification", "[presentation]") {
  // leading letters equal to the base are absorbed: a *- a * b  ->  a * b
  QuandleRelation r{QWord{0, {{0, -1}, {1, 1}}}, QWord{1, {}}};
  QuandleRelation s = simplify_relation(r);
  CHECK(s.lhs.tail.size() == 1);
  CHECK(s.lhs.tail[0] == QLetter{1, 1});

  // common trailing letters cancel on both sides
  QuandleRelation t{QWord{0, {{1, 1}, {2, 1}}}, QWord{1, {{2, 1}}}};
  QuandleRelation u = simplify_relation(t);
  CHECK(u.lhs.tail.size() == 1);
  CHECK(u.rhs.tail.empty());

  // tails free-reduce first
  QuandleRelation v{QWord{0, {{1, 1}, {1, -1}}}, QWord{0, {}}};
  QuandleRelation w = simplify_relation(v);
  CHECK(w.lhs == w.rhs);
}

TEST_CASE("augmentation appends the pair power relations", "[presentation]") {
  QuandlePresentation p = parse_quandle_presentation("quandle< a, b | >");
  QuandlePresentation p3 = augment_n(p, 3);
  REQUIRE(p3.rels.size() == 2);  // (a,b) and (b,a)
  CHECK(p3.rels[0].lhs.tail.size() == 3);
  CHECK(p3.rels[0].lhs.base == 0);
  CHECK(p3.rels[0].rhs == QWord{0, {}});
  CHECK_THROWS_AS(augment_n(p, 0), Error);
}

TEST_CASE("enveloping presentation of the trefoil quandle", "[presentation]") {
  QuandlePresentation p =
      parse_quandle_presentation("quandle< a, b | a*b*a = b ; b*a*b = a >");
  GroupPresentation g = env_presentation(p);
  REQUIRE(g.gens == p.gens);
  REQUIRE(g.relators.size() == 2);
  // hat(a*b*a) hat(b)^-1 = a b a b^-1 a^-1 b^-1 after free reduction
  GroupWord expect{{0, 1}, {1, 1}, {0, 1}, {1, -1}, {0, -1}, {1, -1}};
  CHECK(g.relators[0] == expect);

  GroupPresentation g2 = env_presentation(p, 2);
  CHECK(g2.relators.size() == 4);  // + x^2 y x^-2 y^-1 for both ordered pairs
  CHECK(g2.relators[2].size() == 6);
}

TEST_CASE("finite enveloping quotient presentation enumerates consistently", "[presentation]") {
  FiniteQuandle q = dihedral_quandle(3);
  GroupPresentation g = fq_presentation(q);
  REQUIRE(g.gens.size() == 3);
  GroupEnumResult r = enumerate_group(g);
  REQUIRE(r.finished);
  // conjugation inside the enumerated group follows the quandle table
  for (int x = 0; x < q.size(); ++x)
    for (int y = 0; y < q.size(); ++y) {
      const Perm& px = r.generator_action[static_cast<std::size_t>(x)];
      const Perm& py = r.generator_action[static_cast<std::size_t>(y)];
      // e_y e_x e_y^-1 as a right action on cosets: apply py, then px, then py^-1
      Perm lhs = compose(compose(py, px), inverse(py));
      CHECK(lhs == r.generator_action[static_cast<std::size_t>(q.op(x, y))]);
    }
}

TEST_CASE("group-to-quandle recipe emits one stabilizer relation per generator and relator",
          "[presentation]") {
  GroupPresentation g = parse_group_presentation("group< s, t | s t s t^-1 s^-1 t^-1 >");
  QuandlePresentation p = dehn_presentation_from_group(g);
  REQUIRE(p.gens == g.gens);
  REQUIRE(p.rels.size() == 2);
  for (const QuandleRelation& r : p.rels) {
    CHECK(r.lhs.base == r.rhs.base);  // stabilizer shape: same base on both sides
    CHECK(r.rhs.tail.empty());
  }
  // conjugation expands rightmost-first: the relator's last letter acts first
  CHECK(p.rels[0].lhs.tail.front() == QLetter{1, -1});

  // a relator touching only the base simplifies away entirely
  GroupPresentation sq = parse_group_presentation("group< s | s^2 >");
  CHECK(dehn_presentation_from_group(sq).rels.empty());
}

TEST_CASE("stabilizer relations do not identify generator conjugates", "[presentation]") {
  // For the commuting relator, x*r = x only makes the two translations
  // commute. Conjugation in the free class-2 nilpotent group is a model with
  // s*t != s, so the plain enumeration is infinite and even the involutory
  // quotient keeps s, s*t distinct.
  GroupPresentation g = parse_group_presentation("group< s, t | s t s^-1 t^-1 >");
  QuandlePresentation p = dehn_presentation_from_group(g);

  EnumCaps caps;
  caps.max_quandle_rows = 500;
  CHECK_FALSE(enumerate_quandle(p, caps).finished);

  QuandleEnumResult r = enumerate_quandle(augment_n(p, 2));
  REQUIRE(r.finished);
  REQUIRE(r.quandle.has_value());
  CHECK(r.quandle->size() == 4);
  int s = r.generator_images[0], t = r.generator_images[1];
  CHECK(r.quandle->op(s, t) != s);
  CHECK(orbits(*r.quandle).size() == 2);
}
