#include <catch2/catch_amalgamated.hpp>

#include "qdl/quandle.hpp"
#include "qdl/words.hpp"

using namespace qdl;

namespace {

int trace(const std::vector<QLetter>& letters, int u, const FiniteQuandle& q,
          const std::vector<int>& assign) {
  for (const QLetter& l : letters) {
    int y = assign[static_cast<std::size_t>(l.gen)];
    u = l.sign > 0 ? q.op(u, y) : q.inv_op(u, y);
  }
  return u;
}

}  // namespace

TEST_CASE("normalize flattens arbitrary parenthesization", "[words]") {
  // (a * (b *- c)) * a
  auto e = QExpr::node(QExpr::node(QExpr::leaf(0), QExpr::node(QExpr::leaf(1), QExpr::leaf(2), -1), 1),
                       QExpr::leaf(0), 1);
  QWord w = normalize(*e);
  CHECK(w.base == 0);

  FiniteQuandle q = dihedral_quandle(9);
  std::vector<int> assign{2, 5, 7};
  // evaluate the tree directly
  int b = q.inv_op(assign[1], assign[2]);
  int direct = q.op(q.op(assign[0], b), assign[0]);
  CHECK(evaluate(w, q, assign) == direct);
}

TEST_CASE("normalization preserves evaluation on nested random trees", "[words]") {
  FiniteQuandle q = dihedral_quandle(7);
  std::vector<int> assign{1, 3, 6, 2};
  // right-heavy tree: a * (b * (c *- d))
  auto e = QExpr::node(
      QExpr::leaf(0),
      QExpr::node(QExpr::leaf(1), QExpr::node(QExpr::leaf(2), QExpr::leaf(3), -1), 1), 1);
  QWord w = normalize(*e);
  int cd = q.inv_op(assign[2], assign[3]);
  int bcd = q.op(assign[1], cd);
  CHECK(evaluate(w, q, assign) == q.op(assign[0], bcd));
}

TEST_CASE("operator words realize translation by the word's value", "[words]") {
  FiniteQuandle q = dihedral_quandle(9);
  std::vector<int> assign{4, 7, 1};
  QWord w{1, {QLetter{2, 1}, QLetter{0, -1}, QLetter{1, 1}}};
  int val = evaluate(w, q, assign);
  auto ow = operator_word(w, 1);
  auto ow_inv = operator_word(w, -1);
  for (int u = 0; u < q.size(); ++u) {
    CHECK(trace(ow, u, q, assign) == q.op(u, val));
    CHECK(trace(ow_inv, u, q, assign) == q.inv_op(u, val));
  }
}

TEST_CASE("tail free reduction cancels adjacent inverse pairs", "[words]") {
  std::vector<QLetter> tail{{0, 1}, {1, 1}, {1, -1}, {0, -1}, {2, 1}};
  free_reduce_tail(tail);
  REQUIRE(tail.size() == 1);
  CHECK(tail[0].gen == 2);

  std::vector<QLetter> same{{0, 1}, {0, 1}};  // same sign: no cancellation
  free_reduce_tail(same);
  CHECK(same.size() == 2);
}

TEST_CASE("group word helpers", "[words]") {
  GroupWord w{{0, 1}, {1, 1}, {1, -1}, {0, 1}};
  free_reduce(w);
  REQUIRE(w.size() == 2);
  CHECK(w[0].gen == 0);
  CHECK(w[1].gen == 0);

  GroupWord v{{0, 1}, {1, -1}};
  GroupWord vi = inverse_word(v);
  REQUIRE(vi.size() == 2);
  CHECK(vi[0].gen == 1);
  CHECK(vi[0].sign == 1);
  CHECK(vi[1].gen == 0);
  CHECK(vi[1].sign == -1);
  GroupWord prod = v;
  prod.insert(prod.end(), vi.begin(), vi.end());
  free_reduce(prod);
  CHECK(prod.empty());
}
