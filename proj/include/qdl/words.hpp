#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qdl/errors.hpp"
#include "qdl/quandle.hpp"

namespace qdl {

/** One right multiplication: *gen when sign=+1, *~gen when sign=-1. */
struct QLetter {
  int gen;
  std::int8_t sign;
  friend bool operator==(const QLetter& a, const QLetter& b) {
    return a.gen == b.gen && a.sign == b.sign;
  }
};

/**
 * A left-associated quandle word: base *^{e1} t1 *^{e2} t2 ... — the normal
 * form every expression is rewritten into. base and tail entries are
 * generator indices.
 */
struct QWord {
  int base = 0;
  std::vector<QLetter> tail;
  friend bool operator==(const QWord& a, const QWord& b) {
    return a.base == b.base && a.tail == b.tail;
  }
};

/** Adjacent inverse pairs *g *~g collapse; repeat to a fixed point. */
inline void free_reduce_tail(std::vector<QLetter>& tail) {
  std::vector<QLetter> out;
  for (const QLetter& l : tail) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  tail = std::move(out);
}

/**
 * Binary expression tree over generators; allows arbitrary parenthesization
 * before rewriting into the left-associated normal form.
 */
struct QExpr {
  // leaf when right == nullptr
  int gen = -1;
  std::int8_t sign = 1;  // sign of the operation joining left and right
  std::shared_ptr<QExpr> left, right;

  static std::shared_ptr<QExpr> leaf(int g) {
    auto e = std::make_shared<QExpr>();
    e->gen = g;
    return e;
  }
  static std::shared_ptr<QExpr> node(std::shared_ptr<QExpr> l, std::shared_ptr<QExpr> r,
                                     std::int8_t sign) {
    auto e = std::make_shared<QExpr>();
    e->left = std::move(l);
    e->right = std::move(r);
    e->sign = sign;
    return e;
  }
  bool is_leaf() const { return right == nullptr; }
};

/**
 * The operator word of u: the letter sequence tracing x -> x * u (or x *~ u
 * when sign=-1) through generator translations only. For u = b ^ T this is
 * rev(T)^-1, then b with the given sign, then T — the translation identity
 * S_{u*v} = S_v^-1 S_u S_v unrolled.
 */
inline std::vector<QLetter> operator_word(const QWord& u, std::int8_t sign) {
  std::vector<QLetter> out;
  out.reserve(2 * u.tail.size() + 1);
  for (auto it = u.tail.rbegin(); it != u.tail.rend(); ++it)
    out.push_back(QLetter{it->gen, static_cast<std::int8_t>(-it->sign)});
  out.push_back(QLetter{u.base, sign});
  for (const QLetter& l : u.tail) out.push_back(l);
  free_reduce_tail(out);
  return out;
}

/** Rewrite an expression tree into the left-associated normal form. */
inline QWord normalize(const QExpr& e) {
  if (e.is_leaf()) {
    if (e.gen < 0) throw Error("malformed expression");
    return QWord{e.gen, {}};
  }
  QWord l = normalize(*e.left);
  QWord r = normalize(*e.right);
  std::vector<QLetter> ops = operator_word(r, e.sign);
  l.tail.insert(l.tail.end(), ops.begin(), ops.end());
  free_reduce_tail(l.tail);
  return l;
}

/** Evaluate a normal-form word in a quandle under a generator assignment. */
inline int evaluate(const QWord& w, const FiniteQuandle& q, const std::vector<int>& assign) {
  if (w.base < 0 || static_cast<std::size_t>(w.base) >= assign.size())
    throw UnknownGenerator("#" + std::to_string(w.base));
  int val = assign[static_cast<std::size_t>(w.base)];
  for (const QLetter& l : w.tail) {
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= assign.size())
      throw UnknownGenerator("#" + std::to_string(l.gen));
    int g = assign[static_cast<std::size_t>(l.gen)];
    val = (l.sign > 0) ? q.op(val, g) : q.inv_op(val, g);
  }
  return val;
}

/** A group letter g^{±1}. */
struct GLetter {
  int gen;
  std::int8_t sign;
  friend bool operator==(const GLetter& a, const GLetter& b) {
    return a.gen == b.gen && a.sign == b.sign;
  }
};

/** A group word; as a relator it is read as = identity. */
using GroupWord = std::vector<GLetter>;

inline void free_reduce(GroupWord& w) {
  GroupWord out;
  for (const GLetter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  w = std::move(out);
}

inline GroupWord inverse_word(const GroupWord& w) {
  GroupWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(GLetter{it->gen, static_cast<std::int8_t>(-it->sign)});
  return out;
}

}  // namespace qdl
