#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "qdl/errors.hpp"
#include "qdl/quandle.hpp"
#include "qdl/words.hpp"

namespace qdl {

struct QuandleRelation {
  QWord lhs, rhs;
  friend bool operator==(const QuandleRelation& a, const QuandleRelation& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

struct QuandlePresentation {
  std::vector<std::string> gens;
  std::vector<QuandleRelation> rels;
  friend bool operator==(const QuandlePresentation& a, const QuandlePresentation& b) {
    return a.gens == b.gens && a.rels == b.rels;
  }
};

struct GroupPresentation {
  std::vector<std::string> gens;
  std::vector<GroupWord> relators;  // each read as = identity
  friend bool operator==(const GroupPresentation& a, const GroupPresentation& b) {
    return a.gens == b.gens && a.relators == b.relators;
  }
};

/**
 * Simplify a relation without changing the presented quandle:
 *  - free-reduce both tails,
 *  - absorb leading tail letters equal to the base (x *^e x = x),
 *  - cancel common trailing letters of the two sides (right translations
 *    are bijective).
 */
inline QuandleRelation simplify_relation(QuandleRelation r) {
  free_reduce_tail(r.lhs.tail);
  free_reduce_tail(r.rhs.tail);
  for (QWord* w : {&r.lhs, &r.rhs}) {
    std::size_t k = 0;
    while (k < w->tail.size() && w->tail[k].gen == w->base) ++k;
    if (k > 0) w->tail.erase(w->tail.begin(), w->tail.begin() + static_cast<std::ptrdiff_t>(k));
  }
  while (!r.lhs.tail.empty() && !r.rhs.tail.empty() && r.lhs.tail.back() == r.rhs.tail.back()) {
    r.lhs.tail.pop_back();
    r.rhs.tail.pop_back();
  }
  return r;
}

/**
 * Append the relations x *^n y = x for every ordered pair of distinct
 * generators; the diagonal pairs are consequences of idempotency.
 */
inline QuandlePresentation augment_n(QuandlePresentation p, int n) {
  if (n < 1) throw Error("augment_n: n must be >= 1");
  const int k = static_cast<int>(p.gens.size());
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      if (x == y) continue;
      QWord lhs{x, {}};
      for (int i = 0; i < n; ++i) lhs.tail.push_back(QLetter{y, 1});
      p.rels.push_back(QuandleRelation{std::move(lhs), QWord{x, {}}});
    }
  return p;
}

/**
 * Enveloping group presentation: one group generator per quandle generator;
 * each quandle relation w1 = w2 contributes the relator w1^ (w2^)^-1, where
 * the hat of b *^{e1} t1 ... *^{ek} tk is the conjugate
 * (tk^{ek} ... t1^{e1}) b (tk^{ek} ... t1^{e1})^{-1}. When n is given, the
 * relators x^n y x^{-n} y^{-1} are appended for all ordered pairs of distinct
 * generators.
 */
inline GroupPresentation env_presentation(const QuandlePresentation& p,
                                          std::optional<int> n = std::nullopt) {
  GroupPresentation g;
  g.gens = p.gens;
  auto hat = [](const QWord& w) {
    GroupWord out;
    for (auto it = w.tail.rbegin(); it != w.tail.rend(); ++it)
      out.push_back(GLetter{it->gen, it->sign});
    out.push_back(GLetter{w.base, 1});
    for (const QLetter& l : w.tail)
      out.push_back(GLetter{l.gen, static_cast<std::int8_t>(-l.sign)});
    return out;
  };
  for (const QuandleRelation& r : p.rels) {
    GroupWord w = hat(r.lhs);
    GroupWord rhs_inv = inverse_word(hat(r.rhs));
    w.insert(w.end(), rhs_inv.begin(), rhs_inv.end());
    free_reduce(w);
    if (!w.empty()) g.relators.push_back(std::move(w));
  }
  if (n) {
    const int k = static_cast<int>(p.gens.size());
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y) {
        if (x == y) continue;
        GroupWord w;
        for (int i = 0; i < *n; ++i) w.push_back(GLetter{x, 1});
        w.push_back(GLetter{y, 1});
        for (int i = 0; i < *n; ++i) w.push_back(GLetter{x, -1});
        w.push_back(GLetter{y, -1});
        g.relators.push_back(std::move(w));
      }
  }
  return g;
}

/**
 * Presentation of the finite enveloping quotient of a finite quandle: one
 * generator per element, conjugation relators from the whole table, and a
 * power relator per element with exponent the order of its translation.
 * The presented group is finite whenever q is.
 */
inline GroupPresentation fq_presentation(const FiniteQuandle& q) {
  GroupPresentation g;
  for (int x = 0; x < q.size(); ++x) g.gens.push_back("e" + std::to_string(x));
  for (int x = 0; x < q.size(); ++x)
    for (int y = 0; y < q.size(); ++y) {
      // e_y e_x e_y^-1 e_{x*y}^-1
      GroupWord w{GLetter{y, 1}, GLetter{x, 1}, GLetter{y, -1}, GLetter{q.op(x, y), -1}};
      free_reduce(w);
      if (!w.empty()) g.relators.push_back(std::move(w));
    }
  std::vector<std::int64_t> nu = nu_profile(q);
  for (int x = 0; x < q.size(); ++x) {
    GroupWord w;
    for (std::int64_t i = 0; i < nu[static_cast<std::size_t>(x)]; ++i)
      w.push_back(GLetter{x, 1});
    g.relators.push_back(std::move(w));
  }
  return g;
}

/**
 * Dehn-style quandle presentation associated with a group presentation: the
 * same generators, with one relation x * r = x per declared generator x and
 * relator r, where conjugation by a product expands right-to-left:
 * x * (g1^{e1} ... gk^{ek}) = x *^{ek} gk ... *^{e1} g1.
 */
inline QuandlePresentation dehn_presentation_from_group(const GroupPresentation& g) {
  QuandlePresentation p;
  p.gens = g.gens;
  for (const GroupWord& r : g.relators) {
    for (int x = 0; x < static_cast<int>(g.gens.size()); ++x) {
      QWord lhs{x, {}};
      for (auto it = r.rbegin(); it != r.rend(); ++it)
        lhs.tail.push_back(QLetter{it->gen, it->sign});
      QuandleRelation rel{std::move(lhs), QWord{x, {}}};
      rel = simplify_relation(std::move(rel));
      if (rel.lhs == rel.rhs) continue;
      p.rels.push_back(std::move(rel));
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// printing (the output parses back through the DSL)

inline std::string print_qword(const QWord& w, const std::vector<std::string>& gens) {
  std::string out = gens.at(static_cast<std::size_t>(w.base));
  for (const QLetter& l : w.tail) {
    out += (l.sign > 0) ? " * " : " *- ";
    out += gens.at(static_cast<std::size_t>(l.gen));
  }
  return out;
}

inline std::string print_presentation(const QuandlePresentation& p) {
  std::string out = "quandle< ";
  for (std::size_t i = 0; i < p.gens.size(); ++i) {
    if (i) out += ", ";
    out += p.gens[i];
  }
  out += " |";
  for (std::size_t i = 0; i < p.rels.size(); ++i) {
    out += (i ? " ; " : " ");
    out += print_qword(p.rels[i].lhs, p.gens) + " = " + print_qword(p.rels[i].rhs, p.gens);
  }
  out += " >";
  return out;
}

inline std::string print_group_word(const GroupWord& w, const std::vector<std::string>& gens) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += ' ';
    out += gens.at(static_cast<std::size_t>(w[i].gen));
    const std::int64_t e = static_cast<std::int64_t>(j - i) * w[i].sign;
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

inline std::string print_presentation(const GroupPresentation& g) {
  std::string out = "group< ";
  for (std::size_t i = 0; i < g.gens.size(); ++i) {
    if (i) out += ", ";
    out += g.gens[i];
  }
  out += " |";
  for (std::size_t i = 0; i < g.relators.size(); ++i) {
    out += (i ? " ; " : " ");
    out += print_group_word(g.relators[i], g.gens);
  }
  out += " >";
  return out;
}

}  // namespace qdl
