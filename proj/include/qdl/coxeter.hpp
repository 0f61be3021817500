#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qdl/errors.hpp"
#include "qdl/group.hpp"
#include "qdl/presentation.hpp"
#include "qdl/quandle.hpp"

namespace qdl {

/**
 * Coxeter matrix: symmetric, m[i][i] = 1, off-diagonal entries >= 2, with 0
 * standing for infinity (no relation between the pair).
 */
struct CoxeterMatrix {
  std::vector<std::vector<int>> m;

  int rank() const { return static_cast<int>(m.size()); }

  bool operator==(const CoxeterMatrix& o) const { return m == o.m; }
};

inline void validate_coxeter_matrix(const CoxeterMatrix& cm) {
  const int k = cm.rank();
  if (k == 0) throw Error("coxeter matrix: empty");
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(cm.m[static_cast<std::size_t>(i)].size()) != k)
      throw Error("coxeter matrix: not square");
    for (int j = 0; j < k; ++j) {
      int v = cm.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (i == j && v != 1) throw Error("coxeter matrix: diagonal must be 1");
      if (i != j && v != 0 && v < 2) throw Error("coxeter matrix: off-diagonal must be 0 or >= 2");
      if (v != cm.m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
        throw Error("coxeter matrix: not symmetric");
    }
  }
}

/** Path diagram with all consecutive labels 3; W is the symmetric group on n+1 letters. */
inline CoxeterMatrix coxeter_A(int n) {
  if (n < 1) throw Error("type A rank must be >= 1");
  CoxeterMatrix cm;
  cm.m.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
  for (int i = 0; i < n; ++i) cm.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  for (int i = 0; i + 1 < n; ++i) {
    cm.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = 3;
    cm.m[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = 3;
  }
  return cm;
}

/** Path diagram ending in a label-4 edge; W is the signed permutation group. */
inline CoxeterMatrix coxeter_B(int n) {
  if (n < 2) throw Error("type B rank must be >= 2");
  CoxeterMatrix cm = coxeter_A(n);
  cm.m[static_cast<std::size_t>(n - 2)][static_cast<std::size_t>(n - 1)] = 4;
  cm.m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 2)] = 4;
  return cm;
}

/** Rank-2 diagram with label m; W is the dihedral group of order 2m. */
inline CoxeterMatrix coxeter_I2(int m) {
  if (m < 3) throw Error("type I_2(m) requires m >= 3");
  CoxeterMatrix cm;
  cm.m = {{1, m}, {m, 1}};
  return cm;
}

namespace detail {

inline GroupWord alternating_word(int a, int b, int len) {
  GroupWord w;
  for (int t = 0; t < len; ++t) w.push_back(GLetter{t % 2 == 0 ? a : b, 1});
  return w;
}

inline std::vector<std::string> gen_names(int k, const std::string& prefix) {
  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

}  // namespace detail

/**
 * Artin group of the matrix: one relator (s_i s_j ...)_{m} ((s_j s_i ...)_{m})^{-1}
 * per finite off-diagonal label m, each side alternating with m letters.
 */
inline GroupPresentation artin_presentation(const CoxeterMatrix& cm,
                                            const std::string& prefix = "s") {
  validate_coxeter_matrix(cm);
  GroupPresentation p;
  p.gens = detail::gen_names(cm.rank(), prefix);
  for (int i = 0; i < cm.rank(); ++i)
    for (int j = i + 1; j < cm.rank(); ++j) {
      int m = cm.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (m == 0) continue;
      GroupWord w = detail::alternating_word(i, j, m);
      GroupWord rhs = detail::alternating_word(j, i, m);
      GroupWord rel = w;
      GroupWord ri = inverse_word(rhs);
      rel.insert(rel.end(), ri.begin(), ri.end());
      free_reduce(rel);
      p.relators.push_back(std::move(rel));
    }
  return p;
}

/** Coxeter group of the matrix: the Artin relators plus s_i^2 for every generator. */
inline GroupPresentation coxeter_presentation(const CoxeterMatrix& cm,
                                              const std::string& prefix = "s") {
  GroupPresentation p = artin_presentation(cm, prefix);
  for (int i = 0; i < cm.rank(); ++i)
    p.relators.push_back(GroupWord{GLetter{i, 1}, GLetter{i, 1}});
  return p;
}

/** Braid group on n strands = Artin group of type A_{n-1}. */
inline GroupPresentation braid_presentation(int n) {
  if (n < 2) throw Error("braid group needs at least 2 strands");
  return artin_presentation(coxeter_A(n - 1));
}

/**
 * Quandle presentation of the union of conjugacy classes of the standard
 * generators inside the Artin group of the matrix. Relations: x * r = x for
 * every generator x and braid relator r (relators act trivially by
 * conjugation), plus the conjugation facts carried by the alternating word
 * of length m on each finite edge (i, j): for odd m it conjugates s_i to s_j
 * (and symmetrically), for even m it is central in the edge subgroup and
 * fixes both. The stabilizer relations alone present a strictly larger
 * quandle in which distinct generators are never identified.
 */
inline QuandlePresentation artin_quandle_presentation(const CoxeterMatrix& cm,
                                                      const std::string& prefix = "s") {
  QuandlePresentation p = dehn_presentation_from_group(artin_presentation(cm, prefix));
  auto conj_tail = [](int a, int b, int m) {
    // tail of x * (alternating word of length m starting at a); rightmost letter acts first
    std::vector<QLetter> tail;
    for (int t = m - 1; t >= 0; --t) tail.push_back(QLetter{t % 2 == 0 ? a : b, 1});
    return tail;
  };
  auto add = [&p](QuandleRelation rel) {
    rel = simplify_relation(std::move(rel));
    if (!(rel.lhs == rel.rhs)) p.rels.push_back(std::move(rel));
  };
  for (int i = 0; i < cm.rank(); ++i)
    for (int j = i + 1; j < cm.rank(); ++j) {
      int m = cm.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (m == 0) continue;
      if (m % 2 == 1) {
        add(QuandleRelation{QWord{i, conj_tail(i, j, m)}, QWord{j, {}}});
        add(QuandleRelation{QWord{j, conj_tail(j, i, m)}, QWord{i, {}}});
      } else {
        add(QuandleRelation{QWord{i, conj_tail(i, j, m)}, QWord{i, {}}});
        add(QuandleRelation{QWord{j, conj_tail(i, j, m)}, QWord{j, {}}});
      }
    }
  return p;
}

/**
 * Quandle presentation of the union of conjugacy classes of the simple
 * reflections inside the Coxeter group of the matrix: the Artin quandle
 * relations together with involutivity, x *^2 y = x per generator pair.
 */
inline QuandlePresentation coxeter_quandle_presentation(const CoxeterMatrix& cm,
                                                        const std::string& prefix = "s") {
  return augment_n(artin_quandle_presentation(cm, prefix), 2);
}

struct CoxeterRealization {
  PermGroup group;             // the Coxeter group as permutations
  std::vector<Perm> simple;    // simple reflections, matching matrix row order
};

/**
 * Permutation realization of the Coxeter group for recognized finite types:
 * A_n as the symmetric group on n+1 letters with adjacent transpositions,
 * B_n as signed permutations of n coordinates (2n points), I_2(m) as the
 * dihedral group of order 2m with two reflections. Other matrices raise
 * UnsupportedType. The enumerated order is checked against the classical
 * formula for the type.
 */
inline CoxeterRealization realize_coxeter(const CoxeterMatrix& cm,
                                          std::int64_t cap = 1000000) {
  validate_coxeter_matrix(cm);
  const int k = cm.rank();
  auto entry = [&](int i, int j) {
    return cm.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  };
  auto is_path_of_3s_until = [&](int last_label) {
    // path diagram: consecutive labels 3 except the final edge carries last_label
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        int want = (j == i + 1) ? ((j == k - 1) ? last_label : 3) : 2;
        if (entry(i, j) != want) return false;
      }
    return true;
  };

  CoxeterRealization r;
  std::int64_t expected = 0;
  if (k == 2 && entry(0, 1) >= 3) {
    int m = entry(0, 1);
    r.group = dihedral_group(m, cap);
    expected = 2LL * m;
  } else if (k == 1 || is_path_of_3s_until(3)) {
    r.group = symmetric_group(k + 1, cap);
    expected = 1;
    for (int i = 2; i <= k + 1; ++i) expected *= i;
  } else if (k >= 2 && is_path_of_3s_until(4)) {
    r.group = signed_permutation_group(k, cap);
    expected = 1;
    for (int i = 1; i <= k; ++i) expected *= 2LL * i;
  } else {
    throw UnsupportedType("no permutation realization for this coxeter matrix");
  }
  r.simple = r.group.gens;
  if (static_cast<int>(r.simple.size()) != k || r.group.order() != expected)
    throw Error("coxeter realization does not match the expected group order");
  return r;
}

/**
 * Coxeter quandle: the Dehn quandle of the realized Coxeter group with
 * respect to its simple reflections, i.e. the union of their conjugacy
 * classes under conjugation.
 */
inline FiniteQuandle coxeter_quandle(const CoxeterMatrix& cm, std::int64_t cap = 100000) {
  CoxeterRealization r = realize_coxeter(cm);
  std::vector<int> subset;
  for (const Perm& s : r.simple) subset.push_back(r.group.id_of(s));
  return dehn_quandle(r.group, subset, cap);
}

}  // namespace qdl
