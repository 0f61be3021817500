#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "qdl/errors.hpp"
#include "qdl/perm.hpp"
#include "qdl/quandle.hpp"

namespace qdl {

/**
 * A finite permutation group, fully enumerated. Elements are indexed densely;
 * element 0 is the identity. Products use the library-wide left-to-right
 * composition convention (see perm.hpp).
 */
struct PermGroup {
  int degree = 0;
  std::vector<Perm> gens;
  std::vector<Perm> elements;
  std::unordered_map<Perm, int, PermHash> index;

  int order() const { return static_cast<int>(elements.size()); }

  int id_of(const Perm& p) const {
    auto it = index.find(p);
    if (it == index.end()) throw Error("permutation not in group");
    return it->second;
  }

  int mul(int a, int b) const {
    return id_of(compose(elements[static_cast<std::size_t>(a)],
                         elements[static_cast<std::size_t>(b)]));
  }

  int inv(int a) const { return id_of(inverse(elements[static_cast<std::size_t>(a)])); }
};

/** Breadth-first closure of the generators; throws CapExceeded past `cap`. */
inline PermGroup enumerate_perm_group(int degree, std::vector<Perm> gens,
                                      std::int64_t cap = 1000000) {
  PermGroup g;
  g.degree = degree;
  g.gens = std::move(gens);
  for (const Perm& p : g.gens)
    if (p.degree() != degree || !is_permutation_of_range(p.img))
      throw Error("generator is not a permutation of the stated degree");
  g.elements.push_back(Perm::identity(degree));
  g.index.emplace(g.elements[0], 0);
  for (std::size_t next = 0; next < g.elements.size(); ++next) {
    Perm cur = g.elements[next];
    for (const Perm& s : g.gens) {
      Perm prod = compose(cur, s);
      if (g.index.emplace(prod, static_cast<int>(g.elements.size())).second) {
        g.elements.push_back(std::move(prod));
        if (static_cast<std::int64_t>(g.elements.size()) > cap)
          throw CapExceeded(static_cast<std::int64_t>(g.elements.size()), cap);
      }
    }
  }
  return g;
}

/** Symmetric group on n points, generated by adjacent transpositions. n <= 9 by default cap. */
inline PermGroup symmetric_group(int n, std::int64_t cap = 1000000) {
  if (n < 1) throw Error("symmetric_group: n must be >= 1");
  std::vector<Perm> gens;
  for (int i = 0; i + 1 < n; ++i) {
    Perm p = Perm::identity(n);
    std::swap(p.img[static_cast<std::size_t>(i)], p.img[static_cast<std::size_t>(i + 1)]);
    gens.push_back(std::move(p));
  }
  return enumerate_perm_group(n, std::move(gens), cap);
}

/**
 * Dihedral group of order 2m acting on m points, generated by the two
 * standard reflections s (i -> -i) and rs (i -> 1-i). m >= 2.
 */
inline PermGroup dihedral_group(int m, std::int64_t cap = 1000000) {
  if (m < 2) throw Error("dihedral_group: m must be >= 2");
  Perm s = Perm::identity(m), t = Perm::identity(m);
  for (int i = 0; i < m; ++i) {
    s.img[static_cast<std::size_t>(i)] = ((-i) % m + m) % m;
    t.img[static_cast<std::size_t>(i)] = ((1 - i) % m + m) % m;
  }
  return enumerate_perm_group(m, {s, t}, cap);
}

/**
 * The group of signed permutations of n coordinates, realized on 2n points:
 * point i is the positive copy of coordinate i and point n+i the negative
 * one. Generated by the n-1 adjacent coordinate swaps and the sign flip on
 * the last coordinate. Order 2^n n!.
 */
inline PermGroup signed_permutation_group(int n, std::int64_t cap = 1000000) {
  if (n < 1) throw Error("signed_permutation_group: n must be >= 1");
  std::vector<Perm> gens;
  for (int i = 0; i + 1 < n; ++i) {
    Perm p = Perm::identity(2 * n);
    std::swap(p.img[static_cast<std::size_t>(i)], p.img[static_cast<std::size_t>(i + 1)]);
    std::swap(p.img[static_cast<std::size_t>(n + i)], p.img[static_cast<std::size_t>(n + i + 1)]);
    gens.push_back(std::move(p));
  }
  Perm f = Perm::identity(2 * n);
  std::swap(f.img[static_cast<std::size_t>(n - 1)], f.img[static_cast<std::size_t>(2 * n - 1)]);
  gens.push_back(std::move(f));
  return enumerate_perm_group(2 * n, std::move(gens), cap);
}

/** Conjugacy class of element a, as sorted element indices. */
inline std::vector<int> conjugacy_class(const PermGroup& g, int a) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> out, stack{a};
  seen[static_cast<std::size_t>(a)] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (std::size_t i = 0; i < g.gens.size(); ++i) {
      const Perm& s = g.gens[i];
      // x -> s x s^-1 keeps us inside the class; generators suffice for closure
      Perm c = compose(compose(s, g.elements[static_cast<std::size_t>(x)]), inverse(s));
      int y = g.id_of(c);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        stack.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/** Centralizer of element a, as sorted element indices. */
inline std::vector<int> centralizer(const PermGroup& g, int a) {
  std::vector<int> out;
  const Perm& pa = g.elements[static_cast<std::size_t>(a)];
  for (int x = 0; x < g.order(); ++x) {
    const Perm& px = g.elements[static_cast<std::size_t>(x)];
    if (compose(px, pa) == compose(pa, px)) out.push_back(x);
  }
  return out;
}

namespace detail {
inline FiniteQuandle conj_table(const PermGroup& g, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  std::unordered_map<int, int> pos;
  for (std::size_t i = 0; i < elems.size(); ++i) pos.emplace(elems[static_cast<std::size_t>(i)], static_cast<int>(i));
  const int n = static_cast<int>(elems.size());
  Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    labels.push_back(cycle_string(g.elements[static_cast<std::size_t>(elems[static_cast<std::size_t>(i)])]));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Perm& x = g.elements[static_cast<std::size_t>(elems[static_cast<std::size_t>(i)])];
      const Perm& y = g.elements[static_cast<std::size_t>(elems[static_cast<std::size_t>(j)])];
      Perm xy = compose(compose(y, x), inverse(y));  // x*y = y x y^-1
      auto it = pos.find(g.id_of(xy));
      if (it == pos.end()) throw Error("conjugation left the element set");
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = it->second;
    }
  return FiniteQuandle::unchecked(std::move(t), std::move(labels));
}
}  // namespace detail

/** Conjugation quandle of the whole group: x*y = y x y^-1. */
inline FiniteQuandle conjugation_quandle(const PermGroup& g, std::int64_t cap = 100000) {
  if (g.order() > cap)
    throw GroupTooLarge("conjugation quandle would have " + std::to_string(g.order()) +
                        " elements, cap " + std::to_string(cap));
  std::vector<int> elems(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) elems[static_cast<std::size_t>(i)] = i;
  return detail::conj_table(g, std::move(elems));
}

/**
 * Dehn quandle of the group with respect to a subset: the union of the
 * conjugacy classes of the subset's elements, under x*y = y x y^-1.
 */
inline FiniteQuandle dehn_quandle(const PermGroup& g, const std::vector<int>& subset,
                                  std::int64_t cap = 100000) {
  if (subset.empty()) throw Error("dehn_quandle: subset must be non-empty");
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> elems;
  for (int a : subset) {
    if (a < 0 || a >= g.order()) throw Error("dehn_quandle: element index out of range");
    for (int x : conjugacy_class(g, a)) {
      if (!seen[static_cast<std::size_t>(x)]) {
        seen[static_cast<std::size_t>(x)] = 1;
        elems.push_back(x);
        if (static_cast<std::int64_t>(elems.size()) > cap)
          throw ClosureTooLarge("conjugacy closure exceeded cap " + std::to_string(cap));
      }
    }
  }
  return detail::conj_table(g, std::move(elems));
}

/** Indices of all transpositions (2-cycles) in a permutation group. */
inline std::vector<int> transposition_elements(const PermGroup& g) {
  std::vector<int> out;
  for (int i = 0; i < g.order(); ++i) {
    auto ct = cycle_type(g.elements[static_cast<std::size_t>(i)]);
    int moved = 0;
    for (int len : ct) moved += (len > 1) ? len : 0;
    if (moved == 2) out.push_back(i);
  }
  return out;
}

/** Indices of the group's declared generators. */
inline std::vector<int> generator_elements(const PermGroup& g) {
  std::vector<int> out;
  for (const Perm& p : g.gens) out.push_back(g.id_of(p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace qdl
