#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "qdl/errors.hpp"
#include "qdl/quandle.hpp"
#include "qdl/symplectic.hpp"

namespace qdl {

/**
 * A primitive vector class in Z_n^{2g} modulo negation, held as its
 * canonical representative: the lexicographically smaller of {v, -v} with
 * entries in [0, n).
 */
struct PrimClass {
  std::vector<int> v;

  bool operator==(const PrimClass& o) const { return v == o.v; }
  bool operator<(const PrimClass& o) const { return v < o.v; }
};

inline PrimClass canonical_prim_class(std::vector<int> v, int n) {
  if (n < 2) throw Error("modulus must be >= 2");
  for (int& x : v) {
    x %= n;
    if (x < 0) x += n;
  }
  if (!is_primitive_vector(v, n)) throw NonPrimitive("vector class is not primitive");
  std::vector<int> neg(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) neg[i] = (n - v[i]) % n;
  return PrimClass{std::min(v, neg)};
}

/** Reduction of an integral primitive vector mod n, canonicalized. */
inline PrimClass reduce_mod(const std::vector<long long>& v, int n) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g != 1) throw NonPrimitive("integral vector is not primitive");
  std::vector<int> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    r[i] = static_cast<int>(((v[i] % n) + n) % n);
  return canonical_prim_class(std::move(r), n);
}

inline std::string prim_class_label(const PrimClass& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c.v[i]);
  }
  s += ")";
  return s;
}

/** All canonical primitive classes of Z_n^{2g}, sorted lexicographically. */
inline std::vector<PrimClass> prim_classes(int g, int n, std::int64_t cap = 100000) {
  if (g < 1) throw Error("genus must be >= 1");
  const int dim = 2 * g;
  std::vector<PrimClass> out;
  std::vector<int> v(static_cast<std::size_t>(dim), 0);
  std::int64_t seen = 0;
  for (;;) {
    int k = 0;
    while (k < dim && ++v[static_cast<std::size_t>(k)] == n) {
      v[static_cast<std::size_t>(k)] = 0;
      ++k;
    }
    if (k == dim) break;
    if (!is_primitive_vector(v, n)) continue;
    PrimClass c = canonical_prim_class(v, n);
    if (c.v == v) {
      out.push_back(std::move(c));
      if (++seen > cap) throw CapExceeded(seen, cap);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/**
 * The quandle of primitive classes with x*y = x + form(x,y) y, computed on
 * canonical representatives. For any class representatives the result class
 * is independent of the choices, since negating y leaves the formula fixed
 * and negating x negates the result.
 */
inline FiniteQuandle p_quandle(int g, int n, std::int64_t cap = 100000) {
  std::vector<PrimClass> cls = prim_classes(g, n, cap);
  std::map<std::vector<int>, int> idx;
  for (std::size_t i = 0; i < cls.size(); ++i) idx.emplace(cls[i].v, static_cast<int>(i));
  const int m = static_cast<int>(cls.size());
  Table t(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const std::vector<int>& x = cls[static_cast<std::size_t>(i)].v;
      const std::vector<int>& y = cls[static_cast<std::size_t>(j)].v;
      int c = symplectic_form(x, y, n);
      std::vector<int> z(x.size());
      for (std::size_t k = 0; k < x.size(); ++k)
        z[k] = static_cast<int>((x[k] + static_cast<long long>(c) * y[k]) % n);
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          idx.at(canonical_prim_class(std::move(z), n).v);
    }
  std::vector<std::string> labels;
  for (const PrimClass& c : cls) labels.push_back(prim_class_label(c));
  return FiniteQuandle::checked(std::move(t), std::move(labels));
}

}  // namespace qdl
