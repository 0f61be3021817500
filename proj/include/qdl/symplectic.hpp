#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "qdl/errors.hpp"
#include "qdl/quandle.hpp"

namespace qdl {

/**
 * Square matrix over Z_p of dimension 2g <= 6, used for the symplectic
 * group machinery. Basis convention throughout: a_1, b_1, a_2, b_2, ...,
 * so coordinate 2i is the i-th a-class and 2i+1 the i-th b-class
 * (0-indexed), and the form pairs them as form(a_i, b_i) = 1.
 */
struct ZpMat {
  static constexpr int kMaxDim = 6;

  int dim = 0;
  int p = 0;
  std::array<std::int8_t, kMaxDim * kMaxDim> e{};

  static ZpMat zero(int dim, int p) {
    if (dim < 1 || dim > kMaxDim) throw Error("matrix dimension out of range");
    if (p < 2) throw Error("modulus must be >= 2");
    ZpMat m;
    m.dim = dim;
    m.p = p;
    return m;
  }

  static ZpMat identity(int dim, int p) {
    ZpMat m = zero(dim, p);
    for (int i = 0; i < dim; ++i) m.set(i, i, 1);
    return m;
  }

  int at(int i, int j) const { return e[static_cast<std::size_t>(i * dim + j)]; }
  void set(int i, int j, int v) {
    v %= p;
    if (v < 0) v += p;
    e[static_cast<std::size_t>(i * dim + j)] = static_cast<std::int8_t>(v);
  }

  bool operator==(const ZpMat& o) const { return dim == o.dim && p == o.p && e == o.e; }
  bool operator!=(const ZpMat& o) const { return !(*this == o); }
};

struct ZpMatHash {
  std::size_t operator()(const ZpMat& m) const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(static_cast<std::size_t>(m.dim));
    for (int i = 0; i < m.dim * m.dim; ++i) mix(static_cast<std::size_t>(m.e[static_cast<std::size_t>(i)]));
    return h;
  }
};

inline ZpMat mat_mul(const ZpMat& a, const ZpMat& b) {
  ZpMat c = ZpMat::zero(a.dim, a.p);
  for (int i = 0; i < a.dim; ++i)
    for (int k = 0; k < a.dim; ++k) {
      int av = a.at(i, k);
      if (av == 0) continue;
      for (int j = 0; j < a.dim; ++j) c.set(i, j, c.at(i, j) + av * b.at(k, j));
    }
  return c;
}

inline ZpMat mat_neg(const ZpMat& a) {
  ZpMat c = ZpMat::zero(a.dim, a.p);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) c.set(i, j, -a.at(i, j));
  return c;
}

inline std::vector<int> mat_apply(const ZpMat& a, const std::vector<int>& v) {
  std::vector<int> out(static_cast<std::size_t>(a.dim), 0);
  for (int i = 0; i < a.dim; ++i) {
    int s = 0;
    for (int j = 0; j < a.dim; ++j) s += a.at(i, j) * v[static_cast<std::size_t>(j)];
    s %= a.p;
    if (s < 0) s += a.p;
    out[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

/**
 * The alternating intersection form: sum over handles of
 * x_{2i} y_{2i+1} - x_{2i+1} y_{2i}, reduced into [0, n).
 */
inline int symplectic_form(const std::vector<int>& x, const std::vector<int>& y, int n) {
  if (x.size() != y.size() || x.size() % 2 != 0) throw Error("form: vectors must have even equal length");
  long long s = 0;
  for (std::size_t i = 0; i + 1 < x.size(); i += 2)
    s += static_cast<long long>(x[i]) * y[i + 1] - static_cast<long long>(x[i + 1]) * y[i];
  long long r = s % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

inline ZpMat form_matrix(int dim, int p) {
  ZpMat j = ZpMat::zero(dim, p);
  for (int i = 0; i + 1 < dim; i += 2) {
    j.set(i, i + 1, 1);
    j.set(i + 1, i, -1);
  }
  return j;
}

inline ZpMat mat_transpose(const ZpMat& a) {
  ZpMat c = ZpMat::zero(a.dim, a.p);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) c.set(j, i, a.at(i, j));
  return c;
}

/** True when AᵀJA = J for the fixed block form. */
inline bool preserves_form(const ZpMat& a) {
  ZpMat j = form_matrix(a.dim, a.p);
  return mat_mul(mat_mul(mat_transpose(a), j), a) == j;
}

inline bool is_primitive_vector(const std::vector<int>& v, int n) {
  long long g = n;
  for (int x : v) g = std::gcd(g, static_cast<long long>(((x % n) + n) % n));
  return g == 1;
}

/**
 * The transvection fixing v: x -> x + form(x, v) v. Calibrated so that the
 * basis vector e1 yields I - E_{1,2}.
 */
inline ZpMat transvection(const std::vector<int>& v, int p, int direction = 1) {
  const int dim = static_cast<int>(v.size());
  if (!is_primitive_vector(v, p)) throw NonPrimitive("transvection vector is not primitive");
  ZpMat m = ZpMat::identity(dim, p);
  std::vector<int> ej(static_cast<std::size_t>(dim), 0);
  for (int j = 0; j < dim; ++j) {
    std::fill(ej.begin(), ej.end(), 0);
    ej[static_cast<std::size_t>(j)] = 1;
    int c = symplectic_form(ej, v, p) * direction;
    for (int i = 0; i < dim; ++i)
      m.set(i, j, m.at(i, j) + c * v[static_cast<std::size_t>(i)]);
  }
  return m;
}

inline ZpMat transvection_inverse(const std::vector<int>& v, int p) {
  return transvection(v, p, -1);
}

namespace detail {

inline std::vector<int> basis_vec(int dim, int idx0) {
  std::vector<int> v(static_cast<std::size_t>(dim), 0);
  v[static_cast<std::size_t>(idx0)] = 1;
  return v;
}

// homology classes of the standard curves, 0-indexed coordinates:
// a_i -> e_{2i-1}, b_i -> e_{2i}, c_i -> e_{2i-1} - e_{2i+1} (around handles
// i, i+1), d_i -> e_1 - e_{2i+1} (around handles 1, i+1; d_1 = c_1).
// The relative minus signs are forced by requiring the composite
// T_{d_i} T_{a_1}^{-1} T_{a_{i+1}}^{-1} to equal I + E_{2i+1,2} + E_{1,2i+2};
// the overall sign of each class is immaterial since T_v = T_{-v}.
inline std::vector<int> class_a(int g, int i) { return basis_vec(2 * g, 2 * (i - 1)); }
inline std::vector<int> class_b(int g, int i) { return basis_vec(2 * g, 2 * i - 1); }
inline std::vector<int> class_c(int g, int i, int p) {
  std::vector<int> v(static_cast<std::size_t>(2 * g), 0);
  v[static_cast<std::size_t>(2 * (i - 1))] = 1;
  v[static_cast<std::size_t>(2 * i)] = p - 1;
  return v;
}
inline std::vector<int> class_d(int g, int i, int p) {
  std::vector<int> v(static_cast<std::size_t>(2 * g), 0);
  v[0] = 1;
  v[static_cast<std::size_t>(2 * i)] = p - 1;
  return v;
}

}  // namespace detail

/**
 * Matrix images of the standard twist generators for genus g over Z_p,
 * keyed "a1".."ag", "b1".."bg", "c1".."c{g-1}", "d1".."d{g-1}".
 */
inline std::map<std::string, ZpMat> twist_images(int g, int p) {
  if (g < 1) throw Error("genus must be >= 1");
  if (2 * g > ZpMat::kMaxDim) throw CapExceeded(2 * g, ZpMat::kMaxDim);
  std::map<std::string, ZpMat> out;
  for (int i = 1; i <= g; ++i) {
    out["a" + std::to_string(i)] = transvection(detail::class_a(g, i), p);
    out["b" + std::to_string(i)] = transvection(detail::class_b(g, i), p);
  }
  for (int i = 1; i + 1 <= g; ++i) {
    out["c" + std::to_string(i)] = transvection(detail::class_c(g, i, p), p);
    out["d" + std::to_string(i)] = transvection(detail::class_d(g, i, p), p);
  }
  return out;
}

/** The composite T_{d_i} T_{a_1}^{-1} T_{a_{i+1}}^{-1} (left factor acts last). */
inline ZpMat mixing_matrix_m(int g, int p, int i) {
  if (i < 1 || i >= g) throw Error("mixing index out of range");
  ZpMat td = transvection(detail::class_d(g, i, p), p);
  ZpMat ta1 = transvection_inverse(detail::class_a(g, 1), p);
  ZpMat tai = transvection_inverse(detail::class_a(g, i + 1), p);
  return mat_mul(mat_mul(td, ta1), tai);
}

inline ZpMat mixing_matrix_m_expected(int g, int p, int i) {
  ZpMat m = ZpMat::identity(2 * g, p);
  m.set(2 * i, 1, 1);      // row 2i+1, column 2 (1-indexed)
  m.set(0, 2 * i + 1, 1);  // row 1, column 2i+2
  return m;
}

/** Conjugator K = T_{a_{i+1}} T_{b_{i+1}} T_{a_{i+1}}. */
inline ZpMat mixing_conjugator(int g, int p, int i) {
  ZpMat ta = transvection(detail::class_a(g, i + 1), p);
  ZpMat tb = transvection(detail::class_b(g, i + 1), p);
  return mat_mul(mat_mul(ta, tb), ta);
}

/** The conjugate K^{-1} M_i K. */
inline ZpMat mixing_matrix_n(int g, int p, int i) {
  ZpMat tai = transvection_inverse(detail::class_a(g, i + 1), p);
  ZpMat tbi = transvection_inverse(detail::class_b(g, i + 1), p);
  ZpMat kinv = mat_mul(mat_mul(tai, tbi), tai);
  return mat_mul(mat_mul(kinv, mixing_matrix_m(g, p, i)), mixing_conjugator(g, p, i));
}

inline ZpMat mixing_matrix_n_expected(int g, int p, int i) {
  ZpMat m = ZpMat::identity(2 * g, p);
  m.set(2 * i + 1, 1, -1);  // row 2i+2, column 2, entry -1
  m.set(0, 2 * i, 1);       // row 1, column 2i+1
  return m;
}

/**
 * Shape predicate for membership in the centralizer of the first twist:
 * first column (a, 0, ..., 0), second row (0, a, 0, ..., 0) with a common
 * a = +-1 mod p.
 */
inline bool centralizer_form_predicate(const ZpMat& m) {
  int a = m.at(0, 0);
  if (a != 1 % m.p && a != (m.p - 1) % m.p) return false;
  if (m.at(1, 1) != a) return false;
  for (int i = 1; i < m.dim; ++i)
    if (m.at(i, 0) != 0) return false;
  for (int j = 0; j < m.dim; ++j)
    if (j != 1 && m.at(1, j) != 0) return false;
  return true;
}

/** Order of Sp(2g, Z_p): p^{g^2} times the product of (p^{2i} - 1). */
inline std::int64_t sp_order(int g, int p) {
  std::int64_t o = 1;
  for (int i = 0; i < g * g; ++i) o *= p;
  std::int64_t q = 1;
  for (int i = 1; i <= g; ++i) {
    std::int64_t t = 1;
    for (int k = 0; k < 2 * i; ++k) t *= p;
    q *= (t - 1);
  }
  return o * q;
}

struct SpGroup {
  int g = 0;
  int p = 0;
  std::vector<ZpMat> elements;  // BFS order from the identity
  std::unordered_map<ZpMat, int, ZpMatHash> index;

  std::int64_t order() const { return static_cast<std::int64_t>(elements.size()); }
  bool contains(const ZpMat& m) const { return index.count(m) > 0; }
};

/**
 * Full enumeration of Sp(2g, Z_p) as the closure of all transvections
 * under multiplication, BFS from the identity. Throws CapExceeded when the
 * group is larger than cap.
 */
inline SpGroup enumerate_sp(int g, int p, std::int64_t cap = 200000) {
  if (g < 1 || 2 * g > ZpMat::kMaxDim) throw CapExceeded(2 * g, ZpMat::kMaxDim);
  SpGroup sp;
  sp.g = g;
  sp.p = p;
  const int dim = 2 * g;
  std::vector<ZpMat> gens;
  std::vector<int> v(static_cast<std::size_t>(dim), 0);
  for (;;) {
    // odometer over Z_p^{2g}
    int k = 0;
    while (k < dim && ++v[static_cast<std::size_t>(k)] == p) {
      v[static_cast<std::size_t>(k)] = 0;
      ++k;
    }
    if (k == dim) break;
    if (is_primitive_vector(v, p)) gens.push_back(transvection(v, p));
  }
  ZpMat id = ZpMat::identity(dim, p);
  sp.elements.push_back(id);
  sp.index.emplace(id, 0);
  for (std::size_t head = 0; head < sp.elements.size(); ++head) {
    ZpMat cur = sp.elements[head];
    for (const ZpMat& t : gens) {
      ZpMat nx = mat_mul(cur, t);
      if (sp.index.emplace(nx, static_cast<int>(sp.elements.size())).second) {
        if (static_cast<std::int64_t>(sp.elements.size()) >= cap)
          throw CapExceeded(static_cast<std::int64_t>(sp.elements.size()) + 1, cap);
        sp.elements.push_back(nx);
      }
    }
  }
  return sp;
}

struct CentralizerReport {
  std::string lemma;  // external token naming the check variant
  int g = 0;
  int p = 0;
  std::int64_t group_order = 0;
  std::int64_t centralizer_order = 0;
  bool equal = false;
};

namespace detail {

inline std::vector<int> brute_centralizer(const SpGroup& sp, const ZpMat& t) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(sp.elements.size()); ++i) {
    const ZpMat& m = sp.elements[static_cast<std::size_t>(i)];
    if (mat_mul(m, t) == mat_mul(t, m)) out.push_back(i);
  }
  return out;
}

}  // namespace detail

/**
 * Check that the shape predicate carves out exactly the brute-force
 * centralizer of the first twist inside the fully enumerated group.
 */
inline CentralizerReport check_centralizer_shape(int g, int p, std::int64_t cap = 200000) {
  SpGroup sp = enumerate_sp(g, p, cap);
  ZpMat t = transvection(detail::class_a(g, 1), p);
  std::vector<int> cent = detail::brute_centralizer(sp, t);
  std::vector<int> pred;
  for (int i = 0; i < static_cast<int>(sp.elements.size()); ++i)
    if (centralizer_form_predicate(sp.elements[static_cast<std::size_t>(i)])) pred.push_back(i);
  CentralizerReport r;
  r.lemma = "5.1";
  r.g = g;
  r.p = p;
  r.group_order = sp.order();
  r.centralizer_order = static_cast<std::int64_t>(cent.size());
  r.equal = (pred == cent);
  return r;
}

/**
 * Check that the centralizer of the first twist is generated by the twists
 * at a_1..a_g, b_2..b_g, c_1..c_{g-1} together with -I.
 */
inline CentralizerReport check_centralizer_generators(int g, int p, std::int64_t cap = 200000) {
  SpGroup sp = enumerate_sp(g, p, cap);
  ZpMat t = transvection(detail::class_a(g, 1), p);
  std::vector<int> cent = detail::brute_centralizer(sp, t);

  std::vector<ZpMat> gens;
  for (int i = 1; i <= g; ++i) gens.push_back(transvection(detail::class_a(g, i), p));
  for (int i = 2; i <= g; ++i) gens.push_back(transvection(detail::class_b(g, i), p));
  for (int i = 1; i + 1 <= g; ++i) gens.push_back(transvection(detail::class_c(g, i, p), p));
  gens.push_back(mat_neg(ZpMat::identity(2 * g, p)));

  std::vector<int> closure;
  std::vector<char> seen(sp.elements.size(), 0);
  ZpMat id = ZpMat::identity(2 * g, p);
  std::vector<int> frontier{sp.index.at(id)};
  seen[static_cast<std::size_t>(frontier[0])] = 1;
  closure.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int i : frontier)
      for (const ZpMat& m : gens) {
        ZpMat nx = mat_mul(sp.elements[static_cast<std::size_t>(i)], m);
        int j = sp.index.at(nx);
        if (!seen[static_cast<std::size_t>(j)]) {
          seen[static_cast<std::size_t>(j)] = 1;
          closure.push_back(j);
          next.push_back(j);
        }
      }
    frontier = std::move(next);
  }
  std::sort(closure.begin(), closure.end());

  CentralizerReport r;
  r.lemma = "5.2";
  r.g = g;
  r.p = p;
  r.group_order = sp.order();
  r.centralizer_order = static_cast<std::int64_t>(cent.size());
  r.equal = (closure == cent);
  return r;
}

}  // namespace qdl
