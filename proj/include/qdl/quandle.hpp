#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qdl/errors.hpp"
#include "qdl/perm.hpp"

namespace qdl {

using Table = std::vector<std::vector<int>>;

struct AxiomWitness {
  Axiom axiom;
  int x, y, z;  // z is -1 for the unary/binary axioms
};

/**
 * Scan a square table for the first quandle-axiom violation, in a fixed
 * deterministic order: idempotency, then right-translation bijectivity
 * (column by column), then right self-distributivity (x, then y, then z).
 * table[x][y] is x*y. Returns nothing when the table is a quandle.
 */
inline std::optional<AxiomWitness> find_axiom_violation(const Table& t) {
  const int n = static_cast<int>(t.size());
  if (n == 0) return AxiomWitness{Axiom::RightTranslation, 0, 0, -1};
  for (int x = 0; x < n; ++x)
    if (static_cast<int>(t[static_cast<std::size_t>(x)].size()) != n)
      return AxiomWitness{Axiom::RightTranslation, x, 0, -1};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int v = t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      if (v < 0 || v >= n) return AxiomWitness{Axiom::RightTranslation, x, y, -1};
    }
  for (int x = 0; x < n; ++x)
    if (t[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)] != x)
      return AxiomWitness{Axiom::Idempotency, x, x, -1};
  // columns must be bijections
  std::vector<char> seen(static_cast<std::size_t>(n));
  for (int y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int x = 0; x < n; ++x) {
      int v = t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      if (seen[static_cast<std::size_t>(v)]) return AxiomWitness{Axiom::RightTranslation, x, y, -1};
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      for (int z = 0; z < n; ++z) {
        const int lhs = t[static_cast<std::size_t>(xy)][static_cast<std::size_t>(z)];
        const int xz = t[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)];
        const int yz = t[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)];
        if (lhs != t[static_cast<std::size_t>(xz)][static_cast<std::size_t>(yz)])
          return AxiomWitness{Axiom::Distributivity, x, y, z};
      }
    }
  return std::nullopt;
}

/**
 * A finite quandle with elements 0..n-1 given by its full operation table
 * (row x, column y holds x*y). Immutable once constructed; the inverse
 * operation table is precomputed so x *~ y is O(1).
 */
class FiniteQuandle {
 public:
  /** Validates all three axioms; throws AxiomViolation otherwise. */
  static FiniteQuandle checked(Table t, std::vector<std::string> labels = {}) {
    if (auto w = find_axiom_violation(t)) throw AxiomViolation(w->axiom, w->x, w->y, w->z);
    return FiniteQuandle(std::move(t), std::move(labels));
  }

  /** No validation; caller vouches for the table. */
  static FiniteQuandle unchecked(Table t, std::vector<std::string> labels = {}) {
    return FiniteQuandle(std::move(t), std::move(labels));
  }

  int size() const { return n_; }

  int op(int x, int y) const { return tab_[static_cast<std::size_t>(x * n_ + y)]; }

  /** x *~ y: the unique z with z*y = x. */
  int inv_op(int x, int y) const { return inv_[static_cast<std::size_t>(x * n_ + y)]; }

  /** x *^e y: |e| right multiplications by y, inverted when e < 0. */
  int op_pow(int x, int y, int e) const {
    while (e > 0) { x = op(x, y); --e; }
    while (e < 0) { x = inv_op(x, y); ++e; }
    return x;
  }

  /** The right translation S_y as a permutation of the elements. */
  Perm column(int y) const {
    Perm p;
    p.img.resize(static_cast<std::size_t>(n_));
    for (int x = 0; x < n_; ++x) p.img[static_cast<std::size_t>(x)] = op(x, y);
    return p;
  }

  Table table() const {
    Table t(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_)));
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = op(x, y);
    return t;
  }

  const std::vector<std::string>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }

  std::string label(int x) const {
    return has_labels() ? labels_[static_cast<std::size_t>(x)] : std::to_string(x);
  }

  friend bool operator==(const FiniteQuandle& a, const FiniteQuandle& b) {
    return a.n_ == b.n_ && a.tab_ == b.tab_;
  }

 private:
  FiniteQuandle(Table t, std::vector<std::string> labels)
      : n_(static_cast<int>(t.size())), labels_(std::move(labels)) {
    tab_.resize(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
    inv_.assign(tab_.size(), -1);
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        tab_[static_cast<std::size_t>(x * n_ + y)] =
            t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        inv_[static_cast<std::size_t>(tab_[static_cast<std::size_t>(x * n_ + y)] * n_ + y)] = x;
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
      throw Error("label count does not match quandle size");
  }

  int n_;
  std::vector<std::int32_t> tab_, inv_;
  std::vector<std::string> labels_;
};

/** Trivial quandle: x*y = x. */
inline FiniteQuandle trivial_quandle(int n) {
  Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = x;
  return FiniteQuandle::unchecked(std::move(t));
}

/** Dihedral quandle on Z_n: i*j = 2j - i (mod n). */
inline FiniteQuandle dihedral_quandle(int n) {
  Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = ((2 * y - x) % n + n) % n;
  return FiniteQuandle::unchecked(std::move(t));
}

/** True iff every right translation has order dividing n (n >= 1). */
inline bool is_n_quandle(const FiniteQuandle& q, int n) {
  for (int y = 0; y < q.size(); ++y)
    for (int x = 0; x < q.size(); ++x)
      if (q.op_pow(x, y, n) != x) return false;
  return true;
}

/** Orbits of the inner group, i.e. connected components; blocks listed by least member. */
inline std::vector<std::vector<int>> orbits(const FiniteQuandle& q) {
  const int n = q.size();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = id;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      out[static_cast<std::size_t>(id)].push_back(x);
      for (int y = 0; y < n; ++y) {
        for (int z : {q.op(x, y), q.inv_op(x, y)}) {
          if (comp[static_cast<std::size_t>(z)] < 0) {
            comp[static_cast<std::size_t>(z)] = id;
            stack.push_back(z);
          }
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

inline bool is_connected(const FiniteQuandle& q) { return orbits(q).size() == 1; }

/** Orders of the right translations, indexed by element. */
inline std::vector<std::int64_t> nu_profile(const FiniteQuandle& q) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(q.size()));
  for (int y = 0; y < q.size(); ++y) out[static_cast<std::size_t>(y)] = perm_order(q.column(y));
  return out;
}

/**
 * The inner group: closure of the right translations under composition.
 * `generators` holds one permutation per element (S_0, S_1, ...); `elements`
 * is the full closure, enumerated breadth-first. Throws CapExceeded if the
 * closure grows past `cap`.
 */
struct InnerGroup {
  std::vector<Perm> generators;
  std::vector<Perm> elements;
};

inline InnerGroup inner_group(const FiniteQuandle& q, std::int64_t cap = 1000000) {
  InnerGroup g;
  for (int y = 0; y < q.size(); ++y) g.generators.push_back(q.column(y));
  std::unordered_map<Perm, int, PermHash> index;
  g.elements.push_back(Perm::identity(q.size()));
  index.emplace(g.elements[0], 0);
  for (std::size_t next = 0; next < g.elements.size(); ++next) {
    Perm cur = g.elements[next];  // copy: elements may reallocate below
    for (const Perm& s : g.generators) {
      Perm prod = compose(cur, s);
      if (index.emplace(prod, static_cast<int>(g.elements.size())).second) {
        g.elements.push_back(std::move(prod));
        if (static_cast<std::int64_t>(g.elements.size()) > cap)
          throw CapExceeded(static_cast<std::int64_t>(g.elements.size()), cap);
      }
    }
  }
  return g;
}

}  // namespace qdl
