#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "qdl/errors.hpp"

namespace qdl {

/**
 * A permutation of {0,...,n-1}, stored as its image vector.
 *
 * Composition is fixed left-to-right throughout the library:
 * (a * b)(p) = b(a(p)), i.e. apply a first, then b.
 */
struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(std::vector<int> v) : img(std::move(v)) {}

  static Perm identity(int n) {
    Perm p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
  }

  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int p) const { return img[static_cast<std::size_t>(p)]; }

  friend bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img < b.img; }
};

/** a then b. */
inline Perm compose(const Perm& a, const Perm& b) {
  Perm c;
  c.img.resize(a.img.size());
  for (std::size_t i = 0; i < a.img.size(); ++i)
    c.img[i] = b.img[static_cast<std::size_t>(a.img[i])];
  return c;
}

inline Perm inverse(const Perm& a) {
  Perm c;
  c.img.resize(a.img.size());
  for (std::size_t i = 0; i < a.img.size(); ++i)
    c.img[static_cast<std::size_t>(a.img[i])] = static_cast<int>(i);
  return c;
}

inline bool is_identity(const Perm& a) {
  for (std::size_t i = 0; i < a.img.size(); ++i)
    if (a.img[i] != static_cast<int>(i)) return false;
  return true;
}

/** Sorted multiset of cycle lengths (fixed points included). */
inline std::vector<int> cycle_type(const Perm& a) {
  std::vector<int> out;
  std::vector<char> seen(a.img.size(), 0);
  for (std::size_t i = 0; i < a.img.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(a.img[j])) {
      seen[j] = 1;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/** Multiplicative order (lcm of cycle lengths). */
inline std::int64_t perm_order(const Perm& a) {
  std::int64_t ord = 1;
  for (int len : cycle_type(a)) ord = std::lcm<std::int64_t>(ord, len);
  return ord;
}

inline bool is_permutation_of_range(const std::vector<int>& v) {
  std::vector<char> seen(v.size(), 0);
  for (int x : v) {
    if (x < 0 || static_cast<std::size_t>(x) >= v.size() || seen[static_cast<std::size_t>(x)])
      return false;
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return true;
}

/** Cycle notation on 1-based points, e.g. "(1 2)(3 4)"; identity prints as "()". */
inline std::string cycle_string(const Perm& a) {
  std::string out;
  std::vector<char> seen(a.img.size(), 0);
  for (std::size_t i = 0; i < a.img.size(); ++i) {
    if (seen[i] || a.img[i] == static_cast<int>(i)) continue;
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(a.img[j])) {
      seen[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.img) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace qdl
