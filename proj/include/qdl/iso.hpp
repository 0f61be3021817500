#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "qdl/quandle.hpp"

namespace qdl {

namespace detail {

/**
 * Per-element invariant profile, refined a few rounds in the style of color
 * refinement: start from (orbit size, column cycle type, x*x-fixedness is
 * trivial, nu) and fold in the multiset of neighbour colors under * and *~.
 */
inline std::vector<int> iso_colors(const FiniteQuandle& q) {
  const int n = q.size();
  std::vector<std::vector<int>> orb = orbits(q);
  std::vector<int> orbit_size(static_cast<std::size_t>(n));
  for (const auto& o : orb)
    for (int x : o) orbit_size[static_cast<std::size_t>(x)] = static_cast<int>(o.size());

  // initial color: (orbit size, cycle type of the element's column)
  std::map<std::pair<int, std::vector<int>>, int> palette0;
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    auto key = std::make_pair(orbit_size[static_cast<std::size_t>(x)], cycle_type(q.column(x)));
    auto [it, _] = palette0.emplace(key, static_cast<int>(palette0.size()));
    color[static_cast<std::size_t>(x)] = it->second;
  }

  for (int round = 0; round < 3; ++round) {
    std::map<std::vector<int>, int> palette;
    std::vector<int> next(static_cast<std::size_t>(n));
    bool stable = true;
    for (int x = 0; x < n; ++x) {
      std::vector<int> sig{color[static_cast<std::size_t>(x)]};
      std::vector<int> nb;
      for (int y = 0; y < n; ++y) {
        nb.push_back(color[static_cast<std::size_t>(q.op(x, y))] * 2);
        nb.push_back(color[static_cast<std::size_t>(q.op(y, x))] * 2 + 1);
      }
      std::sort(nb.begin(), nb.end());
      sig.insert(sig.end(), nb.begin(), nb.end());
      auto [it, _] = palette.emplace(sig, static_cast<int>(palette.size()));
      next[static_cast<std::size_t>(x)] = it->second;
    }
    for (int x = 0; x < n; ++x)
      if (next[static_cast<std::size_t>(x)] != color[static_cast<std::size_t>(x)]) stable = false;
    color = std::move(next);
    if (stable) break;
  }
  return color;
}

inline bool iso_is_homomorphism(const FiniteQuandle& a, const FiniteQuandle& b,
                                const std::vector<int>& map) {
  for (int u = 0; u < a.size(); ++u)
    for (int v = 0; v < a.size(); ++v)
      if (map[static_cast<std::size_t>(a.op(u, v))] !=
          b.op(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]))
        return false;
  return true;
}

inline bool iso_backtrack(const FiniteQuandle& a, const FiniteQuandle& b,
                          const std::vector<std::vector<int>>& candidates,
                          std::vector<int>& map, std::vector<char>& used, int x) {
  const int n = a.size();
  // the per-step checks below prune; the full verification seals correctness
  if (x == n) return iso_is_homomorphism(a, b, map);
  for (int y : candidates[static_cast<std::size_t>(x)]) {
    if (used[static_cast<std::size_t>(y)]) continue;
    bool ok = true;
    // consistency against everything already mapped
    for (int z = 0; z <= x && ok; ++z) {
      int mz = (z == x) ? y : map[static_cast<std::size_t>(z)];
      int axz = a.op(x, z), azx = a.op(z, x);
      int maxz = (axz == x) ? y : map[static_cast<std::size_t>(axz)];
      int mazx = (azx == x) ? y : map[static_cast<std::size_t>(azx)];
      if (maxz >= 0 && maxz != b.op(y, mz)) ok = false;
      if (ok && mazx >= 0 && mazx != b.op(mz, y)) ok = false;
    }
    if (!ok) continue;
    map[static_cast<std::size_t>(x)] = y;
    used[static_cast<std::size_t>(y)] = 1;
    if (iso_backtrack(a, b, candidates, map, used, x + 1)) return true;
    map[static_cast<std::size_t>(x)] = -1;
    used[static_cast<std::size_t>(y)] = 0;
  }
  return false;
}

}  // namespace detail

/**
 * Search for a quandle isomorphism a -> b. Returns the image vector
 * (element x of a maps to result[x] in b) or nothing. Deterministic:
 * elements are tried in increasing order, candidates likewise.
 */
inline std::optional<std::vector<int>> find_isomorphism(const FiniteQuandle& a,
                                                        const FiniteQuandle& b) {
  if (a.size() != b.size()) return std::nullopt;
  const int n = a.size();
  std::vector<int> ca = detail::iso_colors(a), cb = detail::iso_colors(b);
  // colors are palette-local; compare by multiset via sorted (color, count)
  {
    std::vector<int> sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    // palette ids were assigned in first-seen order on possibly different
    // element orders, so counts per color must be compared shape-wise
    std::map<int, int> ha, hb;
    for (int c : sa) ++ha[c];
    for (int c : sb) ++hb[c];
    std::vector<int> profile_a, profile_b;
    for (auto& [c, k] : ha) profile_a.push_back(k);
    for (auto& [c, k] : hb) profile_b.push_back(k);
    std::sort(profile_a.begin(), profile_a.end());
    std::sort(profile_b.begin(), profile_b.end());
    if (profile_a != profile_b) return std::nullopt;
  }
  // candidate images share the refined color *structure*; to pair palettes
  // across the two quandles, re-key colors by an invariant signature
  auto signature = [](const FiniteQuandle& q, const std::vector<int>& color) {
    const int n_ = q.size();
    std::map<int, std::vector<int>> sig;  // color -> sorted signature
    std::vector<std::vector<int>> orb = orbits(q);
    std::vector<int> osz(static_cast<std::size_t>(n_));
    for (const auto& o : orb)
      for (int x : o) osz[static_cast<std::size_t>(x)] = static_cast<int>(o.size());
    std::map<int, std::vector<int>> out;
    for (int x = 0; x < n_; ++x) {
      std::vector<int> s{osz[static_cast<std::size_t>(x)]};
      auto ct = cycle_type(q.column(x));
      s.insert(s.end(), ct.begin(), ct.end());
      std::vector<int> nb;
      for (int y = 0; y < n_; ++y) nb.push_back(color[static_cast<std::size_t>(q.op(x, y))]);
      // neighbour colors are palette-local; use only their partition shape
      std::sort(nb.begin(), nb.end());
      std::vector<int> shape;
      for (std::size_t i = 0; i < nb.size();) {
        std::size_t j = i;
        while (j < nb.size() && nb[j] == nb[i]) ++j;
        shape.push_back(static_cast<int>(j - i));
        i = j;
      }
      std::sort(shape.begin(), shape.end());
      s.push_back(-1);
      s.insert(s.end(), shape.begin(), shape.end());
      auto it = out.find(color[static_cast<std::size_t>(x)]);
      if (it == out.end()) out.emplace(color[static_cast<std::size_t>(x)], s);
    }
    return out;
  };
  auto sig_a = signature(a, ca), sig_b = signature(b, cb);
  std::vector<std::vector<int>> candidates(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    const std::vector<int>& sx = sig_a[ca[static_cast<std::size_t>(x)]];
    for (int y = 0; y < n; ++y)
      if (sig_b[cb[static_cast<std::size_t>(y)]] == sx) candidates[static_cast<std::size_t>(x)].push_back(y);
    if (candidates[static_cast<std::size_t>(x)].empty()) return std::nullopt;
  }
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  if (detail::iso_backtrack(a, b, candidates, map, used, 0)) return map;
  return std::nullopt;
}

/** Convenience: true iff some isomorphism exists. */
inline bool isomorphic(const FiniteQuandle& a, const FiniteQuandle& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace qdl
