#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <thread>
#include <utility>
#include <vector>

#include "qdl/errors.hpp"
#include "qdl/quandle.hpp"

namespace qdl {

/**
 * A partition of {0,...,n-1}. Canonical form: block(x) is the least element
 * of x's block, so two partitions are equal iff their block vectors are.
 */
class Partition {
 public:
  explicit Partition(int n) : parent_(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
  }

  int size() const { return static_cast<int>(parent_.size()); }

  int find(int x) const {
    while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
    return x;
  }

  /** Union keeping the least member as representative; true if a merge happened. */
  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    return true;
  }

  bool same(int a, int b) const { return find(a) == find(b); }

  int block_count() const {
    int c = 0;
    for (int i = 0; i < size(); ++i)
      if (find(i) == i) ++c;
    return c;
  }

  /** block(x) = least member of x's block, for every x. */
  std::vector<int> blocks() const {
    std::vector<int> out(parent_.size());
    for (int i = 0; i < size(); ++i) out[static_cast<std::size_t>(i)] = find(i);
    return out;
  }

  std::vector<std::vector<int>> block_lists() const {
    std::map<int, std::vector<int>> m;
    for (int i = 0; i < size(); ++i) m[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [rep, xs] : m) out.push_back(std::move(xs));
    return out;
  }

  bool is_identity() const { return block_count() == size(); }

  /** True if this partition refines no pair that `coarser` keeps apart. */
  bool refines(const Partition& coarser) const {
    for (int i = 0; i < size(); ++i)
      if (!coarser.same(i, find(i))) return false;
    return true;
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.blocks() == b.blocks();
  }

 private:
  std::vector<int> parent_;
};

/**
 * Least congruence of q containing the seed pairs: closure of the seeds
 * under compatibility (x~x', y~y' forces x*y ~ x'*y') together with the
 * left-cancellation deduction (z*y ~ z'*y' with y~y' forces z ~ z', valid
 * on finite quandles where quotient translations stay bijective).
 */
inline Partition congruence_generated_by(const FiniteQuandle& q,
                                         const std::vector<std::pair<int, int>>& seeds) {
  const int n = q.size();
  Partition part(n);
  for (auto [a, b] : seeds) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw Error("congruence seed out of range");
    part.merge(a, b);
  }
  // Fixed-point iteration; n is small wherever this runs, so quadratic
  // passes beat maintaining pair worklists.
  bool changed = !seeds.empty();
  while (changed) {
    changed = false;
    // compatibility in the left argument: x ~ x' => x*y ~ x'*y
    std::vector<int> reps = part.blocks();
    for (int x = 0; x < n; ++x) {
      int r = reps[static_cast<std::size_t>(x)];
      if (r == x) continue;
      for (int y = 0; y < n; ++y) changed |= part.merge(q.op(x, y), q.op(r, y));
    }
    // compatibility in the right argument and left cancellation
    for (int y = 0; y < n; ++y) {
      int r = part.find(y);
      if (r == y) continue;
      for (int x = 0; x < n; ++x) {
        changed |= part.merge(q.op(x, y), q.op(x, r));
        changed |= part.merge(q.inv_op(x, y), q.inv_op(x, r));
      }
    }
  }
  return part;
}

/** Quotient table on the blocks; blocks are numbered by increasing least member. */
inline FiniteQuandle quotient_quandle(const FiniteQuandle& q, const Partition& part) {
  std::vector<int> reps = part.blocks();
  std::vector<int> reindex(reps.size(), -1);
  std::vector<int> members;
  for (int i = 0; i < q.size(); ++i)
    if (reps[static_cast<std::size_t>(i)] == i) {
      reindex[static_cast<std::size_t>(i)] = static_cast<int>(members.size());
      members.push_back(i);
    }
  const int m = static_cast<int>(members.size());
  Table t(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int v = q.op(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)]);
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          reindex[static_cast<std::size_t>(reps[static_cast<std::size_t>(v)])];
    }
  std::vector<std::string> labels;
  if (q.has_labels()) {
    for (int i = 0; i < m; ++i) labels.push_back("[" + q.label(members[static_cast<std::size_t>(i)]) + "]");
  }
  return FiniteQuandle::checked(std::move(t), std::move(labels));
}

/** Least congruence whose quotient is an n-quandle. */
inline Partition n_quotient_congruence(const FiniteQuandle& q, int n) {
  std::vector<std::pair<int, int>> seeds;
  for (int x = 0; x < q.size(); ++x)
    for (int y = 0; y < q.size(); ++y) {
      int v = q.op_pow(x, y, n);
      if (v != x) seeds.emplace_back(x, v);
    }
  return congruence_generated_by(q, seeds);
}

/** Largest n-quandle quotient of q. */
inline FiniteQuandle finite_n_quotient(const FiniteQuandle& q, int n) {
  return quotient_quandle(q, n_quotient_congruence(q, n));
}

struct MinQuotientResult {
  /** Smallest quotient size >= 2 over all congruences, the identity congruence
      included — i.e. the smallest quandle of size >= 2 that q maps onto.
      Absent when |q| < 2. */
  std::optional<int> smallest;
  /** Same minimum restricted to proper (non-identity) congruences; absent when
      every nontrivial congruence collapses q to a point. */
  std::optional<int> smallest_proper;
  /** Number of distinct congruences explored by the lattice search. */
  std::int64_t explored = 0;
};

/**
 * Search the congruence lattice — principal congruences first, then their
 * join closure — for the smallest quotient with at least two elements.
 * Throws BudgetExceeded when the number of distinct congruences explored
 * passes `budget`. `jobs` shards the principal-congruence computations;
 * results are merged in a fixed order, so the outcome is deterministic.
 */
inline MinQuotientResult smallest_nontrivial_quotient(const FiniteQuandle& q,
                                                      std::int64_t budget = 200000,
                                                      int jobs = 1) {
  const int n = q.size();
  MinQuotientResult res;
  if (n >= 2) res.smallest = n;  // the identity congruence always counts
  if (n < 2) return res;

  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);

  std::vector<Partition> principal(pairs.size(), Partition(0));
  if (jobs <= 1 || pairs.size() < 2) {
    for (std::size_t i = 0; i < pairs.size(); ++i)
      principal[i] = congruence_generated_by(q, {pairs[i]});
  } else {
    const int workers = std::min<int>(jobs, static_cast<int>(pairs.size()));
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back([&, w]() {
        for (std::size_t i = static_cast<std::size_t>(w); i < pairs.size();
             i += static_cast<std::size_t>(workers))
          principal[i] = congruence_generated_by(q, {pairs[i]});
      });
    }
    for (auto& t : threads) t.join();
  }

  // Dedupe principal congruences; they are the atoms of the join closure.
  std::set<std::vector<int>> seen;
  std::vector<Partition> frontier;
  auto consider = [&](const Partition& p) -> bool {
    // returns true when p is new
    if (!seen.insert(p.blocks()).second) return false;
    ++res.explored;
    if (res.explored > budget)
      throw BudgetExceeded("congruence lattice search exceeded budget " + std::to_string(budget));
    int bc = p.block_count();
    if (bc >= 2 && !p.is_identity()) {
      if (!res.smallest_proper || bc < *res.smallest_proper) res.smallest_proper = bc;
      if (!res.smallest || bc < *res.smallest) res.smallest = bc;
    }
    return true;
  };
  for (const Partition& p : principal) {
    if (p.is_identity()) continue;  // seeds can collapse to nothing only if n<2
    if (consider(p)) frontier.push_back(p);
  }
  // Join closure: every congruence is a join of principal ones, so this
  // sweep visits the entire lattice above the atoms.
  while (!frontier.empty()) {
    std::vector<Partition> next;
    for (const Partition& f : frontier) {
      for (const Partition& p : principal) {
        if (p.is_identity()) continue;
        Partition j = f;
        bool grew = false;
        for (int x = 0; x < n; ++x) grew |= j.merge(x, p.find(x));
        if (!grew) continue;
        // close the join back up to a congruence
        std::vector<std::pair<int, int>> seeds;
        std::vector<int> bl = j.blocks();
        for (int x = 0; x < n; ++x)
          if (bl[static_cast<std::size_t>(x)] != x) seeds.emplace_back(x, bl[static_cast<std::size_t>(x)]);
        Partition cong = congruence_generated_by(q, seeds);
        if (consider(cong)) next.push_back(std::move(cong));
      }
    }
    frontier = std::move(next);
  }
  return res;
}

}  // namespace qdl
