#pragma once

// Randomized property suites shared by the unit tests (down-scaled) and the
// acceptance run (full scale). Each suite returns the number of checks that
// ran and reports the first failure through the `fail` callback; suites are
// deterministic in the seed.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qdl/builtins.hpp"
#include "qdl/coxeter.hpp"
#include "qdl/enumerate.hpp"
#include "qdl/group.hpp"
#include "qdl/pquandle.hpp"
#include "qdl/quandle.hpp"
#include "qdl/words.hpp"

namespace qdl_props {

using Fail = std::function<void(const std::string&)>;

inline std::vector<qdl::FiniteQuandle> sample_quandles() {
  std::vector<qdl::FiniteQuandle> pool;
  for (int n : {3, 4, 5, 6, 7, 8}) pool.push_back(qdl::dihedral_quandle(n));
  pool.push_back(qdl::trivial_quandle(5));
  pool.push_back(qdl::conjugation_quandle(qdl::symmetric_group(3)));
  pool.push_back(qdl::p_quandle(2, 2));
  pool.push_back(qdl::p_quandle(1, 3));
  pool.push_back(qdl::coxeter_quandle(qdl::coxeter_B(3)));
  return pool;
}

// random binary expression tree over generators 0..k-1
inline std::shared_ptr<qdl::QExpr> random_tree(std::mt19937& rng, int k, int depth) {
  std::uniform_int_distribution<int> gen(0, k - 1);
  if (depth == 0 || std::uniform_int_distribution<int>(0, 2)(rng) == 0)
    return qdl::QExpr::leaf(gen(rng));
  auto l = random_tree(rng, k, depth - 1);
  auto r = random_tree(rng, k, depth - 1);
  std::int8_t sign = std::uniform_int_distribution<int>(0, 1)(rng) ? std::int8_t{1} : std::int8_t{-1};
  return qdl::QExpr::node(std::move(l), std::move(r), sign);
}

inline int tree_eval(const qdl::QExpr& e, const qdl::FiniteQuandle& q,
                     const std::vector<int>& assign) {
  if (e.is_leaf()) return assign[static_cast<std::size_t>(e.gen)];
  int l = tree_eval(*e.left, q, assign);
  int r = tree_eval(*e.right, q, assign);
  return e.sign > 0 ? q.op(l, r) : q.inv_op(l, r);
}

/** normalize() must preserve the value of every expression tree. */
inline std::int64_t normalization_suite(std::uint64_t seed, int iters, const Fail& fail) {
  std::mt19937 rng(static_cast<std::uint32_t>(seed));
  auto pool = sample_quandles();
  std::int64_t checks = 0;
  for (int it = 0; it < iters; ++it) {
    const qdl::FiniteQuandle& q =
        pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    int k = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<int> assign;
    for (int i = 0; i < k; ++i)
      assign.push_back(std::uniform_int_distribution<int>(0, q.size() - 1)(rng));
    auto tree = random_tree(rng, k, 4);
    qdl::QWord w = qdl::normalize(*tree);
    int direct = tree_eval(*tree, q, assign);
    int flat = qdl::evaluate(w, q, assign);
    ++checks;
    if (direct != flat) {
      fail("normalization changed the value of a random tree (seed " + std::to_string(seed) +
           ", iteration " + std::to_string(it) + ")");
      return checks;
    }
  }
  return checks;
}

/** Corrupting one table entry always produces a detectable axiom violation. */
inline std::int64_t corruption_suite(std::uint64_t seed, int iters, const Fail& fail) {
  std::mt19937 rng(static_cast<std::uint32_t>(seed) ^ 0x9e3779b9u);
  auto pool = sample_quandles();
  std::int64_t checks = 0;
  for (int it = 0; it < iters; ++it) {
    const qdl::FiniteQuandle& q =
        pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    const int n = q.size();
    if (n < 2) continue;
    qdl::Table t = q.table();
    int x = std::uniform_int_distribution<int>(0, n - 1)(rng);
    int y = std::uniform_int_distribution<int>(0, n - 1)(rng);
    int old = t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
    int delta = std::uniform_int_distribution<int>(1, n - 1)(rng);
    t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = (old + delta) % n;
    ++checks;
    if (!qdl::find_axiom_violation(t).has_value()) {
      fail("corrupted table slipped past the axiom scan (seed " + std::to_string(seed) +
           ", iteration " + std::to_string(it) + ")");
      return checks;
    }
  }
  return checks;
}

inline std::vector<qdl::QuandlePresentation> sample_presentations() {
  std::vector<qdl::QuandlePresentation> pool;
  pool.push_back(qdl::trefoil_presentation());
  pool.push_back(qdl::artin_quandle_presentation(qdl::coxeter_A(2)));
  pool.push_back(qdl::artin_quandle_presentation(qdl::coxeter_I2(3)));
  pool.push_back(qdl::artin_quandle_presentation(qdl::coxeter_I2(4)));
  pool.push_back(qdl::artin_quandle_presentation(qdl::coxeter_B(2)));
  pool.push_back(
      qdl::parse_quandle_presentation("quandle< a, b | a*b = a ; b*a = b >"));
  pool.push_back(qdl::parse_quandle_presentation("quandle< a, b, c | a*b = c ; c*b = a >"));
  return pool;
}

/** Whenever the augmented enumeration finishes it must be a valid n-quandle. */
inline std::int64_t augmentation_suite(std::uint64_t seed, int iters, const Fail& fail) {
  std::mt19937 rng(static_cast<std::uint32_t>(seed) ^ 0x51f15eedu);
  auto pool = sample_presentations();
  qdl::EnumCaps caps;
  caps.max_quandle_rows = 5000;
  std::int64_t checks = 0;
  for (int it = 0; it < iters; ++it) {
    const qdl::QuandlePresentation& p =
        pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    int n = std::uniform_int_distribution<int>(2, 5)(rng);
    qdl::QuandleEnumResult r = qdl::enumerate_quandle(qdl::augment_n(p, n), caps);
    if (!r.finished) continue;
    ++checks;
    if (qdl::find_axiom_violation(r.quandle->table()).has_value()) {
      fail("augmented enumeration produced an invalid table (seed " + std::to_string(seed) +
           ", iteration " + std::to_string(it) + ")");
      return checks;
    }
    if (!qdl::is_n_quandle(*r.quandle, n)) {
      fail("augmented enumeration output is not an n-quandle (seed " + std::to_string(seed) +
           ", iteration " + std::to_string(it) + ")");
      return checks;
    }
  }
  return checks;
}

/** The two routes to the n-quandle quotient agree whenever both finish. */
inline std::int64_t consistency_suite(std::uint64_t seed, int iters, const Fail& fail) {
  std::mt19937 rng(static_cast<std::uint32_t>(seed) ^ 0xc0ffee11u);
  // base presentations with finite enumerations, so both routes can finish
  std::vector<qdl::QuandlePresentation> pool;
  pool.push_back(qdl::augment_n(qdl::trefoil_presentation(), 4));
  pool.push_back(qdl::augment_n(qdl::trefoil_presentation(), 5));
  pool.push_back(qdl::coxeter_quandle_presentation(qdl::coxeter_A(3)));
  pool.push_back(qdl::coxeter_quandle_presentation(qdl::coxeter_B(3)));
  pool.push_back(qdl::parse_quandle_presentation("quandle< a, b | a*b = a ; b*a = b >"));
  std::int64_t checks = 0;
  for (int it = 0; it < iters; ++it) {
    const qdl::QuandlePresentation& p =
        pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    int n = std::uniform_int_distribution<int>(2, 4)(rng);
    qdl::ConsistencyReport c = qdl::quotient_consistency(p, n);
    if (!c.both_finished) continue;
    ++checks;
    if (!c.agree) {
      fail("augmented enumeration disagrees with the quotient route (seed " +
           std::to_string(seed) + ", iteration " + std::to_string(it) + ")");
      return checks;
    }
  }
  return checks;
}

}  // namespace qdl_props
