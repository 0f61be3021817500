#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qdl/congruence.hpp"
#include "qdl/errors.hpp"
#include "qdl/iso.hpp"
#include "qdl/perm.hpp"
#include "qdl/presentation.hpp"
#include "qdl/quandle.hpp"
#include "qdl/words.hpp"

namespace qdl {

struct EnumCaps {
  std::int64_t max_quandle_rows = 100000;
  std::int64_t max_group_cosets = 1000000;
};

namespace detail {

struct CapHit {};  // internal signal; surfaces as an overflow outcome, never as an exception

/**
 * Shared machinery for coset-style enumeration: a row set with one action
 * column per signed letter (letter 2g acts as generator g, letter 2g+1 as
 * its inverse), a union-find over rows, and an immediately drained
 * coincidence queue. Edges are kept reciprocal: row --l--> s implies
 * s --inv(l)--> row.
 */
class ActionTable {
 public:
  ActionTable(int ngens, std::int64_t cap) : cols_(static_cast<std::size_t>(2 * ngens)), cap_(cap) {}

  static int fwd(int g) { return 2 * g; }
  static int inv_letter(int l) { return l ^ 1; }

  int nrows() const { return static_cast<int>(parent_.size()); }
  std::int64_t rows_touched() const { return total_rows_; }
  std::int64_t merges() const { return merges_; }
  std::int64_t cap() const { return cap_; }

  int find(int r) const {
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    return r;
  }

  bool alive(int r) const { return find(r) == r; }

  /** Resolved action value, or -1 when undefined. */
  int get(int row, int l) const {
    int v = cols_[static_cast<std::size_t>(l)][static_cast<std::size_t>(find(row))];
    return v < 0 ? -1 : find(v);
  }

  /** Append a fresh row; the caller wires it up via edges. */
  int new_row() {
    if (total_rows_ >= cap_) throw CapHit{};
    ++total_rows_;
    int id = nrows();
    parent_.push_back(id);
    for (auto& c : cols_) c.push_back(-1);
    return id;
  }

  /** Define a new row as the image of (row, l). */
  int define(int row, int l) {
    int r = find(row);
    int id = new_row();
    cols_[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)] = id;
    cols_[static_cast<std::size_t>(inv_letter(l))][static_cast<std::size_t>(id)] = r;
    return id;
  }

  /** Install an edge a --l--> b, queueing coincidences on conflicts. */
  void set_edge(int a, int l, int b) {
    a = find(a);
    b = find(b);
    int& slot = cols_[static_cast<std::size_t>(l)][static_cast<std::size_t>(a)];
    if (slot >= 0) {
      int v = find(slot);
      if (v != b) coincide(v, b);
      return;
    }
    slot = b;
    int& rslot = cols_[static_cast<std::size_t>(inv_letter(l))][static_cast<std::size_t>(b)];
    if (rslot < 0) {
      rslot = a;
    } else if (find(rslot) != a) {
      coincide(find(rslot), a);
    }
  }

  /** Identify two rows and drain all consequences. */
  void coincide(int a, int b) {
    queue_.emplace_back(a, b);
    while (!queue_.empty()) {
      auto [x, y] = queue_.front();
      queue_.pop_front();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      int s = std::min(x, y), d = std::max(x, y);
      parent_[static_cast<std::size_t>(d)] = s;
      ++merges_;
      for (std::size_t l = 0; l < cols_.size(); ++l) {
        int dv = cols_[l][static_cast<std::size_t>(d)];
        if (dv < 0) continue;
        cols_[l][static_cast<std::size_t>(d)] = -1;
        // re-adding through set_edge reconciles with s's entry and heals
        // the reciprocal pointer that still aims at d
        queue_edge_.push_back({s, static_cast<int>(l), find(dv)});
      }
      while (!queue_edge_.empty()) {
        auto e = queue_edge_.front();
        queue_edge_.pop_front();
        set_edge_queued(e.a, e.l, e.b);
      }
    }
  }

  bool complete() const {
    for (int r = 0; r < nrows(); ++r) {
      if (!alive(r)) continue;
      for (std::size_t l = 0; l < cols_.size(); ++l)
        if (get(r, static_cast<int>(l)) < 0) return false;
    }
    return true;
  }

  /** First undefined (row, letter) in row-major order over live rows, or nullopt. */
  std::optional<std::pair<int, int>> first_undefined() const {
    for (int r = 0; r < nrows(); ++r) {
      if (!alive(r)) continue;
      for (std::size_t l = 0; l < cols_.size(); ++l)
        if (get(r, static_cast<int>(l)) < 0) return std::make_pair(r, static_cast<int>(l));
    }
    return std::nullopt;
  }

  std::vector<int> live_rows() const {
    std::vector<int> out;
    for (int r = 0; r < nrows(); ++r)
      if (alive(r)) out.push_back(r);
    return out;
  }

 private:
  struct Edge {
    int a, l, b;
  };

  // set_edge without recursive drain; conflicts are queued as coincidences
  void set_edge_queued(int a, int l, int b) {
    a = find(a);
    b = find(b);
    int& slot = cols_[static_cast<std::size_t>(l)][static_cast<std::size_t>(a)];
    if (slot >= 0) {
      int v = find(slot);
      if (v != b) queue_.emplace_back(v, b);
      return;
    }
    slot = b;
    int& rslot = cols_[static_cast<std::size_t>(inv_letter(l))][static_cast<std::size_t>(b)];
    if (rslot < 0) {
      rslot = a;
    } else if (find(rslot) != a) {
      queue_.emplace_back(find(rslot), a);
    }
  }

  std::vector<std::vector<int>> cols_;
  std::vector<int> parent_;
  std::deque<std::pair<int, int>> queue_;
  std::deque<Edge> queue_edge_;
  std::int64_t cap_;
  std::int64_t total_rows_ = 0;
  std::int64_t merges_ = 0;
};

enum class ScanResult { Complete, Progressed, Incomplete };

/**
 * Scan a path instance: `start` traced through `letters` must land on `end`.
 * Two-ended: walk forward while defined, then backward from the end; a gap
 * of zero merges the heads, a gap of one is a forced deduction, and a wider
 * gap is filled by definitions when `allow_define` is set. Performs at most
 * one table mutation per call so callers loop until Complete.
 */
inline ScanResult scan_path(ActionTable& t, int start, const std::vector<int>& letters, int end,
                            bool allow_define) {
  const int len = static_cast<int>(letters.size());
  int i = 0, x = t.find(start);
  while (i < len) {
    int v = t.get(x, letters[static_cast<std::size_t>(i)]);
    if (v < 0) break;
    x = v;
    ++i;
  }
  if (i == len) {
    if (x != t.find(end)) {
      t.coincide(x, end);
      return ScanResult::Progressed;
    }
    return ScanResult::Complete;
  }
  int j = len, y = t.find(end);
  while (j > i + 1) {
    int v = t.get(y, ActionTable::inv_letter(letters[static_cast<std::size_t>(j - 1)]));
    if (v < 0) break;
    y = v;
    --j;
  }
  if (j == i + 1) {
    t.set_edge(x, letters[static_cast<std::size_t>(i)], y);
    return ScanResult::Progressed;
  }
  if (!allow_define) return ScanResult::Incomplete;
  t.define(x, letters[static_cast<std::size_t>(i)]);
  return ScanResult::Progressed;
}

inline void scan_to_completion(ActionTable& t, int start, const std::vector<int>& letters,
                               int end) {
  while (scan_path(t, start, letters, end, true) == ScanResult::Progressed) {
  }
}

inline int qletter_id(const QLetter& l) { return 2 * l.gen + (l.sign > 0 ? 0 : 1); }
inline int gletter_id(const GLetter& l) { return 2 * l.gen + (l.sign > 0 ? 0 : 1); }

inline std::vector<int> reversed_inverted(const std::vector<int>& letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    out.push_back(ActionTable::inv_letter(*it));
  return out;
}

}  // namespace detail

struct QuandleEnumResult {
  bool finished = false;
  std::int64_t rows_touched = 0;
  std::int64_t cap = 0;
  std::optional<FiniteQuandle> quandle;
  std::vector<int> generator_images;  // element index of each presentation generator
  std::vector<QWord> reps;            // representative word per element
};

/**
 * Enumerate the quandle presented by p, in the coset-enumeration style for
 * quandles: one row per element, action columns per generator. Relations
 * act everywhere: besides the element-level instance (both sides traced
 * from their base generators), each relation contributes at every row the
 * translation-identity instance through its operator words, and idempotency
 * is traced at every row through that row's representative word. Rows are
 * processed in increasing order; new rows are created HLT-style while
 * scanning and at the first undefined table slot once all rows are
 * processed. Deterministic throughout. Returns an overflow outcome instead
 * of an answer when more than caps.max_quandle_rows rows are ever created.
 */
inline QuandleEnumResult enumerate_quandle(const QuandlePresentation& p, EnumCaps caps = {},
                                           std::ostream* diag = nullptr) {
  const int k = static_cast<int>(p.gens.size());
  QuandleEnumResult res;
  res.cap = caps.max_quandle_rows;
  if (k == 0) throw Error("enumerate_quandle: presentation has no generators");

  detail::ActionTable t(k, caps.max_quandle_rows);
  std::vector<QWord> rep;

  // paths for the element-level and translation-level relation instances
  struct RelPaths {
    int base_l, base_r;
    std::vector<int> primary;    // from base_l to base_r
    std::vector<int> secondary;  // cycle at every row
  };
  std::vector<RelPaths> rels;
  for (const QuandleRelation& r : p.rels) {
    RelPaths rp;
    rp.base_l = r.lhs.base;
    rp.base_r = r.rhs.base;
    for (const QLetter& l : r.lhs.tail) rp.primary.push_back(detail::qletter_id(l));
    {
      std::vector<int> rtail;
      for (const QLetter& l : r.rhs.tail) rtail.push_back(detail::qletter_id(l));
      auto back = detail::reversed_inverted(rtail);
      rp.primary.insert(rp.primary.end(), back.begin(), back.end());
    }
    std::vector<int> op_l, op_r;
    for (const QLetter& l : operator_word(r.lhs, 1)) op_l.push_back(detail::qletter_id(l));
    for (const QLetter& l : operator_word(r.rhs, 1)) op_r.push_back(detail::qletter_id(l));
    rp.secondary = op_l;
    auto back = detail::reversed_inverted(op_r);
    rp.secondary.insert(rp.secondary.end(), back.begin(), back.end());
    rels.push_back(std::move(rp));
  }

  std::int64_t last_report = 0;
  auto report = [&]() {
    if (!diag) return;
    std::int64_t events = t.rows_touched() + t.merges();
    if (events - last_report >= 10000) {
      last_report = events;
      (*diag) << "rows defined " << t.rows_touched() << ", live "
              << static_cast<std::int64_t>(t.live_rows().size()) << ", merged " << t.merges()
              << "\n";
    }
  };

  try {
    // one starting row per generator; idempotency pins the diagonal
    for (int g = 0; g < k; ++g) {
      int r = t.new_row();
      rep.push_back(QWord{g, {}});
      (void)r;
    }
    // rep words for rows defined later hang off their parents; wrap define
    auto define_tracked = [&](int row, int l) {
      int parent = t.find(row);
      int id = t.define(parent, l);
      QWord w = rep[static_cast<std::size_t>(parent)];
      w.tail.push_back(QLetter{l / 2, static_cast<std::int8_t>((l % 2 == 0) ? 1 : -1)});
      rep.push_back(std::move(w));
      return id;
    };
    auto scan_full = [&](int start, const std::vector<int>& letters, int end) {
      for (;;) {
        const int len = static_cast<int>(letters.size());
        int i = 0, x = t.find(start);
        while (i < len) {
          int v = t.get(x, letters[static_cast<std::size_t>(i)]);
          if (v < 0) break;
          x = v;
          ++i;
        }
        if (i == len) {
          if (x != t.find(end)) t.coincide(x, end);
          return;
        }
        int j = len, y = t.find(end);
        while (j > i + 1) {
          int v = t.get(y, detail::ActionTable::inv_letter(letters[static_cast<std::size_t>(j - 1)]));
          if (v < 0) break;
          y = v;
          --j;
        }
        if (j == i + 1) {
          t.set_edge(x, letters[static_cast<std::size_t>(i)], y);
          continue;
        }
        define_tracked(x, letters[static_cast<std::size_t>(i)]);
      }
    };
    auto idem_path = [&](int r) {
      // cycle tracing x*x = x through the representative word of x
      const QWord& w = rep[static_cast<std::size_t>(r)];
      std::vector<int> tail;
      for (const QLetter& l : w.tail) tail.push_back(detail::qletter_id(l));
      std::vector<int> path = detail::reversed_inverted(tail);
      path.push_back(detail::ActionTable::fwd(w.base));
      path.insert(path.end(), tail.begin(), tail.end());
      return path;
    };

    // element-level instances once up front
    for (const RelPaths& rp : rels) scan_full(rp.base_l, rp.primary, rp.base_r);

    int ptr = 0;
    for (;;) {
      report();
      if (ptr < t.nrows()) {
        if (!t.alive(ptr)) {
          ++ptr;
          continue;
        }
        int r = ptr;
        scan_full(r, idem_path(r), r);
        for (const RelPaths& rp : rels) {
          if (!t.alive(r)) break;  // merged away mid-processing; alias is or will be processed
          scan_full(r, rp.secondary, r);
        }
        ++ptr;
        continue;
      }
      auto hole = t.first_undefined();
      if (hole) {
        define_tracked(hole->first, hole->second);
        continue;
      }
      // stable candidate: re-verify every instance without defining
      bool progressed = false;
      for (const RelPaths& rp : rels) {
        if (detail::scan_path(t, rp.base_l, rp.primary, rp.base_r, false) ==
            detail::ScanResult::Progressed)
          progressed = true;
      }
      for (int r : t.live_rows()) {
        if (!t.alive(r)) continue;
        if (detail::scan_path(t, r, idem_path(r), r, false) == detail::ScanResult::Progressed)
          progressed = true;
        for (const RelPaths& rp : rels) {
          if (!t.alive(r)) break;
          if (detail::scan_path(t, r, rp.secondary, r, false) == detail::ScanResult::Progressed)
            progressed = true;
        }
      }
      if (!progressed && t.complete()) break;
    }

    // build the finished quandle
    std::vector<int> live = t.live_rows();
    const int n = static_cast<int>(live.size());
    std::vector<int> compact(static_cast<std::size_t>(t.nrows()), -1);
    for (int i = 0; i < n; ++i) compact[static_cast<std::size_t>(live[static_cast<std::size_t>(i)])] = i;
    Table table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j) {
      // the operator word of rep[y] acts as S_y on every row
      const QWord& w = rep[static_cast<std::size_t>(live[static_cast<std::size_t>(j)])];
      std::vector<int> tail;
      for (const QLetter& l : w.tail) tail.push_back(detail::qletter_id(l));
      std::vector<int> op = detail::reversed_inverted(tail);
      op.push_back(detail::ActionTable::fwd(w.base));
      op.insert(op.end(), tail.begin(), tail.end());
      for (int i = 0; i < n; ++i) {
        int x = live[static_cast<std::size_t>(i)];
        for (int l : op) x = t.get(x, l);
        table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            compact[static_cast<std::size_t>(x)];
      }
    }
    std::vector<std::string> labels;
    std::vector<QWord> reps_out;
    for (int i = 0; i < n; ++i) {
      const QWord& w = rep[static_cast<std::size_t>(live[static_cast<std::size_t>(i)])];
      labels.push_back(print_qword(w, p.gens));
      reps_out.push_back(w);
    }
    res.finished = true;
    res.rows_touched = t.rows_touched();
    res.quandle = FiniteQuandle::unchecked(std::move(table), std::move(labels));
    res.reps = std::move(reps_out);
    for (int g = 0; g < k; ++g)
      res.generator_images.push_back(compact[static_cast<std::size_t>(t.find(g))]);
    return res;
  } catch (const detail::CapHit&) {
    res.finished = false;
    res.rows_touched = t.rows_touched();
    return res;
  }
}

struct GroupEnumResult {
  bool finished = false;
  std::int64_t cosets_touched = 0;
  std::int64_t cap = 0;
  std::int64_t order = 0;
  std::vector<Perm> generator_action;  // right action of each generator on cosets
};

/**
 * Coset enumeration of the presented group over the trivial subgroup:
 * relators are traced as cycles at every coset, deductions and coincidences
 * are processed immediately, and new cosets are created HLT-style while
 * scanning and row-major once all cosets are processed. On success the
 * order and the full right action of the generators on cosets are returned.
 */
inline GroupEnumResult enumerate_group(const GroupPresentation& p, EnumCaps caps = {},
                                       std::ostream* diag = nullptr) {
  const int k = static_cast<int>(p.gens.size());
  GroupEnumResult res;
  res.cap = caps.max_group_cosets;

  detail::ActionTable t(std::max(k, 1), caps.max_group_cosets);
  std::vector<std::vector<int>> relators;
  for (const GroupWord& w : p.relators) {
    std::vector<int> letters;
    for (const GLetter& l : w) letters.push_back(detail::gletter_id(l));
    if (!letters.empty()) relators.push_back(std::move(letters));
  }

  std::int64_t last_report = 0;
  auto report = [&]() {
    if (!diag) return;
    std::int64_t events = t.rows_touched() + t.merges();
    if (events - last_report >= 10000) {
      last_report = events;
      (*diag) << "cosets defined " << t.rows_touched() << ", live "
              << static_cast<std::int64_t>(t.live_rows().size()) << ", merged " << t.merges()
              << "\n";
    }
  };

  try {
    t.new_row();  // the subgroup coset
    int ptr = 0;
    for (;;) {
      report();
      if (ptr < t.nrows()) {
        if (!t.alive(ptr)) {
          ++ptr;
          continue;
        }
        for (const auto& r : relators) {
          if (!t.alive(ptr)) break;
          detail::scan_to_completion(t, ptr, r, ptr);
        }
        ++ptr;
        continue;
      }
      auto hole = t.first_undefined();
      if (hole) {
        t.define(hole->first, hole->second);
        continue;
      }
      bool progressed = false;
      for (int c : t.live_rows()) {
        if (!t.alive(c)) continue;
        for (const auto& r : relators) {
          if (!t.alive(c)) break;
          if (detail::scan_path(t, c, r, c, false) == detail::ScanResult::Progressed)
            progressed = true;
        }
      }
      if (!progressed && t.complete()) break;
    }

    std::vector<int> live = t.live_rows();
    const int n = static_cast<int>(live.size());
    std::vector<int> compact(static_cast<std::size_t>(t.nrows()), -1);
    for (int i = 0; i < n; ++i) compact[static_cast<std::size_t>(live[static_cast<std::size_t>(i)])] = i;
    res.finished = true;
    res.cosets_touched = t.rows_touched();
    res.order = n;
    for (int g = 0; g < k; ++g) {
      Perm a;
      a.img.resize(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        a.img[static_cast<std::size_t>(i)] = compact[static_cast<std::size_t>(
            t.get(live[static_cast<std::size_t>(i)], detail::ActionTable::fwd(g)))];
      res.generator_action.push_back(std::move(a));
    }
    return res;
  } catch (const detail::CapHit&) {
    res.finished = false;
    res.cosets_touched = t.rows_touched();
    return res;
  }
}

struct ConsistencyReport {
  bool both_finished = false;
  bool agree = false;        // isomorphic when both routes finished
  std::int64_t direct_size = 0;    // enumerate(augment(p, n))
  std::int64_t quotient_size = 0;  // finite_n_quotient(enumerate(p), n)
};

/**
 * Cross-validate the two routes to the largest n-quandle quotient of the
 * quandle presented by p: enumerate the augmented presentation directly,
 * and quotient the enumerated quandle of p. Requires both enumerations to
 * finish; reports both_finished = false otherwise.
 */
inline ConsistencyReport quotient_consistency(const QuandlePresentation& p, int n,
                                              EnumCaps caps = {}) {
  ConsistencyReport rep;
  QuandleEnumResult direct = enumerate_quandle(augment_n(p, n), caps);
  QuandleEnumResult full = enumerate_quandle(p, caps);
  if (!direct.finished || !full.finished) return rep;
  rep.both_finished = true;
  rep.direct_size = direct.quandle->size();
  FiniteQuandle q = finite_n_quotient(*full.quandle, n);
  rep.quotient_size = q.size();
  rep.agree = isomorphic(*direct.quandle, q);
  return rep;
}

}  // namespace qdl
