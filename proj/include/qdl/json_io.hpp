#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qdl/errors.hpp"
#include "qdl/quandle.hpp"
#include "qdl/symplectic.hpp"

namespace qdl {

/**
 * Table format: {"size": n, "labels": [...]?, "table": [[row-major]],
 * "generators": [...]?}. table[x][y] = x*y. labels and generators are
 * optional metadata; unknown keys are ignored on input.
 */
inline nlohmann::json quandle_to_json(const FiniteQuandle& q,
                                      const std::vector<int>* generators = nullptr) {
  nlohmann::json j;
  j["size"] = q.size();
  if (!q.labels().empty()) j["labels"] = q.labels();
  std::vector<std::vector<int>> rows;
  for (int x = 0; x < q.size(); ++x) {
    std::vector<int> row;
    for (int y = 0; y < q.size(); ++y) row.push_back(q.op(x, y));
    rows.push_back(std::move(row));
  }
  j["table"] = rows;
  if (generators) j["generators"] = *generators;
  return j;
}

inline FiniteQuandle quandle_from_json(const nlohmann::json& j, bool unchecked = false) {
  if (!j.is_object() || !j.contains("size") || !j.contains("table"))
    throw Error("quandle json: need an object with \"size\" and \"table\"");
  const int n = j.at("size").get<int>();
  Table t = j.at("table").get<Table>();
  if (static_cast<int>(t.size()) != n) throw Error("quandle json: table row count differs from size");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels = j.at("labels").get<std::vector<std::string>>();
    if (static_cast<int>(labels.size()) != n)
      throw Error("quandle json: label count differs from size");
  }
  return unchecked ? FiniteQuandle::unchecked(std::move(t), std::move(labels))
                   : FiniteQuandle::checked(std::move(t), std::move(labels));
}

inline void write_quandle(std::ostream& os, const FiniteQuandle& q,
                          const std::vector<int>* generators = nullptr) {
  os << quandle_to_json(q, generators).dump(2) << "\n";
}

inline FiniteQuandle read_quandle(std::istream& is, bool unchecked = false) {
  nlohmann::json j;
  is >> j;
  return quandle_from_json(j, unchecked);
}

/** One-line machine outcome: {"status": "finished", "size": n} or {"status": "overflow", "cap": c}. */
inline nlohmann::json outcome_finished(std::int64_t size) {
  return nlohmann::json{{"status", "finished"}, {"size", size}};
}

inline nlohmann::json outcome_overflow(std::int64_t cap) {
  return nlohmann::json{{"status", "overflow"}, {"cap", cap}};
}

inline nlohmann::json report_to_json(const CentralizerReport& r) {
  return nlohmann::json{{"lemma", r.lemma},
                        {"g", r.g},
                        {"p", r.p},
                        {"group_order", r.group_order},
                        {"centralizer_order", r.centralizer_order},
                        {"equal", r.equal}};
}

}  // namespace qdl
