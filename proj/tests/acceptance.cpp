// Acceptance gate: one pass/fail line per criterion. Drives the CLI binary
// given as argv[1] for the criteria phrased at the command level and the
// library directly for the rest. Exits 0 iff every criterion passes.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qdl/qdl.hpp"
#include "property_suites.hpp"

namespace {

std::string g_cli;
std::filesystem::path g_tmp;

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  RunResult r;
  std::string cmd = "'" + g_cli + "' " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return r;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, f)) r.out.append(buf, got);
  int st = pclose(f);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

nlohmann::json last_json(const std::string& out) {
  std::istringstream is(out);
  std::string line, last;
  while (std::getline(is, line))
    if (!line.empty()) last = line;
  return nlohmann::json::parse(last);
}

std::string tmpfile(const std::string& name) { return (g_tmp / name).string(); }

qdl::FiniteQuandle load(const std::string& path, std::vector<int>* gens = nullptr) {
  std::ifstream in(path);
  nlohmann::json j;
  in >> j;
  if (gens && j.contains("generators")) *gens = j["generators"].get<std::vector<int>>();
  return qdl::quandle_from_json(j);
}

// element-level and translation-identity check of every relation of p in q
bool relations_hold(const qdl::QuandlePresentation& p, const qdl::FiniteQuandle& q,
                    const std::vector<int>& img) {
  auto trace = [&](const std::vector<qdl::QLetter>& letters, int u) {
    for (const qdl::QLetter& l : letters) {
      int y = img[static_cast<std::size_t>(l.gen)];
      u = l.sign > 0 ? q.op(u, y) : q.inv_op(u, y);
    }
    return u;
  };
  for (const qdl::QuandleRelation& rel : p.rels) {
    if (qdl::evaluate(rel.lhs, q, img) != qdl::evaluate(rel.rhs, q, img)) return false;
    auto wl = qdl::operator_word(rel.lhs, 1);
    auto wr = qdl::operator_word(rel.rhs, 1);
    for (int u = 0; u < q.size(); ++u)
      if (trace(wl, u) != trace(wr, u)) return false;
  }
  return true;
}

int g_failures = 0;

void report(int k, bool ok, const std::string& what) {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << k << ": " << what << "\n";
  if (!ok) ++g_failures;
}

// ---------------------------------------------------------------------------

void criterion_1() {
  RunResult tre = run("enumerate trefoil-quandle --n 2 --out '" + tmpfile("c1_tre.json") + "'");
  RunResult pq = run("pquandle --g 1 --n 2 --out '" + tmpfile("c1_pq.json") + "'");
  RunResult iso = run("iso '" + tmpfile("c1_tre.json") + "' '" + tmpfile("c1_pq.json") + "'");
  bool ok = tre.code == 0 && pq.code == 0 && iso.code == 0;
  std::string detail = "trefoil 2-quandle enumerates to 3 elements and is isomorphic to the "
                       "genus-1 projective quandle";
  if (ok) {
    nlohmann::json j = last_json(tre.out);
    ok = j["status"] == "finished" && j["size"] == 3;
  }
  report(1, ok, detail);
}

void criterion_2() {
  bool ok = true;
  std::string sizes;
  for (int n = 2; n <= 5; ++n) {
    std::string f = tmpfile("c2_n" + std::to_string(n) + ".json");
    RunResult r = run("enumerate trefoil-quandle --n " + std::to_string(n) + " --out '" + f + "'");
    if (r.code != 0 || last_json(r.out)["status"] != "finished") {
      ok = false;
      break;
    }
    std::vector<int> img;
    qdl::FiniteQuandle q = load(f, &img);
    sizes += (n > 2 ? ", " : "") + std::to_string(q.size());
    qdl::QuandlePresentation p = qdl::augment_n(qdl::trefoil_presentation(), n);
    ok = ok && !qdl::find_axiom_violation(q.table()).has_value();
    ok = ok && qdl::is_n_quandle(q, n) && qdl::is_connected(q);
    ok = ok && img.size() == 2 && relations_hold(p, q, img);
    const int expect[] = {3, 4, 6, 12};
    ok = ok && q.size() == expect[n - 2];
    if (!ok) break;
  }
  RunResult r6 = run("enumerate trefoil-quandle --n 6");
  ok = ok && r6.code == 2;
  if (ok) {
    nlohmann::json j = last_json(r6.out);
    ok = j["status"] == "overflow" && j["cap"] == 100000;
  }
  report(2, ok,
         "trefoil n-quandles finish for n = 2..5 (sizes " + sizes +
             ") and pass validation; n = 6 overflows at the default cap");
}

void criterion_3() {
  struct Case {
    std::string artin, type;
    int size;
  };
  const std::vector<Case> cases{{"artin(A_2)", "A_2", 3},
                                {"artin(A_3)", "A_3", 6},
                                {"artin(I_2(4))", "I_2(4)", 4}};
  bool ok = true;
  for (const Case& c : cases) {
    std::string fa = tmpfile("c3_a_" + c.type + ".json");
    std::string fc = tmpfile("c3_c_" + c.type + ".json");
    RunResult a = run("enumerate '" + c.artin + "' --n 2 --out '" + fa + "'");
    RunResult w = run("coxeter-quandle '" + c.type + "' --out '" + fc + "'");
    RunResult i = run("iso '" + fa + "' '" + fc + "'");
    ok = ok && a.code == 0 && w.code == 0 && i.code == 0 && last_json(a.out)["size"] == c.size;
    if (!ok) break;
  }
  report(3, ok,
         "involutory artin quandles of A_2, A_3, I_2(4) match the reflection quandles "
         "(3, 6, 4 elements)");
}

void criterion_4() {
  std::string f = tmpfile("c4_dehn.json");
  RunResult d = run("dehn --group 'sym(5)' --subset transpositions --out '" + f + "'");
  RunResult m = run("min-quotient '" + f + "'");
  bool ok = d.code == 0 && m.code == 0;
  if (ok) {
    qdl::FiniteQuandle q = load(f);
    nlohmann::json j = last_json(m.out);
    ok = q.size() == 10 && j["smallest"] == 10 && j["smallest_proper"].is_null();
  }
  report(4, ok,
         "the transposition quandle of sym(5) has 10 elements and no smaller nontrivial "
         "quotient");
}

void criterion_5() {
  bool ok = true;
  const int sizes[] = {3, 15, 63, 255};
  for (int g = 1; g <= 4 && ok; ++g) {
    qdl::FiniteQuandle q = qdl::p_quandle(g, 2);
    ok = q.size() == sizes[g - 1] && qdl::is_n_quandle(q, 2) && qdl::is_connected(q);
  }
  if (ok) {
    qdl::FiniteQuandle q = qdl::p_quandle(2, 3);
    ok = q.size() == 40 && qdl::is_n_quandle(q, 3);
  }
  report(5, ok,
         "projective quandles: sizes 3, 15, 63, 255 at n = 2 (involutory, connected); 40 at "
         "g = 2, n = 3 (a 3-quandle)");
}

void criterion_6() {
  qdl::MinQuotientResult a = qdl::smallest_nontrivial_quotient(qdl::p_quandle(1, 2));
  qdl::MinQuotientResult b = qdl::smallest_nontrivial_quotient(qdl::p_quandle(2, 2));
  bool ok = a.smallest.has_value() && *a.smallest == 3 && !a.smallest_proper.has_value() &&
            b.smallest.has_value() && *b.smallest == 15 && !b.smallest_proper.has_value();
  report(6, ok,
         "no proper nontrivial quotient below 3 for the genus-1 and below 15 for the genus-2 "
         "involutory projective quandle");
}

void criterion_7() {
  const std::vector<std::pair<int, int>> pairs{{1, 2}, {1, 3}, {1, 5}, {2, 2}, {2, 3}};
  bool ok = true;
  for (auto [g, p] : pairs) {
    qdl::CentralizerReport r = qdl::check_centralizer_shape(g, p);
    ok = ok && r.equal && r.group_order == qdl::sp_order(g, p);
    if (!ok) break;
  }
  report(7, ok,
         "the shape predicate carves out exactly the centralizer of the first twist in "
         "Sp(2g, Z_p) for all five (g, p) instances");
}

void criterion_8() {
  const std::vector<std::pair<int, int>> pairs{{1, 2}, {1, 3}, {1, 5}, {2, 2}, {2, 3}};
  bool ok = true;
  for (auto [g, p] : pairs) {
    qdl::CentralizerReport r = qdl::check_centralizer_generators(g, p);
    ok = ok && r.equal;
    if (!ok) break;
  }
  for (int g : {2, 3})
    for (int p : {2, 3})
      for (int i = 1; i <= g - 1 && ok; ++i) {
        ok = ok && qdl::mixing_matrix_m(g, p, i) == qdl::mixing_matrix_m_expected(g, p, i);
        ok = ok && qdl::mixing_matrix_n(g, p, i) == qdl::mixing_matrix_n_expected(g, p, i);
      }
  report(8, ok,
         "the declared generating set closes to the full centralizer and the mixing matrices "
         "match their printed elementary forms");
}

void criterion_9() {
  RunResult a = run("group-order 'braid(3)' --power 2");
  RunResult b = run("group-order 'braid(3)' --power 3");
  bool ok = a.code == 0 && b.code == 0;
  if (ok) ok = last_json(a.out)["size"] == 6 && last_json(b.out)["size"] == 24;
  report(9, ok, "braid(3) truncated at powers 2 and 3 has order 6 and 24");
}

void criterion_10() {
  std::string err;
  auto fail = [&err](const std::string& m) {
    if (err.empty()) err = m;
  };
  const std::uint64_t seed = 20260814u;
  std::int64_t checks = 0;
  checks += qdl_props::normalization_suite(seed, 7000, fail);
  checks += qdl_props::corruption_suite(seed, 3000, fail);
  std::int64_t aug = qdl_props::augmentation_suite(seed, 400, fail);
  std::int64_t cons = qdl_props::consistency_suite(seed, 200, fail);
  checks += aug + cons;
  bool ok = err.empty() && checks >= 10000 && aug >= 50 && cons >= 50;
  report(10, ok,
         "property suites green: " + std::to_string(checks) +
             " randomized checks (normalization, corruption, augmentation, consistency)" +
             (err.empty() ? "" : " — " + err));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-cli>\n";
    return 2;
  }
  g_cli = argv[1];
  g_tmp = std::filesystem::temp_directory_path() / "qdl_acceptance";
  std::filesystem::create_directories(g_tmp);

  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();

  std::error_code ec;
  std::filesystem::remove_all(g_tmp, ec);
  if (g_failures == 0) {
    std::cout << "all 10 criteria passed\n";
    return 0;
  }
  std::cout << g_failures << " criteria failed\n";
  return 1;
}
