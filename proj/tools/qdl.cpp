/**
 * @file qdl.cpp
 * @brief Command-line front end: parse, enumerate, construct, compare, export.
 *
 * Exit codes: 0 = success / enumeration finished; 2 = overflow or a cap was
 * exceeded; 1 = usage error, validation failure, or a check that came back
 * negative. Human-readable summaries go to stdout (machine JSON as the last
 * stdout line where applicable); diagnostics and progress go to stderr.
 */

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qdl/qdl.hpp"

namespace {

using nlohmann::json;

std::string slurp_stream(std::istream& is) {
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::string slurp(const std::string& path) {
  if (path == "-") return slurp_stream(std::cin);
  std::ifstream f(path);
  if (!f) throw qdl::Error("cannot open '" + path + "'");
  return slurp_stream(f);
}

/** Builtin name, inline DSL (contains '<'), "-" for stdin, or a file path. */
qdl::AnyPresentation resolve_any(const std::string& arg) {
  if (auto b = qdl::resolve_builtin(arg)) return *b;
  if (arg.find('<') != std::string::npos) return qdl::parse_presentation(arg);
  return qdl::parse_presentation(slurp(arg));
}

qdl::QuandlePresentation as_quandle_presentation(const qdl::AnyPresentation& p) {
  if (std::holds_alternative<qdl::QuandlePresentation>(p))
    return std::get<qdl::QuandlePresentation>(p);
  std::cerr << "group presentation given; using the candidate quandle presentation x*r = x "
               "(stabilizer relations only; conjugacies between generators are not derived)\n";
  return qdl::dehn_presentation_from_group(std::get<qdl::GroupPresentation>(p));
}

qdl::FiniteQuandle read_quandle_arg(const std::string& path, bool unchecked = false) {
  json j;
  try {
    j = json::parse(slurp(path));
  } catch (const json::exception& e) {
    throw qdl::Error(std::string("bad json in '") + path + "': " + e.what());
  }
  return qdl::quandle_from_json(j, unchecked);
}

void write_table(const std::string& out, const qdl::FiniteQuandle& q,
                 const std::vector<int>* gens = nullptr) {
  if (out == "-") {
    qdl::write_quandle(std::cout, q, gens);
    return;
  }
  std::ofstream f(out);
  if (!f) throw qdl::Error("cannot write '" + out + "'");
  qdl::write_quandle(f, q, gens);
}

struct GlobalOpts {
  std::uint64_t seed = 20260814;  // reserved for randomized subroutines; all commands deterministic
  int jobs = 1;
};

int cmd_validate(const std::string& path) {
  json j;
  try {
    j = json::parse(slurp(path));
  } catch (const json::exception& e) {
    std::cerr << "bad json: " << e.what() << "\n";
    return 1;
  }
  try {
    qdl::FiniteQuandle q = qdl::quandle_from_json(j);
    std::cout << "valid quandle: size=" << q.size() << ", orbits=" << qdl::orbits(q).size()
              << ", connected=" << (qdl::is_connected(q) ? "yes" : "no") << "\n";
    return 0;
  } catch (const qdl::AxiomViolation& v) {
    std::cout << "invalid: " << v.what() << "\n";
    return 1;
  }
}

int cmd_enumerate(const std::string& input, std::optional<int> n, std::int64_t cap,
                  const std::string& out) {
  qdl::QuandlePresentation p = as_quandle_presentation(resolve_any(input));
  if (n) {
    if (*n < 2) throw qdl::Error("--n must be >= 2");
    p = qdl::augment_n(p, *n);
  }
  qdl::EnumCaps caps;
  caps.max_quandle_rows = cap;
  qdl::QuandleEnumResult r = qdl::enumerate_quandle(p, caps, &std::cerr);
  std::ostream& info = (out == "-") ? std::cerr : std::cout;
  if (!r.finished) {
    info << "overflow: cap " << r.cap << " reached after touching " << r.rows_touched
         << " rows\n";
    info << qdl::outcome_overflow(r.cap).dump() << "\n";
    return 2;
  }
  info << "finished: " << r.quandle->size() << " elements (" << r.rows_touched
       << " rows touched)\n";
  if (!out.empty()) write_table(out, *r.quandle, &r.generator_images);
  info << qdl::outcome_finished(r.quandle->size()).dump() << "\n";
  return 0;
}

int cmd_group_order(const std::string& input, std::optional<int> power, std::int64_t cap) {
  qdl::AnyPresentation any = resolve_any(input);
  if (!std::holds_alternative<qdl::GroupPresentation>(any))
    throw qdl::Error("group-order needs a group presentation");
  qdl::GroupPresentation p = std::get<qdl::GroupPresentation>(any);
  if (power) {
    if (*power < 1) throw qdl::Error("--power must be >= 1");
    for (int g = 0; g < static_cast<int>(p.gens.size()); ++g) {
      qdl::GroupWord w;
      for (int k = 0; k < *power; ++k) w.push_back(qdl::GLetter{g, 1});
      p.relators.push_back(std::move(w));
    }
  }
  qdl::EnumCaps caps;
  caps.max_group_cosets = cap;
  qdl::GroupEnumResult r = qdl::enumerate_group(p, caps, &std::cerr);
  if (!r.finished) {
    std::cout << "overflow: cap " << r.cap << " reached after touching " << r.cosets_touched
              << " cosets\n";
    std::cout << qdl::outcome_overflow(r.cap).dump() << "\n";
    return 2;
  }
  std::cout << "order " << r.order << "\n";
  std::cout << qdl::outcome_finished(r.order).dump() << "\n";
  return 0;
}

qdl::PermGroup parse_group_spec(const std::string& spec) {
  auto call_arg = [&](const std::string& fn) -> std::optional<int> {
    if (spec.size() > fn.size() + 1 && spec.compare(0, fn.size() + 1, fn + "(") == 0 &&
        spec.back() == ')') {
      std::string a = spec.substr(fn.size() + 1, spec.size() - fn.size() - 2);
      for (char c : a)
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw qdl::Error("group spec '" + spec + "': argument must be an integer");
      if (a.empty()) throw qdl::Error("group spec '" + spec + "': missing argument");
      return std::stoi(a);
    }
    return std::nullopt;
  };
  if (auto n = call_arg("sym")) return qdl::symmetric_group(*n);
  if (auto m = call_arg("dihedral")) return qdl::dihedral_group(*m);
  if (auto n = call_arg("signed")) return qdl::signed_permutation_group(*n);
  throw qdl::Error("unknown group spec '" + spec + "' (want sym(n), dihedral(m), signed(n))");
}

int cmd_dehn(const std::string& group_spec, const std::string& subset, std::int64_t cap,
             const std::string& out) {
  qdl::PermGroup g = parse_group_spec(group_spec);
  std::vector<int> elems;
  if (subset == "transpositions")
    elems = qdl::transposition_elements(g);
  else if (subset == "generators")
    elems = qdl::generator_elements(g);
  else
    throw qdl::Error("--subset must be 'transpositions' or 'generators'");
  if (elems.empty()) throw qdl::Error("subset '" + subset + "' is empty in " + group_spec);
  qdl::FiniteQuandle q = qdl::dehn_quandle(g, elems, cap);
  std::ostream& info = (out == "-") ? std::cerr : std::cout;
  info << "dehn quandle of " << group_spec << " on " << subset << ": " << q.size()
       << " elements\n";
  if (!out.empty()) write_table(out, q);
  info << qdl::outcome_finished(q.size()).dump() << "\n";
  return 0;
}

int cmd_coxeter_quandle(const std::string& type, std::int64_t cap, const std::string& out) {
  qdl::FiniteQuandle q = qdl::coxeter_quandle(qdl::parse_coxeter_type(type), cap);
  std::ostream& info = (out == "-") ? std::cerr : std::cout;
  info << "coxeter quandle " << type << ": " << q.size() << " elements\n";
  if (!out.empty()) write_table(out, q);
  info << qdl::outcome_finished(q.size()).dump() << "\n";
  return 0;
}

int cmd_pquandle(int g, int n, std::int64_t cap, const std::string& out) {
  qdl::FiniteQuandle q = qdl::p_quandle(g, n, cap);
  if (out.empty() || out == "-") {
    // table on stdout so the command pipes into min-quotient and iso
    std::cerr << "p-quandle g=" << g << " n=" << n << ": " << q.size() << " elements\n";
    qdl::write_quandle(std::cout, q);
    return 0;
  }
  std::cout << "p-quandle g=" << g << " n=" << n << ": " << q.size() << " elements\n";
  write_table(out, q);
  std::cout << qdl::outcome_finished(q.size()).dump() << "\n";
  return 0;
}

int cmd_iso(const std::string& a, const std::string& b) {
  qdl::FiniteQuandle qa = read_quandle_arg(a);
  qdl::FiniteQuandle qb = read_quandle_arg(b);
  std::optional<std::vector<int>> m = qdl::find_isomorphism(qa, qb);
  if (!m) {
    std::cout << "not isomorphic\n";
    std::cout << json{{"isomorphic", false}}.dump() << "\n";
    return 1;
  }
  std::cout << "isomorphic\n";
  std::cout << json{{"isomorphic", true}, {"map", *m}}.dump() << "\n";
  return 0;
}

int cmd_min_quotient(const std::string& path, std::int64_t budget, int jobs) {
  qdl::FiniteQuandle q = read_quandle_arg(path);
  qdl::MinQuotientResult r = qdl::smallest_nontrivial_quotient(q, budget, jobs);
  if (r.smallest)
    std::cout << "smallest quotient of size >= 2: " << *r.smallest << "\n";
  else
    std::cout << "no quotient of size >= 2 (input is a point)\n";
  if (r.smallest_proper)
    std::cout << "smallest proper nontrivial quotient: " << *r.smallest_proper << "\n";
  else
    std::cout << "no proper congruence keeps two or more classes\n";
  json j{{"smallest", nullptr}, {"smallest_proper", nullptr}, {"explored", r.explored}};
  if (r.smallest) j["smallest"] = *r.smallest;
  if (r.smallest_proper) j["smallest_proper"] = *r.smallest_proper;
  std::cout << j.dump() << "\n";
  return 0;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int cmd_check_lemma(const std::string& which, int g, int p, std::int64_t cap) {
  if (!is_prime(p)) throw qdl::Error("--p must be prime");
  qdl::CentralizerReport r;
  if (which == "5.1")
    r = qdl::check_centralizer_shape(g, p, cap);
  else if (which == "5.2")
    r = qdl::check_centralizer_generators(g, p, cap);
  else
    throw qdl::Error("check-lemma takes 5.1 or 5.2");
  std::cout << "lemma " << r.lemma << " at g=" << r.g << ", p=" << r.p << ": group order "
            << r.group_order << ", centralizer order " << r.centralizer_order << ", "
            << (r.equal ? "sets agree" : "MISMATCH") << "\n";
  std::cout << qdl::report_to_json(r).dump() << "\n";
  return r.equal ? 0 : 1;
}

int cmd_env(const std::string& input, std::optional<int> n) {
  qdl::AnyPresentation any = resolve_any(input);
  if (!std::holds_alternative<qdl::QuandlePresentation>(any))
    throw qdl::Error("env needs a quandle presentation");
  if (n && *n < 2) throw qdl::Error("--n must be >= 2");
  std::cout << qdl::print_presentation(
                   qdl::env_presentation(std::get<qdl::QuandlePresentation>(any), n))
            << "\n";
  return 0;
}

struct Experiment {
  std::string id;
  int g;
  int n;
};

std::vector<Experiment> experiment_presets() {
  std::vector<Experiment> out;
  for (int g : {3, 4})
    for (int n : {3, 4, 6, 8, 12}) out.push_back({"g" + std::to_string(g) + "-n" + std::to_string(n), g, n});
  return out;
}

int cmd_experiments(const std::string& id, const std::string& file, std::int64_t cap) {
  auto presets = experiment_presets();
  if (id.empty()) {
    std::cout << "open finiteness experiments (outcome unknown; supply a genus-g nonseparating-"
                 "curve quandle presentation as a file):\n";
    for (const auto& e : presets)
      std::cout << "  " << e.id << "  genus " << e.g << ", power " << e.n
                << "   run: qdl experiments --id " << e.id << " --file <presentation>\n";
    return 0;
  }
  const Experiment* found = nullptr;
  for (const auto& e : presets)
    if (e.id == id) found = &e;
  if (!found) throw qdl::Error("unknown experiment id '" + id + "' (see: qdl experiments)");
  if (file.empty()) throw qdl::Error("experiment '" + id + "' needs --file <presentation>");
  return cmd_enumerate(file, found->n, cap, "");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quandle enumeration and verification toolkit"};
  app.require_subcommand(1);
  GlobalOpts gopts;
  app.add_option("--seed", gopts.seed, "seed for randomized subroutines (all commands are deterministic)");
  app.add_option("--jobs", gopts.jobs, "worker threads for parallelizable searches")
      ->check(CLI::Range(1, 256));

  int rc = 0;

  auto* v = app.add_subcommand("validate", "check a quandle table against the axioms");
  std::string v_path;
  v->add_option("table", v_path, "table json path or '-' for stdin")->required();
  v->callback([&] { rc = cmd_validate(v_path); });

  auto* en = app.add_subcommand("enumerate", "enumerate the quandle of a presentation");
  std::string en_input, en_out;
  std::optional<int> en_n;
  std::int64_t en_cap = 100000;
  en->add_option("presentation", en_input,
                 "builtin name, inline DSL, file path, or '-' for stdin")
      ->required();
  en->add_option("--n", en_n, "first force every pair of generators to satisfy x *^n y = x");
  en->add_option("--cap", en_cap, "maximum rows before reporting overflow");
  en->add_option("--out", en_out, "write the finished table json here ('-' = stdout)");
  en->callback([&] { rc = cmd_enumerate(en_input, en_n, en_cap, en_out); });

  auto* go = app.add_subcommand("group-order", "coset-enumerate a group presentation");
  std::string go_input;
  std::optional<int> go_power;
  std::int64_t go_cap = 1000000;
  go->add_option("presentation", go_input, "builtin name, inline DSL, file path, or '-'")
      ->required();
  go->add_option("--power", go_power, "append s^K = 1 for every generator s");
  go->add_option("--cap", go_cap, "maximum cosets before reporting overflow");
  go->callback([&] { rc = cmd_group_order(go_input, go_power, go_cap); });

  auto* dh = app.add_subcommand("dehn", "dehn quandle of a named finite group");
  std::string dh_group, dh_subset = "generators", dh_out;
  std::int64_t dh_cap = 100000;
  dh->add_option("--group", dh_group, "sym(n), dihedral(m), or signed(n)")->required();
  dh->add_option("--subset", dh_subset, "transpositions | generators");
  dh->add_option("--cap", dh_cap, "maximum quandle size");
  dh->add_option("--out", dh_out, "write the table json here ('-' = stdout)");
  dh->callback([&] { rc = cmd_dehn(dh_group, dh_subset, dh_cap, dh_out); });

  auto* cx = app.add_subcommand("coxeter-quandle", "reflection quandle of a finite coxeter type");
  std::string cx_type, cx_out;
  std::int64_t cx_cap = 100000;
  cx->add_option("type", cx_type, "A_n, B_n, I_2(m), or a matrix like [[1,3],[3,1]]")
      ->required();
  cx->add_option("--cap", cx_cap, "maximum quandle size");
  cx->add_option("--out", cx_out, "write the table json here ('-' = stdout)");
  cx->callback([&] { rc = cmd_coxeter_quandle(cx_type, cx_cap, cx_out); });

  auto* pq = app.add_subcommand("pquandle", "primitive-class quandle of genus g over Z_n");
  int pq_g = 1, pq_n = 2;
  std::int64_t pq_cap = 100000;
  std::string pq_out;
  pq->add_option("--g", pq_g, "genus (vectors have length 2g)")->required();
  pq->add_option("--n", pq_n, "modulus >= 2")->required();
  pq->add_option("--cap", pq_cap, "maximum element count");
  pq->add_option("--out", pq_out, "write the table here instead of stdout");
  pq->callback([&] { rc = cmd_pquandle(pq_g, pq_n, pq_cap, pq_out); });

  auto* is = app.add_subcommand("iso", "search for an isomorphism between two tables");
  std::string is_a, is_b;
  is->add_option("first", is_a, "table json path or '-'")->required();
  is->add_option("second", is_b, "table json path or '-'")->required();
  is->callback([&] { rc = cmd_iso(is_a, is_b); });

  auto* mq = app.add_subcommand("min-quotient", "smallest quotient sizes over all congruences");
  std::string mq_path = "-";
  std::int64_t mq_budget = 200000;
  mq->add_option("table", mq_path, "table json path or '-' for stdin");
  mq->add_option("--budget", mq_budget, "congruence exploration budget");
  mq->callback([&] { rc = cmd_min_quotient(mq_path, mq_budget, gopts.jobs); });

  auto* sy = app.add_subcommand("symp", "symplectic-group checks");
  auto* cl = sy->add_subcommand("check-lemma", "verify a centralizer statement by brute force");
  std::string cl_which;
  int cl_g = 1, cl_p = 2;
  std::int64_t cl_cap = 200000;
  cl->add_option("which", cl_which, "5.1 (shape predicate) or 5.2 (generating set)")->required();
  cl->add_option("--g", cl_g, "genus")->required();
  cl->add_option("--p", cl_p, "prime modulus")->required();
  cl->add_option("--cap", cl_cap, "maximum group size to enumerate");
  sy->require_subcommand(1);
  cl->callback([&] { rc = cmd_check_lemma(cl_which, cl_g, cl_p, cl_cap); });

  auto* ev = app.add_subcommand("env", "print the enveloping group presentation");
  std::string ev_input;
  std::optional<int> ev_n;
  ev->add_option("presentation", ev_input, "builtin name, inline DSL, file path, or '-'")
      ->required();
  ev->add_option("--n", ev_n, "also add the n-power commutator relators");
  ev->callback([&] { rc = cmd_env(ev_input, ev_n); });

  auto* ex = app.add_subcommand("experiments", "pre-wired open finiteness probes");
  std::string ex_id, ex_file;
  std::int64_t ex_cap = 100000;
  ex->add_option("--id", ex_id, "experiment id (omit to list)");
  ex->add_option("--file", ex_file, "externally supplied presentation file");
  ex->add_option("--cap", ex_cap, "row cap for the probe");
  ex->callback([&] { rc = cmd_experiments(ex_id, ex_file, ex_cap); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const qdl::CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
