#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "qdl/coxeter.hpp"
#include "qdl/errors.hpp"
#include "qdl/parser.hpp"
#include "qdl/presentation.hpp"

namespace qdl {

using AnyPresentation = std::variant<QuandlePresentation, GroupPresentation>;

/** Knot quandle of the trefoil on two generators. */
inline QuandlePresentation trefoil_presentation() {
  return parse_quandle_presentation("quandle< a, b | a*b*a = b ; b*a*b = a >");
}

/**
 * Parse a Coxeter type spec: named types "A_n"/"An", "B_n"/"Bn",
 * "I_2(m)"/"I2(m)", or an explicit matrix as a JSON array of rows like
 * [[1,3],[3,1]].
 */
inline CoxeterMatrix parse_coxeter_type(const std::string& spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error("empty coxeter type");
  if (s[0] == '[') {
    CoxeterMatrix cm;
    try {
      cm.m = nlohmann::json::parse(s).get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(std::string("coxeter matrix literal: ") + e.what());
    }
    validate_coxeter_matrix(cm);
    return cm;
  }
  auto tail_int = [&](std::size_t from, std::size_t to) {
    if (from >= to) throw Error("coxeter type '" + spec + "': missing rank");
    for (std::size_t i = from; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw Error("coxeter type '" + spec + "': bad rank");
    return std::stoi(s.substr(from, to - from));
  };
  if (s[0] == 'A' || s[0] == 'B') {
    std::size_t from = (s.size() > 1 && s[1] == '_') ? 2 : 1;
    int n = tail_int(from, s.size());
    return s[0] == 'A' ? coxeter_A(n) : coxeter_B(n);
  }
  if (s[0] == 'I') {
    std::size_t at = 1;
    if (at < s.size() && s[at] == '_') ++at;
    if (at >= s.size() || s[at] != '2')
      throw Error("coxeter type '" + spec + "': only I_2(m) is supported");
    ++at;
    if (at >= s.size() || s[at] != '(' || s.back() != ')')
      throw Error("coxeter type '" + spec + "': expected I_2(m)");
    return coxeter_I2(tail_int(at + 1, s.size() - 1));
  }
  throw UnsupportedType("unknown coxeter type '" + spec + "'");
}

/**
 * Resolve a built-in presentation name: trefoil-quandle, braid(n),
 * artin(type), coxeter(type). Returns nullopt when the string is not a
 * built-in (the caller then treats it as DSL text or a file). braid(n) is a
 * group presentation; artin/coxeter name the quandles of those groups (the
 * conjugacy classes of the standard generators), so they resolve to quandle
 * presentations.
 */
inline std::optional<AnyPresentation> resolve_builtin(const std::string& name) {
  std::string s;
  for (char c : name)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "trefoil-quandle") return AnyPresentation{trefoil_presentation()};
  auto call_arg = [&](const std::string& fn) -> std::optional<std::string> {
    if (s.size() > fn.size() + 1 && s.compare(0, fn.size() + 1, fn + "(") == 0 && s.back() == ')')
      return s.substr(fn.size() + 1, s.size() - fn.size() - 2);
    return std::nullopt;
  };
  if (auto a = call_arg("braid")) {
    for (char c : *a)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("braid(n): n must be a positive integer");
    if (a->empty()) throw Error("braid(n): n must be a positive integer");
    return AnyPresentation{braid_presentation(std::stoi(*a))};
  }
  if (auto a = call_arg("artin"))
    return AnyPresentation{artin_quandle_presentation(parse_coxeter_type(*a))};
  if (auto a = call_arg("coxeter"))
    return AnyPresentation{coxeter_quandle_presentation(parse_coxeter_type(*a))};
  return std::nullopt;
}

}  // namespace qdl
