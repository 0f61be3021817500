#pragma once

#include <cctype>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "qdl/errors.hpp"
#include "qdl/presentation.hpp"
#include "qdl/words.hpp"

namespace qdl {

/**
 * Presentation DSL:
 *
 *   presentation := ("quandle" | "group") "<" gen-list "|" rel-list? ">"
 *   gen-list     := ident ("," ident)*
 *   rel-list     := rel (";" rel)*
 *   quandle rel  := qword "=" qword
 *   qword        := qfactor (op qfactor)*        op := "*" | "*-"
 *   qfactor      := ident | "(" qword ")"
 *   group rel    := gword                        (a relator, = identity)
 *   gword        := (ident ("^-1" | "^" int)?)+
 *
 * Whitespace-insensitive; "#" starts a line comment. Parenthesized quandle
 * subwords are accepted and rewritten to the left-associated normal form,
 * so printed output always stays inside the flat grammar.
 */

namespace detail {

enum class Tok { Ident, Int, LAngle, RAngle, Comma, Pipe, Semi, Eq, Star, StarInv, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  long long value = 0;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_ws();
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= src_.size()) {
      tok_.kind = Tok::End;
      tok_.text.clear();
      return;
    }
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        id += src_[pos_];
        bump();
      }
      tok_.kind = Tok::Ident;
      tok_.text = std::move(id);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      read_int(false);
      return;
    }
    switch (c) {
      case '<': bump(); tok_.kind = Tok::LAngle; return;
      case '>': bump(); tok_.kind = Tok::RAngle; return;
      case ',': bump(); tok_.kind = Tok::Comma; return;
      case '|': bump(); tok_.kind = Tok::Pipe; return;
      case ';': bump(); tok_.kind = Tok::Semi; return;
      case '=': bump(); tok_.kind = Tok::Eq; return;
      case '(': bump(); tok_.kind = Tok::LParen; return;
      case ')': bump(); tok_.kind = Tok::RParen; return;
      case '*':
        bump();
        if (pos_ < src_.size() && src_[pos_] == '-') {
          bump();
          tok_.kind = Tok::StarInv;
        } else {
          tok_.kind = Tok::Star;
        }
        return;
      case '^': bump(); tok_.kind = Tok::Caret; return;
      case '-':
        // negative integer literal (only ever wanted after '^')
        if (pos_ + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
          bump();
          read_int(true);
          return;
        }
        throw SyntaxError(line_, col_, "unexpected '-'");
      default:
        throw SyntaxError(line_, col_, std::string("unexpected character '") + c + "'");
    }
  }

  void read_int(bool neg) {
    long long v = 0;
    std::string text = neg ? "-" : "";
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      v = v * 10 + (src_[pos_] - '0');
      if (v > 1000000) throw SyntaxError(line_, col_, "integer literal too large");
      text += src_[pos_];
      bump();
    }
    tok_.kind = Tok::Int;
    tok_.value = neg ? -v : v;
    tok_.text = std::move(text);
  }

  void skip_ws() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

class PresentationParser {
 public:
  explicit PresentationParser(const std::string& src) : lex_(src) {}

  std::variant<QuandlePresentation, GroupPresentation> parse() {
    Token kw = expect(Tok::Ident, "'quandle' or 'group'");
    bool is_quandle;
    if (kw.text == "quandle")
      is_quandle = true;
    else if (kw.text == "group")
      is_quandle = false;
    else
      throw SyntaxError(kw.line, kw.col, "expected 'quandle' or 'group', got '" + kw.text + "'");
    expect(Tok::LAngle, "'<'");
    std::vector<std::string> gens = parse_gen_list();
    for (std::size_t i = 0; i < gens.size(); ++i) gen_index_.emplace(gens[i], static_cast<int>(i));
    expect(Tok::Pipe, "'|'");
    if (is_quandle) {
      QuandlePresentation p;
      p.gens = std::move(gens);
      if (lex_.peek().kind != Tok::RAngle) {
        p.rels.push_back(parse_qrel());
        while (lex_.peek().kind == Tok::Semi) {
          lex_.next();
          p.rels.push_back(parse_qrel());
        }
      }
      expect(Tok::RAngle, "'>'");
      expect(Tok::End, "end of input");
      return p;
    }
    GroupPresentation g;
    g.gens = std::move(gens);
    if (lex_.peek().kind != Tok::RAngle) {
      g.relators.push_back(parse_gword());
      while (lex_.peek().kind == Tok::Semi) {
        lex_.next();
        g.relators.push_back(parse_gword());
      }
    }
    expect(Tok::RAngle, "'>'");
    expect(Tok::End, "end of input");
    return g;
  }

 private:
  Token expect(Tok kind, const std::string& what) {
    Token t = lex_.next();
    if (t.kind != kind)
      throw SyntaxError(t.line, t.col, "expected " + what +
                                           (t.text.empty() ? "" : ", got '" + t.text + "'"));
    return t;
  }

  std::vector<std::string> parse_gen_list() {
    std::vector<std::string> gens;
    Token first = expect(Tok::Ident, "generator name");
    gens.push_back(first.text);
    while (lex_.peek().kind == Tok::Comma) {
      lex_.next();
      Token t = expect(Tok::Ident, "generator name");
      for (const std::string& g : gens)
        if (g == t.text) throw SyntaxError(t.line, t.col, "duplicate generator '" + t.text + "'");
      gens.push_back(t.text);
    }
    return gens;
  }

  int gen_of(const Token& t) const {
    auto it = gen_index_.find(t.text);
    if (it == gen_index_.end()) throw UnknownGenerator(t.text, t.line, t.col);
    return it->second;
  }

  std::shared_ptr<QExpr> parse_qfactor() {
    Token t = lex_.next();
    if (t.kind == Tok::Ident) return QExpr::leaf(gen_of(t));
    if (t.kind == Tok::LParen) {
      auto e = parse_qexpr();
      expect(Tok::RParen, "')'");
      return e;
    }
    throw SyntaxError(t.line, t.col, "expected generator or '('");
  }

  std::shared_ptr<QExpr> parse_qexpr() {
    auto e = parse_qfactor();
    while (lex_.peek().kind == Tok::Star || lex_.peek().kind == Tok::StarInv) {
      Token op = lex_.next();
      auto r = parse_qfactor();
      e = QExpr::node(std::move(e), std::move(r), op.kind == Tok::Star ? 1 : -1);
    }
    return e;
  }

  QuandleRelation parse_qrel() {
    auto l = parse_qexpr();
    expect(Tok::Eq, "'='");
    auto r = parse_qexpr();
    return QuandleRelation{normalize(*l), normalize(*r)};
  }

  GroupWord parse_gword() {
    GroupWord w;
    Token first = lex_.peek();
    while (lex_.peek().kind == Tok::Ident) {
      Token t = lex_.next();
      int g = gen_of(t);
      long long e = 1;
      if (lex_.peek().kind == Tok::Caret) {
        lex_.next();
        Token n = expect(Tok::Int, "integer exponent");
        e = n.value;
      }
      const std::int8_t sign = e >= 0 ? std::int8_t{1} : std::int8_t{-1};
      for (long long i = 0; i < (e >= 0 ? e : -e); ++i) w.push_back(GLetter{g, sign});
    }
    if (w.empty())
      throw SyntaxError(first.line, first.col, "expected a relator word");
    return w;
  }

  Lexer lex_;
  std::unordered_map<std::string, int> gen_index_;
};

}  // namespace detail

inline std::variant<QuandlePresentation, GroupPresentation> parse_presentation(
    const std::string& text) {
  return detail::PresentationParser(text).parse();
}

inline QuandlePresentation parse_quandle_presentation(const std::string& text) {
  auto v = parse_presentation(text);
  if (auto* p = std::get_if<QuandlePresentation>(&v)) return *p;
  throw Error("expected a quandle presentation");
}

inline GroupPresentation parse_group_presentation(const std::string& text) {
  auto v = parse_presentation(text);
  if (auto* p = std::get_if<GroupPresentation>(&v)) return *p;
  throw Error("expected a group presentation");
}

}  // namespace qdl
