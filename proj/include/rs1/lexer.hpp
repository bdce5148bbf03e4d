#pragma once

// Hand-rolled lexer. Identifiers are ASCII alphanumeric plus underscore,
// comments run from "--" to end of line, source is treated as bytes (UTF-8
// passes through inside comments only).

#include <cctype>
#include <string>
#include <vector>

#include "rs1/ast.hpp"
#include "rs1/diagnostics.hpp"

namespace rs1 {

enum class Tok {
  Ident,     // plain identifier
  TickIdent, // 'name
  KwData, KwCodata, KwIn, KwFn, KwLet, KwLetStar, KwCase, KwOf, KwLower,
  KwFold, KwSFold, KwUnfold, KwSUnfold, KwUnit,
  Proj,      // proj1 / proj2 (num = 1|2)
  Inj,       // injN (num = N >= 1)
  LParen, RParen, LBracket, RBracket,
  Comma, Semi, Pipe, Colon, Eq, Plus, Star, Arrow, DArrow,
  Eof,
};

struct Token {
  Tok kind;
  std::string text;
  int num = 0;
  Span span;
};

inline const char* tok_name(Tok k) {
  switch (k) {
    case Tok::Ident: return "identifier";
    case Tok::TickIdent: return "'identifier";
    case Tok::KwData: return "data";
    case Tok::KwCodata: return "codata";
    case Tok::KwIn: return "in";
    case Tok::KwFn: return "fn";
    case Tok::KwLet: return "let";
    case Tok::KwLetStar: return "let*";
    case Tok::KwCase: return "case";
    case Tok::KwOf: return "of";
    case Tok::KwLower: return "lower";
    case Tok::KwFold: return "fold";
    case Tok::KwSFold: return "sfold";
    case Tok::KwUnfold: return "unfold";
    case Tok::KwSUnfold: return "sunfold";
    case Tok::KwUnit: return "unit";
    case Tok::Proj: return "proj";
    case Tok::Inj: return "inj";
    case Tok::LParen: return "(";
    case Tok::RParen: return ")";
    case Tok::LBracket: return "[";
    case Tok::RBracket: return "]";
    case Tok::Comma: return ",";
    case Tok::Semi: return ";";
    case Tok::Pipe: return "|";
    case Tok::Colon: return ":";
    case Tok::Eq: return "=";
    case Tok::Plus: return "+";
    case Tok::Star: return "*";
    case Tok::Arrow: return "->";
    case Tok::DArrow: return "=>";
    case Tok::Eof: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string src) : src_(std::move(src)) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      Span sp{line_, col_};
      if (eof()) {
        out.push_back({Tok::Eof, "", 0, sp});
        return out;
      }
      char c = peek();
      if (is_ident_start(c)) {
        out.push_back(lex_word(sp));
        continue;
      }
      if (c == '\'') {
        advance();
        if (eof() || !is_ident_start(peek()))
          throw ParseError("expected identifier after '", sp, {"identifier"});
        std::string w = take_ident();
        out.push_back({Tok::TickIdent, w, 0, sp});
        continue;
      }
      advance();
      switch (c) {
        case '(': out.push_back({Tok::LParen, "(", 0, sp}); break;
        case ')': out.push_back({Tok::RParen, ")", 0, sp}); break;
        case '[': out.push_back({Tok::LBracket, "[", 0, sp}); break;
        case ']': out.push_back({Tok::RBracket, "]", 0, sp}); break;
        case ',': out.push_back({Tok::Comma, ",", 0, sp}); break;
        case ';': out.push_back({Tok::Semi, ";", 0, sp}); break;
        case '|': out.push_back({Tok::Pipe, "|", 0, sp}); break;
        case ':': out.push_back({Tok::Colon, ":", 0, sp}); break;
        case '+': out.push_back({Tok::Plus, "+", 0, sp}); break;
        case '*': out.push_back({Tok::Star, "*", 0, sp}); break;
        case '=':
          if (!eof() && peek() == '>') {
            advance();
            out.push_back({Tok::DArrow, "=>", 0, sp});
          } else {
            out.push_back({Tok::Eq, "=", 0, sp});
          }
          break;
        case '-':
          if (!eof() && peek() == '>') {
            advance();
            out.push_back({Tok::Arrow, "->", 0, sp});
          } else {
            throw ParseError("stray '-' (use -- for comments, -> for arrows)", sp);
          }
          break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", sp);
      }
    }
  }

 private:
  std::string src_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;

  bool eof() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  char peek2() const { return pos_ + 1 < src_.size() ? src_[pos_ + 1] : '\0'; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_trivia() {
    for (;;) {
      while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
      if (!eof() && peek() == '-' && peek2() == '-') {
        while (!eof() && peek() != '\n') advance();
        continue;
      }
      return;
    }
  }

  // '$' is accepted so desugarer-generated names stay reparseable; user code
  // should not use it.
  static bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
  }
  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
  }

  std::string take_ident() {
    size_t start = pos_;
    while (!eof() && is_ident_char(peek())) advance();
    return src_.substr(start, pos_ - start);
  }

  Token lex_word(Span sp) {
    std::string w = take_ident();
    // let* is a single keyword
    if (w == "let" && !eof() && peek() == '*') {
      advance();
      return {Tok::KwLetStar, "let*", 0, sp};
    }
    if (w == "data") return {Tok::KwData, w, 0, sp};
    if (w == "codata") return {Tok::KwCodata, w, 0, sp};
    if (w == "in") return {Tok::KwIn, w, 0, sp};
    if (w == "fn") return {Tok::KwFn, w, 0, sp};
    if (w == "let") return {Tok::KwLet, w, 0, sp};
    if (w == "case") return {Tok::KwCase, w, 0, sp};
    if (w == "of") return {Tok::KwOf, w, 0, sp};
    if (w == "lower") return {Tok::KwLower, w, 0, sp};
    if (w == "fold") return {Tok::KwFold, w, 0, sp};
    if (w == "sfold") return {Tok::KwSFold, w, 0, sp};
    if (w == "unfold") return {Tok::KwUnfold, w, 0, sp};
    if (w == "sunfold") return {Tok::KwSUnfold, w, 0, sp};
    if (w == "unit") return {Tok::KwUnit, w, 0, sp};
    if (w == "proj1") return {Tok::Proj, w, 1, sp};
    if (w == "proj2") return {Tok::Proj, w, 2, sp};
    if (w.size() > 3 && w.compare(0, 3, "inj") == 0) {
      bool digits = true;
      for (size_t i = 3; i < w.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(w[i]))) digits = false;
      if (digits && w[3] != '0') {
        int n = std::stoi(w.substr(3));
        return {Tok::Inj, w, n, sp};
      }
    }
    return {Tok::Ident, w, 0, sp};
  }
};

inline std::vector<Token> lex(const std::string& src) { return Lexer(src).run(); }

}  // namespace rs1
