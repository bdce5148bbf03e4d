#pragma once

// Recursive-descent parser for the rs1 surface syntax.
//
// Constructor and raw constructor/destructor names are resolved against the
// declarations already parsed, so `Succ e`, `c_nat e`, `'Succ e` all become
// dedicated nodes and forward references to undeclared types are rejected
// while parsing (the declaration ordering requirement).

#include <map>
#include <set>
#include <string>
#include <vector>

#include "rs1/ast.hpp"
#include "rs1/lexer.hpp"

namespace rs1 {

class Parser {
 public:
  Parser(std::string src, std::vector<Decl> predeclared = {})
      : toks_(lex(std::move(src))) {
    for (auto& d : predeclared) note_decl(d);
    predeclared_ = std::move(predeclared);
  }

  Program parse_program() {
    Program p;
    p.decls = predeclared_;
    while (at(Tok::KwData) || at(Tok::KwCodata)) {
      p.decls.push_back(parse_decl());
      if (at(Tok::Semi)) next();
    }
    expect(Tok::KwIn, "in");
    p.body = parse_expr();
    expect(Tok::Eof, "end of input");
    return p;
  }

  Decl parse_decl() {
    Span sp = cur().span;
    bool codata = at(Tok::KwCodata);
    if (!codata) expect(Tok::KwData, "data");
    else next();
    Token name = expect(Tok::Ident, "type name");
    if (types_.count(name.text))
      throw ParseError("duplicate declaration of type '" + name.text + "'", name.span);
    Decl d;
    d.codata = codata;
    d.name = name.text;
    d.span = sp;
    expect(Tok::Eq, "=");
    current_decl_ = d.name;
    d.summands.push_back(parse_summand());
    while (at(Tok::Pipe)) {
      next();
      d.summands.push_back(parse_summand());
    }
    current_decl_.clear();
    note_decl(d);
    return d;
  }

  TermPtr parse_expr() {
    Span sp = cur().span;
    switch (cur().kind) {
      case Tok::KwFn: {
        next();
        expect(Tok::LParen, "(");
        Token x = expect(Tok::Ident, "parameter name");
        check_bindable(x);
        expect(Tok::Colon, ":");
        TyPtr ann = parse_type();
        expect(Tok::RParen, ")");
        expect(Tok::DArrow, "=>");
        TermPtr body = parse_expr();
        return mk_abs(x.text, ann, body, sp);
      }
      case Tok::KwLet:
      case Tok::KwLetStar: {
        bool star = at(Tok::KwLetStar);
        next();
        std::vector<LetBind> binds;
        binds.push_back(parse_binding());
        while (at(Tok::Semi)) {
          next();
          binds.push_back(parse_binding());
        }
        expect(Tok::KwIn, "in");
        TermPtr body = parse_expr();
        return mk_let(star, std::move(binds), body, sp);
      }
      case Tok::KwCase: {
        next();
        TermPtr scrut = parse_expr();
        expect(Tok::KwOf, "of");
        std::vector<CaseArm> arms;
        int expect_idx = 1;
        arms.push_back(parse_arm(expect_idx++));
        while (at(Tok::Pipe)) {
          next();
          arms.push_back(parse_arm(expect_idx++));
        }
        if (arms.size() < 2)
          throw ParseError("case needs at least two arms", sp, {"|"});
        return mk_case(scrut, std::move(arms), sp);
      }
      case Tok::KwLower: {
        next();
        return mk_lower(parse_app(), sp);
      }
      default:
        return parse_app();
    }
  }

  TyPtr parse_type() {
    TyPtr lhs = parse_type_sum();
    if (at(Tok::Arrow)) {
      next();
      return ty_arrow(lhs, parse_type());
    }
    return lhs;
  }

  // Entry points for REPL-style fragments.
  TermPtr parse_expr_only() {
    TermPtr e = parse_expr();
    expect(Tok::Eof, "end of input");
    return e;
  }
  Decl parse_decl_only() {
    Decl d = parse_decl();
    if (at(Tok::Semi)) next();
    expect(Tok::Eof, "end of input");
    return d;
  }
  bool looking_at_decl() const { return at(Tok::KwData) || at(Tok::KwCodata); }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
  std::vector<Decl> predeclared_;
  std::set<std::string> types_;
  std::set<std::string> ctors_;
  std::string current_decl_;  // name being declared, usable in its own payloads

  const Token& cur() const { return toks_[pos_]; }
  bool at(Tok k) const { return cur().kind == k; }
  Token next() { return toks_[pos_++]; }

  Token expect(Tok k, const std::string& what) {
    if (!at(k))
      throw ParseError("expected " + what + " but found '" +
                           (cur().kind == Tok::Eof ? "end of input" : cur().text) + "'",
                       cur().span, {what});
    return next();
  }

  void note_decl(const Decl& d) {
    types_.insert(d.name);
    for (auto& s : d.summands) ctors_.insert(s.ctor);
  }

  bool known_type(const std::string& n) const {
    return types_.count(n) > 0 || n == current_decl_;
  }

  // c_foo / d_foo with foo declared are reserved for the raw
  // constructor/destructor of foo.
  bool is_raw_ref(const std::string& w, bool& is_destr, std::string& tyname) const {
    if (w.size() < 3 || w[1] != '_') return false;
    if (w[0] != 'c' && w[0] != 'd') return false;
    std::string rest = w.substr(2);
    if (!known_type(rest)) return false;
    is_destr = (w[0] == 'd');
    tyname = rest;
    return true;
  }

  void check_bindable(const Token& x) {
    bool is_destr;
    std::string tyname;
    if (ctors_.count(x.text) || is_raw_ref(x.text, is_destr, tyname))
      throw ParseError("'" + x.text + "' is reserved (constructor/destructor name)", x.span);
  }

  Summand parse_summand() {
    Token c = expect(Tok::Ident, "constructor name");
    if (ctors_.count(c.text))
      throw ParseError("duplicate constructor name '" + c.text + "'", c.span);
    Summand s;
    s.ctor = c.text;
    s.span = c.span;
    if (at(Tok::KwOf)) {
      next();
      s.payload = parse_type();
    } else {
      s.payload = ty_unit();
    }
    return s;
  }

  LetBind parse_binding() {
    Token x = expect(Tok::Ident, "binding name");
    check_bindable(x);
    expect(Tok::Colon, ":");
    TyPtr ann = parse_type();
    expect(Tok::Eq, "=");
    TermPtr e = parse_expr();
    return LetBind{x.text, ann, e};
  }

  CaseArm parse_arm(int expect_idx) {
    Token inj = expect(Tok::Inj, "inj pattern");
    if (inj.num != expect_idx)
      throw ParseError("case arms must be inj1, inj2, ... in order (found " + inj.text + ")",
                       inj.span);
    Token x = expect(Tok::Ident, "pattern variable");
    check_bindable(x);
    expect(Tok::DArrow, "=>");
    TermPtr body = parse_expr();
    return CaseArm{x.text, body};
  }

  TyPtr parse_type_sum() {
    TyPtr lhs = parse_type_prod();
    if (at(Tok::Plus)) {
      next();
      return ty_sum(lhs, parse_type_sum());  // right-nested, matching the inj encoding
    }
    return lhs;
  }

  TyPtr parse_type_prod() {
    TyPtr lhs = parse_type_atom();
    if (at(Tok::Star)) {
      next();
      return ty_prod(lhs, parse_type_prod());
    }
    return lhs;
  }

  TyPtr parse_type_atom() {
    Span sp = cur().span;
    if (at(Tok::KwUnit)) {
      next();
      return ty_unit();
    }
    if (at(Tok::LParen)) {
      next();
      TyPtr t = parse_type();
      expect(Tok::RParen, ")");
      return t;
    }
    if (at(Tok::Ident)) {
      Token t = next();
      if (!known_type(t.text))
        throw ParseError("reference to undeclared type '" + t.text + "'", t.span,
                         {"declared type name"});
      return ty_base(t.text, false);
    }
    if (at(Tok::TickIdent)) {
      Token t = next();
      if (!known_type(t.text))
        throw ParseError("reference to undeclared type '" + t.text + "'", t.span,
                         {"declared type name"});
      return ty_base(t.text, true);
    }
    throw ParseError("expected type", sp, {"unit", "type name", "("});
  }

  bool starts_atom() const {
    switch (cur().kind) {
      case Tok::LParen:
      case Tok::Ident:
      case Tok::TickIdent:
      case Tok::Proj:
      case Tok::Inj:
      case Tok::KwFold:
      case Tok::KwSFold:
      case Tok::KwUnfold:
      case Tok::KwSUnfold:
        return true;
      default:
        return false;
    }
  }

  TermPtr parse_app() {
    Span sp = cur().span;
    if (!starts_atom()) throw ParseError("expected expression", sp, {"expression"});
    TermPtr head = parse_atom();
    // A bare constructor absorbs the next atom as its payload.
    if (head->kind == TermKind::Ctor && !head->t0 && starts_atom()) {
      TermPtr payload = parse_atom();
      head = mk_ctor(head->name, head->safe, payload, head->span);
    }
    while (starts_atom()) head = mk_app(head, parse_atom(), sp);
    return head;
  }

  TermPtr parse_atom() {
    Span sp = cur().span;
    switch (cur().kind) {
      case Tok::LParen: {
        next();
        if (at(Tok::RParen)) {
          next();
          return mk_unit(sp);
        }
        TermPtr e = parse_expr();
        if (at(Tok::Comma)) {
          next();
          TermPtr e2 = parse_expr();
          expect(Tok::RParen, ")");
          return mk_pair(e, e2, sp);
        }
        expect(Tok::RParen, ")");
        return e;
      }
      case Tok::Proj: {
        Token t = next();
        return mk_proj(t.num, parse_atom(), sp);
      }
      case Tok::Inj: {
        Token t = next();
        if (t.num > 2)
          throw ParseError("only inj1/inj2 may appear in expressions (injN is for case arms)",
                           t.span);
        return mk_inj(t.num, parse_atom(), sp);
      }
      case Tok::KwFold:
      case Tok::KwSFold:
      case Tok::KwUnfold:
      case Tok::KwSUnfold: {
        Token kw = next();
        bool ramified = kw.kind == Tok::KwSFold || kw.kind == Tok::KwSUnfold;
        bool unfold = kw.kind == Tok::KwUnfold || kw.kind == Tok::KwSUnfold;
        expect(Tok::LBracket, "[");
        Token ty = expect(Tok::Ident, "type name");
        if (!known_type(ty.text))
          throw ParseError("reference to undeclared type '" + ty.text + "'", ty.span);
        expect(Tok::RBracket, "]");
        TermPtr step = parse_atom();
        if (!starts_atom())
          throw ParseError(kw.text + " expects a step function and a subject", cur().span,
                           {"expression"});
        TermPtr subj = parse_atom();
        return unfold ? mk_unfold(ty.text, ramified, step, subj, sp)
                      : mk_fold(ty.text, ramified, step, subj, sp);
      }
      case Tok::Ident: {
        Token t = next();
        bool is_destr;
        std::string tyname;
        if (is_raw_ref(t.text, is_destr, tyname))
          return is_destr ? mk_destrref(tyname, false, sp) : mk_constref(tyname, false, sp);
        if (ctors_.count(t.text)) return mk_ctor(t.text, false, nullptr, sp);
        return mk_var(t.text, sp);
      }
      case Tok::TickIdent: {
        Token t = next();
        bool is_destr;
        std::string tyname;
        if (is_raw_ref(t.text, is_destr, tyname))
          return is_destr ? mk_destrref(tyname, true, sp) : mk_constref(tyname, true, sp);
        if (ctors_.count(t.text)) return mk_ctor(t.text, true, nullptr, sp);
        throw ParseError("unknown safe constructor '" + t.text + "'", t.span);
      }
      default:
        throw ParseError("expected expression", sp, {"expression"});
    }
  }
};

inline Program parse_program(const std::string& src) { return Parser(src).parse_program(); }

}  // namespace rs1
