#pragma once

// Canonical pretty-printing for types, terms, and programs. Output reparses
// to an equal AST (spans aside) and is the project's canonical formatting.

#include <sstream>
#include <string>

#include "rs1/ast.hpp"

namespace rs1 {

// Type precedence: 0 arrow, 1 sum, 2 prod, 3 atom.
inline void pretty_ty_rec(const TyPtr& t, int prec, std::ostream& os) {
  switch (t->kind) {
    case TyKind::Unit:
      os << "unit";
      return;
    case TyKind::Base:
      if (t->safe) os << '\'';
      os << t->base;
      return;
    case TyKind::Arrow: {
      bool paren = prec > 0;
      if (paren) os << '(';
      pretty_ty_rec(t->a, 1, os);
      os << " -> ";
      pretty_ty_rec(t->b, 0, os);
      if (paren) os << ')';
      return;
    }
    case TyKind::Sum: {
      bool paren = prec > 1;
      if (paren) os << '(';
      pretty_ty_rec(t->a, 2, os);
      os << " + ";
      pretty_ty_rec(t->b, 1, os);
      if (paren) os << ')';
      return;
    }
    case TyKind::Prod: {
      bool paren = prec > 2;
      if (paren) os << '(';
      pretty_ty_rec(t->a, 3, os);
      os << " * ";
      pretty_ty_rec(t->b, 2, os);
      if (paren) os << ')';
      return;
    }
  }
}

inline std::string pretty(const TyPtr& t) {
  std::ostringstream os;
  pretty_ty_rec(t, 0, os);
  return os.str();
}

// Term precedence: 0 open forms (fn/let/case/lower), 1 application, 2 atoms.
inline void pretty_term_rec(const TermPtr& t, int prec, std::ostream& os) {
  auto open = [&](bool need) { if (need) os << '('; };
  auto close = [&](bool need) { if (need) os << ')'; };
  switch (t->kind) {
    case TermKind::Var:
      os << t->name;
      return;
    case TermKind::Unit:
      os << "()";
      return;
    case TermKind::Pair:
      os << '(';
      pretty_term_rec(t->t0, 0, os);
      os << ", ";
      pretty_term_rec(t->t1, 0, os);
      os << ')';
      return;
    case TermKind::ConstRef:
      if (t->safe) os << '\'';
      os << "c_" << t->name;
      return;
    case TermKind::DestrRef:
      if (t->safe) os << '\'';
      os << "d_" << t->name;
      return;
    case TermKind::App: {
      bool paren = prec > 1;
      open(paren);
      pretty_term_rec(t->t0, 1, os);
      os << ' ';
      pretty_term_rec(t->t1, 2, os);
      close(paren);
      return;
    }
    case TermKind::Proj:
    case TermKind::Inj: {
      bool paren = prec > 1;
      open(paren);
      os << (t->kind == TermKind::Proj ? "proj" : "inj") << t->idx << ' ';
      pretty_term_rec(t->t0, 2, os);
      close(paren);
      return;
    }
    case TermKind::Ctor: {
      if (!t->t0) {
        if (t->safe) os << '\'';
        os << t->name;
        return;
      }
      bool paren = prec > 1;
      open(paren);
      if (t->safe) os << '\'';
      os << t->name << ' ';
      pretty_term_rec(t->t0, 2, os);
      close(paren);
      return;
    }
    case TermKind::Fold:
    case TermKind::Unfold: {
      bool paren = prec > 1;
      open(paren);
      os << (t->kind == TermKind::Fold ? (t->safe ? "sfold" : "fold")
                                       : (t->safe ? "sunfold" : "unfold"));
      os << '[' << t->name << "] ";
      pretty_term_rec(t->t0, 2, os);
      os << ' ';
      pretty_term_rec(t->t1, 2, os);
      close(paren);
      return;
    }
    case TermKind::Lower: {
      bool paren = prec > 0;
      open(paren);
      os << "lower ";
      pretty_term_rec(t->t0, 1, os);
      close(paren);
      return;
    }
    case TermKind::Abs: {
      bool paren = prec > 0;
      open(paren);
      os << "fn (" << t->name << " : ";
      pretty_ty_rec(t->ann, 0, os);
      os << ") => ";
      pretty_term_rec(t->t0, 0, os);
      close(paren);
      return;
    }
    case TermKind::Let: {
      bool paren = prec > 0;
      open(paren);
      os << (t->star ? "let* " : "let ");
      bool first = true;
      for (auto& b : t->binds) {
        if (!first) os << "; ";
        first = false;
        os << b.var << " : ";
        pretty_ty_rec(b.ann, 0, os);
        os << " = ";
        pretty_term_rec(b.expr, 0, os);
      }
      os << " in ";
      pretty_term_rec(t->t0, 0, os);
      close(paren);
      return;
    }
    case TermKind::Case: {
      bool paren = prec > 0;
      open(paren);
      os << "case ";
      pretty_term_rec(t->t0, 1, os);
      os << " of ";
      for (size_t i = 0; i < t->arms.size(); ++i) {
        if (i) os << " | ";
        os << "inj" << (i + 1) << ' ' << t->arms[i].var << " => ";
        // Non-final arm bodies are parenthesized unless application-level,
        // so an inner case cannot capture the following arms.
        pretty_term_rec(t->arms[i].body, i + 1 < t->arms.size() ? 1 : 0, os);
      }
      close(paren);
      return;
    }
  }
}

inline std::string pretty(const TermPtr& t) {
  std::ostringstream os;
  pretty_term_rec(t, 0, os);
  return os.str();
}

inline std::string pretty(const Program& p) {
  std::ostringstream os;
  for (auto& d : p.decls) {
    os << (d.codata ? "codata " : "data ") << d.name << " = ";
    for (size_t i = 0; i < d.summands.size(); ++i) {
      if (i) os << " | ";
      os << d.summands[i].ctor;
      if (d.summands[i].payload->kind != TyKind::Unit) {
        os << " of ";
        pretty_ty_rec(d.summands[i].payload, 0, os);
      }
    }
    os << '\n';
  }
  os << "in ";
  pretty_term_rec(p.body, 0, os);
  os << '\n';
  return os.str();
}

}  // namespace rs1
