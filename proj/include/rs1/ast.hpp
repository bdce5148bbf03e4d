#pragma once

// Abstract syntax for the rs1 language family: simple types over declared
// base types, terms of the four system modes, and whole programs
// (declaration list + body expression).

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rs1 {

// The four checking/evaluation modes. SMinus/S use classical fold/unfold,
// the RS modes use the ramified (normal/safe) rules.
enum class Mode { SMinus, RSMinus, S, RS1 };

inline bool mode_ramified(Mode m) { return m == Mode::RSMinus || m == Mode::RS1; }
inline bool mode_has_codata(Mode m) { return m == Mode::S || m == Mode::RS1; }

inline const char* mode_name(Mode m) {
  switch (m) {
    case Mode::SMinus: return "s-";
    case Mode::RSMinus: return "rs-";
    case Mode::S: return "s";
    case Mode::RS1: return "rs";
  }
  return "?";
}

inline std::optional<Mode> mode_from_name(const std::string& s) {
  if (s == "s-") return Mode::SMinus;
  if (s == "rs-") return Mode::RSMinus;
  if (s == "s") return Mode::S;
  if (s == "rs") return Mode::RS1;
  return std::nullopt;
}

struct Span {
  int line = 0;
  int col = 0;
};

// ---------------------------------------------------------------------------
// Types

enum class TyKind { Unit, Base, Sum, Prod, Arrow };

struct Ty;
using TyPtr = std::shared_ptr<const Ty>;

struct Ty {
  TyKind kind;
  std::string base;   // Base: declared type name
  bool safe = false;  // Base: tick form ('nat)
  TyPtr a, b;         // Sum/Prod/Arrow components
};

inline TyPtr ty_unit() {
  static const TyPtr u = std::make_shared<Ty>(Ty{TyKind::Unit, "", false, nullptr, nullptr});
  return u;
}

inline TyPtr ty_base(std::string name, bool safe = false) {
  return std::make_shared<Ty>(Ty{TyKind::Base, std::move(name), safe, nullptr, nullptr});
}

inline TyPtr ty_sum(TyPtr a, TyPtr b) {
  return std::make_shared<Ty>(Ty{TyKind::Sum, "", false, std::move(a), std::move(b)});
}

inline TyPtr ty_prod(TyPtr a, TyPtr b) {
  return std::make_shared<Ty>(Ty{TyKind::Prod, "", false, std::move(a), std::move(b)});
}

inline TyPtr ty_arrow(TyPtr a, TyPtr b) {
  return std::make_shared<Ty>(Ty{TyKind::Arrow, "", false, std::move(a), std::move(b)});
}

inline bool ty_equal(const TyPtr& x, const TyPtr& y) {
  if (x.get() == y.get()) return true;
  if (!x || !y) return false;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case TyKind::Unit: return true;
    case TyKind::Base: return x->base == y->base && x->safe == y->safe;
    default: return ty_equal(x->a, y->a) && ty_equal(x->b, y->b);
  }
}

// Literal substitution of a type for the recursion variable of a signature
// functor (the paper reads F sigma as the body with sigma put in the slot).
inline TyPtr ty_subst_base(const TyPtr& body, const std::string& name, const TyPtr& repl) {
  switch (body->kind) {
    case TyKind::Unit: return body;
    case TyKind::Base:
      return (!body->safe && body->base == name) ? repl : body;
    case TyKind::Sum:
      return ty_sum(ty_subst_base(body->a, name, repl), ty_subst_base(body->b, name, repl));
    case TyKind::Prod:
      return ty_prod(ty_subst_base(body->a, name, repl), ty_subst_base(body->b, name, repl));
    case TyKind::Arrow:
      return ty_arrow(ty_subst_base(body->a, name, repl), ty_subst_base(body->b, name, repl));
  }
  return body;
}

inline bool ty_mentions_base(const TyPtr& t, const std::string& name) {
  switch (t->kind) {
    case TyKind::Unit: return false;
    case TyKind::Base: return t->base == name;
    default: return ty_mentions_base(t->a, name) || (t->b && ty_mentions_base(t->b, name));
  }
}

// ---------------------------------------------------------------------------
// Terms

enum class TermKind {
  Var,
  App,
  Abs,
  Unit,
  Pair,
  Proj,   // idx 1|2
  Inj,    // idx 1|2
  Case,   // binary in core; 2..n arms in surface
  Let,    // surface sugar (plain and starred)
  Ctor,   // surface sugar: named (safe-)constructor application
  ConstRef,  // raw constructor function c_tau / 'c_tau
  DestrRef,  // raw destructor function d_tau / 'd_tau
  Fold,   // fold[tau] / sfold[tau] step subject
  Unfold, // unfold[tau] / sunfold[tau] step seed
  Lower,
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct CaseArm {
  std::string var;
  TermPtr body;
};

struct LetBind {
  std::string var;
  TyPtr ann;
  TermPtr expr;
};

struct Term {
  TermKind kind;
  Span span;
  std::string name;  // Var: variable; Ctor: constructor name; ConstRef/DestrRef/Fold/Unfold: type name
  bool safe = false; // ticked constructor/ref, ramified fold/unfold
  int idx = 0;       // Proj/Inj index
  TyPtr ann;         // Abs parameter annotation
  TermPtr t0, t1;    // children (see makers)
  std::vector<CaseArm> arms;  // Case (t0 = scrutinee)
  std::vector<LetBind> binds; // Let (t0 = body)
  bool star = false;          // let*
  int site = -1;              // Fold/Unfold: recursion-site id, assigned by desugar
};

inline TermPtr mk_term(Term t) { return std::make_shared<Term>(std::move(t)); }

inline TermPtr mk_var(std::string n, Span s = {}) {
  Term t{TermKind::Var, s};
  t.name = std::move(n);
  return mk_term(std::move(t));
}
inline TermPtr mk_app(TermPtr f, TermPtr a, Span s = {}) {
  Term t{TermKind::App, s};
  t.t0 = std::move(f);
  t.t1 = std::move(a);
  return mk_term(std::move(t));
}
inline TermPtr mk_abs(std::string x, TyPtr ann, TermPtr body, Span s = {}) {
  Term t{TermKind::Abs, s};
  t.name = std::move(x);
  t.ann = std::move(ann);
  t.t0 = std::move(body);
  return mk_term(std::move(t));
}
inline TermPtr mk_unit(Span s = {}) { return mk_term(Term{TermKind::Unit, s}); }
inline TermPtr mk_pair(TermPtr a, TermPtr b, Span s = {}) {
  Term t{TermKind::Pair, s};
  t.t0 = std::move(a);
  t.t1 = std::move(b);
  return mk_term(std::move(t));
}
inline TermPtr mk_proj(int i, TermPtr e, Span s = {}) {
  Term t{TermKind::Proj, s};
  t.idx = i;
  t.t0 = std::move(e);
  return mk_term(std::move(t));
}
inline TermPtr mk_inj(int i, TermPtr e, Span s = {}) {
  Term t{TermKind::Inj, s};
  t.idx = i;
  t.t0 = std::move(e);
  return mk_term(std::move(t));
}
inline TermPtr mk_case(TermPtr scrut, std::vector<CaseArm> arms, Span s = {}) {
  Term t{TermKind::Case, s};
  t.t0 = std::move(scrut);
  t.arms = std::move(arms);
  return mk_term(std::move(t));
}
inline TermPtr mk_let(bool star, std::vector<LetBind> binds, TermPtr body, Span s = {}) {
  Term t{TermKind::Let, s};
  t.star = star;
  t.binds = std::move(binds);
  t.t0 = std::move(body);
  return mk_term(std::move(t));
}
inline TermPtr mk_ctor(std::string name, bool safe, TermPtr payload, Span s = {}) {
  Term t{TermKind::Ctor, s};
  t.name = std::move(name);
  t.safe = safe;
  t.t0 = std::move(payload);  // may be null (unit-payload constant)
  return mk_term(std::move(t));
}
inline TermPtr mk_constref(std::string tyname, bool safe, Span s = {}) {
  Term t{TermKind::ConstRef, s};
  t.name = std::move(tyname);
  t.safe = safe;
  return mk_term(std::move(t));
}
inline TermPtr mk_destrref(std::string tyname, bool safe, Span s = {}) {
  Term t{TermKind::DestrRef, s};
  t.name = std::move(tyname);
  t.safe = safe;
  return mk_term(std::move(t));
}
inline TermPtr mk_fold(std::string tyname, bool ramified, TermPtr step, TermPtr subject, Span s = {}) {
  Term t{TermKind::Fold, s};
  t.name = std::move(tyname);
  t.safe = ramified;
  t.t0 = std::move(step);
  t.t1 = std::move(subject);
  return mk_term(std::move(t));
}
inline TermPtr mk_unfold(std::string tyname, bool ramified, TermPtr step, TermPtr seed, Span s = {}) {
  Term t{TermKind::Unfold, s};
  t.name = std::move(tyname);
  t.safe = ramified;
  t.t0 = std::move(step);
  t.t1 = std::move(seed);
  return mk_term(std::move(t));
}
inline TermPtr mk_lower(TermPtr e, Span s = {}) {
  Term t{TermKind::Lower, s};
  t.t0 = std::move(e);
  return mk_term(std::move(t));
}

// ---------------------------------------------------------------------------
// Declarations and programs

struct Summand {
  std::string ctor;
  TyPtr payload;  // unit when written without "of"
  Span span;
};

struct Decl {
  bool codata = false;
  std::string name;
  std::vector<Summand> summands;
  Span span;
};

// Static info about a fold/unfold occurrence, for cost attribution.
struct SiteInfo {
  int id = -1;
  bool unfold = false;
  bool ramified = false;
  std::string tyname;
  Span span;
};

struct Program {
  std::vector<Decl> decls;
  TermPtr body;
  bool core = false;  // true once desugared
  std::vector<SiteInfo> sites;
};

}  // namespace rs1
