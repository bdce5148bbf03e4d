#pragma once

// Sugar elimination, run between parsing and type checking:
//   - let/let* become curried application of annotated lambdas,
//   - n-ary case becomes nested binary case (fresh scrutinee variables),
//   - named constructors C_i become c_tau composed with the injection path
//     for summand i of n (right-nested sums),
// and every fold/unfold occurrence receives a stable site id for cost
// attribution.

#include <map>
#include <string>
#include <vector>

#include "rs1/ast.hpp"
#include "rs1/diagnostics.hpp"

namespace rs1 {

namespace detail {

struct CtorSig {
  std::string tyname;
  int index = 0;  // 1-based summand position
  int count = 0;  // total summands
};

class Desugarer {
 public:
  explicit Desugarer(const Program& p) : prog_(p) {
    for (auto& d : p.decls) {
      int n = static_cast<int>(d.summands.size());
      for (int i = 0; i < n; ++i)
        ctors_[d.summands[i].ctor] = CtorSig{d.name, i + 1, n};
    }
    scan_fresh(p.body);
  }

  Program run() {
    Program out;
    out.decls = prog_.decls;
    out.body = go(prog_.body);
    out.core = true;
    out.sites = sites_;
    return out;
  }

 private:
  const Program& prog_;
  std::map<std::string, CtorSig> ctors_;
  std::vector<SiteInfo> sites_;
  long fresh_ = 0;

  void scan_fresh(const TermPtr& t) {
    if (!t) return;
    auto consider = [&](const std::string& n) {
      if (n.rfind("$k", 0) == 0) {
        long v = std::atol(n.c_str() + 2);
        if (v >= fresh_) fresh_ = v + 1;
      }
    };
    consider(t->name);
    scan_fresh(t->t0);
    scan_fresh(t->t1);
    for (auto& a : t->arms) {
      consider(a.var);
      scan_fresh(a.body);
    }
    for (auto& b : t->binds) {
      consider(b.var);
      scan_fresh(b.expr);
    }
  }

  std::string fresh() { return "$k" + std::to_string(fresh_++); }

  TermPtr inj_path(const CtorSig& sig, TermPtr arg, Span sp) {
    if (sig.count == 1) return arg;
    TermPtr e = arg;
    if (sig.index < sig.count) e = mk_inj(1, e, sp);
    int twos = (sig.index < sig.count) ? sig.index - 1 : sig.count - 1;
    for (int j = 0; j < twos; ++j) e = mk_inj(2, e, sp);
    return e;
  }

  TermPtr go(const TermPtr& t) {
    switch (t->kind) {
      case TermKind::Var:
      case TermKind::Unit:
      case TermKind::ConstRef:
      case TermKind::DestrRef:
        return t;
      case TermKind::App:
        return mk_app(go(t->t0), go(t->t1), t->span);
      case TermKind::Abs:
        return mk_abs(t->name, t->ann, go(t->t0), t->span);
      case TermKind::Pair:
        return mk_pair(go(t->t0), go(t->t1), t->span);
      case TermKind::Proj:
        return mk_proj(t->idx, go(t->t0), t->span);
      case TermKind::Inj:
        return mk_inj(t->idx, go(t->t0), t->span);
      case TermKind::Lower:
        return mk_lower(go(t->t0), t->span);
      case TermKind::Ctor: {
        auto it = ctors_.find(t->name);
        if (it == ctors_.end())
          throw InternalError("desugar: unknown constructor " + t->name);
        TermPtr payload = t->t0 ? go(t->t0) : mk_unit(t->span);
        return mk_app(mk_constref(it->second.tyname, t->safe, t->span),
                      inj_path(it->second, payload, t->span), t->span);
      }
      case TermKind::Fold:
      case TermKind::Unfold: {
        TermPtr step = go(t->t0);
        TermPtr arg = go(t->t1);
        int id = static_cast<int>(sites_.size());
        sites_.push_back(SiteInfo{id, t->kind == TermKind::Unfold, t->safe, t->name, t->span});
        Term out{t->kind, t->span};
        out.name = t->name;
        out.safe = t->safe;
        out.t0 = step;
        out.t1 = arg;
        out.site = id;
        return mk_term(std::move(out));
      }
      case TermKind::Let: {
        TermPtr body = go(t->t0);
        if (t->star) {
          // let* x1=e1; ...; xm=em in e0  ==  let x1=e1 in (... let xm=em in e0)
          TermPtr acc = body;
          for (auto it = t->binds.rbegin(); it != t->binds.rend(); ++it)
            acc = mk_app(mk_abs(it->var, it->ann, acc, t->span), go(it->expr), t->span);
          return acc;
        }
        // let x1=e1; ...; xm=em in e0  ==  (fn x1 ... xm => e0) e1 ... em
        TermPtr fn = body;
        for (auto it = t->binds.rbegin(); it != t->binds.rend(); ++it)
          fn = mk_abs(it->var, it->ann, fn, t->span);
        for (auto& b : t->binds) fn = mk_app(fn, go(b.expr), t->span);
        return fn;
      }
      case TermKind::Case: {
        TermPtr scrut = go(t->t0);
        return build_case(scrut, t->arms, 0, t->span);
      }
    }
    throw InternalError("desugar: unhandled node");
  }

  TermPtr build_case(TermPtr scrut, const std::vector<CaseArm>& arms, size_t from, Span sp) {
    if (arms.size() - from == 2) {
      std::vector<CaseArm> out;
      out.push_back({arms[from].var, go(arms[from].body)});
      out.push_back({arms[from + 1].var, go(arms[from + 1].body)});
      return mk_case(scrut, std::move(out), sp);
    }
    std::string rest = fresh();
    std::vector<CaseArm> out;
    out.push_back({arms[from].var, go(arms[from].body)});
    out.push_back({rest, build_case(mk_var(rest, sp), arms, from + 1, sp)});
    return mk_case(scrut, std::move(out), sp);
  }
};

}  // namespace detail

inline Program desugar(const Program& p) {
  if (p.core) return p;
  return detail::Desugarer(p).run();
}

}  // namespace rs1
