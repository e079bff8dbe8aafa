#pragma once

// Bracket abstraction: lambda binders to K/S combinator terms.

#include "pca/term.hpp"

#include <stdexcept>

namespace pca {

/// True when `t` is already a weak canonical form up to instantiating its
/// variables: a variable, numeral, opaque atom, constant, or a primitive
/// combinator applied to fewer value-form arguments than its arity.
/// Evaluating such a term performs no reduction, so wrapping it in K is
/// safe under call-by-value.
inline bool is_value_form(const Term& t) {
  if (t.is<Term::Var>() || t.is<Term::Num>() || t.is<Term::Opaque>() || t.is<Term::Const>()) return true;
  if (!t.is<Term::App>()) return false;
  std::size_t n = 0;
  const Term* head = &t;
  while (head->is<Term::App>()) {
    if (!is_value_form(head->as<Term::App>().arg)) return false;
    head = &head->as<Term::App>().fun;
    ++n;
  }
  if (!head->is<Term::Const>()) return false;
  switch (head->as<Term::Const>().kind) {
    case ConstKind::K: return n < arity(Combinator::K);
    case ConstKind::Kbar: return n < arity(Combinator::Kbar);
    case ConstKind::S: return n < arity(Combinator::S);
    case ConstKind::D: return n < arity(Combinator::D);
    default: return false;  // SUCC/PRED fire at one argument; P, P0, P1 are defined
  }
}

/// λ*x.t for a lambda-free `t`:
///   λ*x.x         = S K K
///   λ*x.t         = K t          when x is not free in t and t is a value form
///   λ*x.(t1 t2)   = S (λ*x.t1) (λ*x.t2)
/// The result is always a value form (defined under any closing
/// substitution) and never mentions x.
inline Term abstract(const std::string& x, const Term& t) {
  if (t.is<Term::Lam>()) throw std::invalid_argument("abstract: term still contains a lambda");
  if (t.is<Term::Var>() && t.as<Term::Var>().name == x) return apps(S(), {K(), K()});
  if (!occurs_free(x, t) && is_value_form(t)) return Term::app(K(), t);
  const auto& a = t.as<Term::App>();
  return apps(S(), {abstract(x, a.fun), abstract(x, a.arg)});
}

/// Eliminates every lambda, innermost first.
inline Term compile(const Term& t) {
  if (t.is<Term::Lam>()) {
    const auto& l = t.as<Term::Lam>();
    return abstract(l.var, compile(l.body));
  }
  if (t.is<Term::App>()) {
    const auto& a = t.as<Term::App>();
    Term f = compile(a.fun);
    Term g = compile(a.arg);
    if (f.same_node(a.fun) && g.same_node(a.arg)) return t;
    return Term::app(std::move(f), std::move(g));
  }
  return t;
}

/// Builds `\x1 ... xn. body`.
inline Term lambda(std::initializer_list<std::string> vars, Term body) {
  for (auto it = std::rbegin(vars); it != std::rend(vars); ++it) body = Term::lam(*it, std::move(body));
  return body;
}

namespace detail {

inline Term v(const char* n) { return Term::var(n); }

}  // namespace detail

/// Pairing as compiled terms: p = λxyz.zxy, p0 = λx.x K, p1 = λx.x KBAR.
inline const Term& pairing_definition(ConstKind k) {
  using detail::v;
  static const Term p = compile(lambda({"x", "y", "z"}, apps(v("z"), {v("x"), v("y")})));
  static const Term p0 = compile(lambda({"x"}, Term::app(v("x"), K())));
  static const Term p1 = compile(lambda({"x"}, Term::app(v("x"), Term::constant(ConstKind::Kbar))));
  switch (k) {
    case ConstKind::P: return p;
    case ConstKind::P0: return p0;
    case ConstKind::P1: return p1;
    default: throw std::invalid_argument("pairing_definition: not a defined constant");
  }
}

}  // namespace pca
