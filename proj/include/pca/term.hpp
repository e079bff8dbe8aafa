#pragma once

// Application terms over the machine, extended with lambda binders that the
// compiler eliminates.

#include "pca/value.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>

namespace pca {

class Term {
 public:
  struct Const;
  struct Num;
  struct Var;
  struct App;
  struct Opaque;
  struct Lam;

  using Variant = std::variant<Const, Num, Var, App, Opaque, Lam>;
  struct Node;

  static Term constant(ConstKind k);
  static Term num(Natural n);
  static Term num(unsigned long long n);
  static Term var(std::string name);
  static Term app(Term f, Term a);
  static Term opaque(std::string id);
  static Term quote(Value v);
  static Term lam(std::string var, Term body);

  const Variant& node() const;

  template <class T> bool is() const;
  template <class T> const T& as() const;

  bool same_node(const Term& o) const { return node_ == o.node_; }

 private:
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  template <class T> static Term make(T x);
  std::shared_ptr<const Node> node_;
};

struct Term::Const { ConstKind kind; };
struct Term::Num { Natural n; };
struct Term::Var { std::string name; };
struct Term::App { Term fun; Term arg; };
/// An element of A occurring in a term. With an attached value it
/// evaluates to that value; without one it denotes an inert atom.
struct Term::Opaque { std::string id; std::optional<Value> value; };
struct Term::Lam { std::string var; Term body; };
struct Term::Node { Variant v; };

inline const Term::Variant& Term::node() const { return node_->v; }
template <class T> bool Term::is() const { return std::holds_alternative<T>(node_->v); }
template <class T> const T& Term::as() const { return std::get<T>(node_->v); }
template <class T> Term Term::make(T x) { return Term(std::make_shared<const Node>(Node{Variant(std::move(x))})); }

inline Term Term::constant(ConstKind k) { return make(Const{k}); }
inline Term Term::num(Natural n) { return make(Num{std::move(n)}); }
inline Term Term::num(unsigned long long n) { return make(Num{Natural(n)}); }
inline Term Term::var(std::string name) { return make(Var{std::move(name)}); }
inline Term Term::app(Term f, Term a) { return make(App{std::move(f), std::move(a)}); }
inline Term Term::opaque(std::string id) { return make(Opaque{std::move(id), std::nullopt}); }
inline Term Term::quote(Value v) { return make(Opaque{std::string(), std::move(v)}); }
inline Term Term::lam(std::string var, Term body) { return make(Lam{std::move(var), std::move(body)}); }

inline Term K() { return Term::constant(ConstKind::K); }
inline Term S() { return Term::constant(ConstKind::S); }

/// Left-associated application `f a1 ... an`.
inline Term apps(Term f, std::initializer_list<Term> args) {
  for (const auto& a : args) f = Term::app(std::move(f), a);
  return f;
}

bool operator==(const Term& a, const Term& b);
inline bool operator!=(const Term& a, const Term& b) { return !(a == b); }

inline bool operator==(const Term& a, const Term& b) {
  if (a.same_node(b)) return true;
  if (a.node().index() != b.node().index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = b.as<T>();
        if constexpr (std::is_same_v<T, Term::Const>) return x.kind == y.kind;
        else if constexpr (std::is_same_v<T, Term::Num>) return x.n == y.n;
        else if constexpr (std::is_same_v<T, Term::Var>) return x.name == y.name;
        else if constexpr (std::is_same_v<T, Term::App>) return x.fun == y.fun && x.arg == y.arg;
        else if constexpr (std::is_same_v<T, Term::Opaque>) return x.id == y.id && x.value == y.value;
        else return x.var == y.var && x.body == y.body;
      },
      a.node());
}

inline std::size_t term_size(const Term& t) {
  if (t.is<Term::App>()) return 1 + term_size(t.as<Term::App>().fun) + term_size(t.as<Term::App>().arg);
  if (t.is<Term::Lam>()) return 1 + term_size(t.as<Term::Lam>().body);
  return 1;
}

inline void collect_free(const Term& t, std::set<std::string>& bound, std::set<std::string>& out) {
  if (t.is<Term::Var>()) {
    const auto& n = t.as<Term::Var>().name;
    if (!bound.count(n)) out.insert(n);
  } else if (t.is<Term::App>()) {
    collect_free(t.as<Term::App>().fun, bound, out);
    collect_free(t.as<Term::App>().arg, bound, out);
  } else if (t.is<Term::Lam>()) {
    const auto& l = t.as<Term::Lam>();
    bool fresh = bound.insert(l.var).second;
    collect_free(l.body, bound, out);
    if (fresh) bound.erase(l.var);
  }
}

inline std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> bound, out;
  collect_free(t, bound, out);
  return out;
}

inline bool occurs_free(const std::string& x, const Term& t) {
  if (t.is<Term::Var>()) return t.as<Term::Var>().name == x;
  if (t.is<Term::App>())
    return occurs_free(x, t.as<Term::App>().fun) || occurs_free(x, t.as<Term::App>().arg);
  if (t.is<Term::Lam>()) {
    const auto& l = t.as<Term::Lam>();
    return l.var != x && occurs_free(x, l.body);
  }
  return false;
}

inline bool is_closed(const Term& t) { return free_vars(t).empty(); }

inline bool has_lambda(const Term& t) {
  if (t.is<Term::Lam>()) return true;
  if (t.is<Term::App>()) return has_lambda(t.as<Term::App>().fun) || has_lambda(t.as<Term::App>().arg);
  return false;
}

/// Capture-avoiding substitution of `s` for free `x`. Binders that would
/// capture a free variable of `s` are renamed with a primed suffix.
inline Term substitute(const Term& t, const std::string& x, const Term& s) {
  if (t.is<Term::Var>()) return t.as<Term::Var>().name == x ? s : t;
  if (t.is<Term::App>()) {
    const auto& a = t.as<Term::App>();
    Term f = substitute(a.fun, x, s);
    Term g = substitute(a.arg, x, s);
    if (f.same_node(a.fun) && g.same_node(a.arg)) return t;
    return Term::app(std::move(f), std::move(g));
  }
  if (t.is<Term::Lam>()) {
    const auto& l = t.as<Term::Lam>();
    if (l.var == x || !occurs_free(x, l.body)) return t;
    auto fs = free_vars(s);
    if (!fs.count(l.var)) return Term::lam(l.var, substitute(l.body, x, s));
    std::string fresh = l.var;
    auto fb = free_vars(l.body);
    do fresh += '\'';
    while (fs.count(fresh) || fb.count(fresh) || fresh == x);
    Term body = substitute(l.body, l.var, Term::var(fresh));
    return Term::lam(fresh, substitute(body, x, s));
  }
  return t;
}

/// Rebuilds a value as an explicit application term over its head.
inline Term value_term(const Value& v) {
  Term head = [&]() -> Term {
    switch (v.kind()) {
      case Value::Kind::Comb: return Term::constant(to_const(v.combinator()));
      case Value::Kind::Num: return Term::num(v.number());
      case Value::Kind::Opaque: return Term::opaque(v.opaque_id());
    }
    return K();
  }();
  for (const auto& a : v.args()) head = Term::app(std::move(head), value_term(a));
  return head;
}

}  // namespace pca
