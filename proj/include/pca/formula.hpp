#pragma once

// Set-theoretic formulas over names, with the usual abbreviations
// (unordered/ordered pair, zero, successor, functionality).

#include "pca/names.hpp"

#include <memory>
#include <set>
#include <string>
#include <variant>

namespace pca {

/// A bound variable or a name literal.
class NameRef {
 public:
  NameRef(std::string var) : v_(std::move(var)) {}
  NameRef(const char* var) : v_(std::string(var)) {}
  NameRef(VName n) : v_(std::move(n)) {}

  bool is_var() const { return std::holds_alternative<std::string>(v_); }
  const std::string& var() const { return std::get<std::string>(v_); }
  const VName& name() const { return std::get<VName>(v_); }

  friend bool operator==(const NameRef& a, const NameRef& b) {
    if (a.is_var() != b.is_var()) return false;
    return a.is_var() ? a.var() == b.var() : a.name() == b.name();
  }

 private:
  std::variant<std::string, VName> v_;
};

class Formula {
 public:
  enum class Kind { Mem, Eq, And, Or, Not, Imp, AllIn, ExIn, All, Ex };

  static Formula mem(NameRef x, NameRef y) { return atom(Kind::Mem, std::move(x), std::move(y)); }
  static Formula eq(NameRef x, NameRef y) { return atom(Kind::Eq, std::move(x), std::move(y)); }
  static Formula conj(Formula a, Formula b) { return binary(Kind::And, std::move(a), std::move(b)); }
  static Formula disj(Formula a, Formula b) { return binary(Kind::Or, std::move(a), std::move(b)); }
  static Formula imp(Formula a, Formula b) { return binary(Kind::Imp, std::move(a), std::move(b)); }
  static Formula neg(Formula a);
  static Formula all_in(std::string v, NameRef y, Formula body);
  static Formula ex_in(std::string v, NameRef y, Formula body);
  static Formula all(std::string v, Formula body);
  static Formula ex(std::string v, Formula body);

  Kind kind() const;
  /// Atoms: the two name references.
  const NameRef& x() const;
  const NameRef& y() const;
  /// Connectives: operands (Not has only `left`). Quantifiers: `left` is the body.
  const Formula& left() const;
  const Formula& right() const;
  const Formula& body() const { return left(); }
  /// Quantifiers: the bound variable, and for bounded ones the bound.
  const std::string& var() const;
  const NameRef& bound() const { return y(); }

  bool same_node(const Formula& o) const { return node_ == o.node_; }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula atom(Kind k, NameRef x, NameRef y);
  static Formula binary(Kind k, Formula a, Formula b);
  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Kind kind;
  std::optional<NameRef> x, y;
  std::vector<Formula> sub;
  std::string var;
};

inline Formula Formula::atom(Kind k, NameRef x, NameRef y) {
  return Formula(std::make_shared<const Node>(Node{k, std::move(x), std::move(y), {}, {}}));
}
inline Formula Formula::binary(Kind k, Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{k, std::nullopt, std::nullopt, {std::move(a), std::move(b)}, {}}));
}
inline Formula Formula::neg(Formula a) {
  return Formula(std::make_shared<const Node>(Node{Kind::Not, std::nullopt, std::nullopt, {std::move(a)}, {}}));
}
inline Formula Formula::all_in(std::string v, NameRef y, Formula body) {
  return Formula(std::make_shared<const Node>(Node{Kind::AllIn, std::nullopt, std::move(y), {std::move(body)}, std::move(v)}));
}
inline Formula Formula::ex_in(std::string v, NameRef y, Formula body) {
  return Formula(std::make_shared<const Node>(Node{Kind::ExIn, std::nullopt, std::move(y), {std::move(body)}, std::move(v)}));
}
inline Formula Formula::all(std::string v, Formula body) {
  return Formula(std::make_shared<const Node>(Node{Kind::All, std::nullopt, std::nullopt, {std::move(body)}, std::move(v)}));
}
inline Formula Formula::ex(std::string v, Formula body) {
  return Formula(std::make_shared<const Node>(Node{Kind::Ex, std::nullopt, std::nullopt, {std::move(body)}, std::move(v)}));
}

inline Formula::Kind Formula::kind() const { return node_->kind; }
inline const NameRef& Formula::x() const { return *node_->x; }
inline const NameRef& Formula::y() const { return *node_->y; }
inline const Formula& Formula::left() const { return node_->sub.at(0); }
inline const Formula& Formula::right() const { return node_->sub.at(1); }
inline const std::string& Formula::var() const { return node_->var; }

inline bool is_atomic(const Formula& f) { return f.kind() == Formula::Kind::Mem || f.kind() == Formula::Kind::Eq; }
inline bool is_binary(const Formula& f) {
  return f.kind() == Formula::Kind::And || f.kind() == Formula::Kind::Or || f.kind() == Formula::Kind::Imp;
}
inline bool is_bounded(const Formula& f) { return f.kind() == Formula::Kind::AllIn || f.kind() == Formula::Kind::ExIn; }
inline bool is_unbounded(const Formula& f) { return f.kind() == Formula::Kind::All || f.kind() == Formula::Kind::Ex; }

namespace detail {

inline void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  auto ref = [&](const NameRef& r) {
    if (r.is_var() && !bound.count(r.var())) out.insert(r.var());
  };
  if (is_atomic(f)) {
    ref(f.x());
    ref(f.y());
    return;
  }
  if (is_binary(f)) {
    collect_free(f.left(), bound, out);
    collect_free(f.right(), bound, out);
    return;
  }
  if (f.kind() == Formula::Kind::Not) {
    collect_free(f.left(), bound, out);
    return;
  }
  if (is_bounded(f)) ref(f.bound());
  bool fresh = bound.insert(f.var()).second;
  collect_free(f.body(), bound, out);
  if (fresh) bound.erase(f.var());
}

}  // namespace detail

inline std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound, out;
  detail::collect_free(f, bound, out);
  return out;
}

inline bool is_closed(const Formula& f) { return free_vars(f).empty(); }

/// φ[r/v]. Names are closed, so substituting a name never captures;
/// substituting a variable renames nothing and is only used with fresh
/// variables.
inline Formula substitute(const Formula& f, const std::string& v, const NameRef& r) {
  auto ref = [&](const NameRef& n) -> NameRef { return n.is_var() && n.var() == v ? r : n; };
  switch (f.kind()) {
    case Formula::Kind::Mem: return Formula::mem(ref(f.x()), ref(f.y()));
    case Formula::Kind::Eq: return Formula::eq(ref(f.x()), ref(f.y()));
    case Formula::Kind::And: return Formula::conj(substitute(f.left(), v, r), substitute(f.right(), v, r));
    case Formula::Kind::Or: return Formula::disj(substitute(f.left(), v, r), substitute(f.right(), v, r));
    case Formula::Kind::Imp: return Formula::imp(substitute(f.left(), v, r), substitute(f.right(), v, r));
    case Formula::Kind::Not: return Formula::neg(substitute(f.left(), v, r));
    case Formula::Kind::AllIn:
      return Formula::all_in(f.var(), ref(f.bound()), f.var() == v ? f.body() : substitute(f.body(), v, r));
    case Formula::Kind::ExIn:
      return Formula::ex_in(f.var(), ref(f.bound()), f.var() == v ? f.body() : substitute(f.body(), v, r));
    case Formula::Kind::All: return f.var() == v ? f : Formula::all(f.var(), substitute(f.body(), v, r));
    case Formula::Kind::Ex: return f.var() == v ? f : Formula::ex(f.var(), substitute(f.body(), v, r));
  }
  return f;
}

inline Formula substitute(const Formula& f, const std::string& v, const VName& n) { return substitute(f, v, NameRef(n)); }

namespace detail {

inline bool alpha_eq(const Formula& a, const Formula& b, std::vector<std::pair<std::string, std::string>>& env) {
  auto ref_eq = [&](const NameRef& x, const NameRef& y) {
    if (x.is_var() != y.is_var()) return false;
    if (!x.is_var()) return x.name() == y.name();
    for (auto it = env.rbegin(); it != env.rend(); ++it) {
      if (it->first == x.var() || it->second == y.var()) return it->first == x.var() && it->second == y.var();
    }
    return x.var() == y.var();
  };
  if (a.kind() != b.kind()) return false;
  if (is_atomic(a)) return ref_eq(a.x(), b.x()) && ref_eq(a.y(), b.y());
  if (is_binary(a)) return alpha_eq(a.left(), b.left(), env) && alpha_eq(a.right(), b.right(), env);
  if (a.kind() == Formula::Kind::Not) return alpha_eq(a.left(), b.left(), env);
  if (is_bounded(a) && !ref_eq(a.bound(), b.bound())) return false;
  env.emplace_back(a.var(), b.var());
  bool r = alpha_eq(a.body(), b.body(), env);
  env.pop_back();
  return r;
}

}  // namespace detail

/// Equality up to renaming of bound variables.
inline bool alpha_equal(const Formula& a, const Formula& b) {
  std::vector<std::pair<std::string, std::string>> env;
  return detail::alpha_eq(a, b, env);
}

inline bool operator==(const Formula& a, const Formula& b) { return a.same_node(b) || alpha_equal(a, b); }
inline bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

// ---------------------------------------------------------------------------
// Abbreviations. Bound variables they introduce start with an underscore,
// which user formulas cannot clash with unless they also use one.

namespace detail {

inline std::string fresh(const char* base) {
  thread_local std::size_t counter = 0;
  return std::string("_") + base + std::to_string(++counter);
}

}  // namespace detail

/// z = {x, y}: x ∈ z ∧ y ∈ z ∧ ∀u∈z (u = x ∨ u = y).
inline Formula UP(const NameRef& x, const NameRef& y, const NameRef& z) {
  std::string u = detail::fresh("u");
  return Formula::conj(Formula::mem(x, z),
                       Formula::conj(Formula::mem(y, z), Formula::all_in(u, z, Formula::disj(Formula::eq(u, x), Formula::eq(u, y)))));
}

/// z = <x, y> = {{x}, {x, y}}: ∃s∈z UP(x,x,s) ∧ ∃t∈z UP(x,y,t) ∧ ∀w∈z (UP(x,x,w) ∨ UP(x,y,w)).
inline Formula OP(const NameRef& x, const NameRef& y, const NameRef& z) {
  std::string s = detail::fresh("s"), t = detail::fresh("t"), w = detail::fresh("w");
  return Formula::conj(Formula::ex_in(s, z, UP(x, x, s)),
                       Formula::conj(Formula::ex_in(t, z, UP(x, y, t)),
                                     Formula::all_in(w, z, Formula::disj(UP(x, x, w), UP(x, y, w)))));
}

/// y = 0: ∀x∈y ¬(x = x).
inline Formula is_zero(const NameRef& y) {
  std::string x = detail::fresh("x");
  return Formula::all_in(x, y, Formula::neg(Formula::eq(x, x)));
}

/// y = z ∪ {z}: ∀x∈y (x ∈ z ∨ x = z) ∧ ∀x∈z (x ∈ y) ∧ z ∈ y.
inline Formula is_succ(const NameRef& y, const NameRef& z) {
  std::string x = detail::fresh("x"), x2 = detail::fresh("x");
  return Formula::conj(Formula::all_in(x, y, Formula::disj(Formula::mem(x, z), Formula::eq(x, z))),
                       Formula::conj(Formula::all_in(x2, z, Formula::mem(x2, y)), Formula::mem(z, y)));
}

/// ϑ(y): y = 0 ∨ ∃z∈ω̇ (y = z ∪ {z}).
inline Formula theta(const NameRef& y) {
  std::string z = detail::fresh("z");
  return Formula::disj(is_zero(y), Formula::ex_in(z, VName::omega(), is_succ(y, z)));
}

/// f : X → Y, as three conjuncts:
///   ∀z∈f ∃x∈X ∃y∈Y OP(x,y,z)
///   ∀x∈X ∃y∈Y ∃z∈f OP(x,y,z)
///   ∀z0∈f ∀z1∈f ∀x y0 y1 (OP(x,y0,z0) ∧ OP(x,y1,z1) ⇒ y0 = y1)
inline Formula fun_total_graph(const NameRef& f, const NameRef& X, const NameRef& Y) {
  std::string z = detail::fresh("z"), x = detail::fresh("x"), y = detail::fresh("y");
  return Formula::all_in(z, f, Formula::ex_in(x, X, Formula::ex_in(y, Y, OP(x, y, z))));
}

inline Formula fun_total(const NameRef& f, const NameRef& X, const NameRef& Y) {
  std::string z = detail::fresh("z"), x = detail::fresh("x"), y = detail::fresh("y");
  return Formula::all_in(x, X, Formula::ex_in(y, Y, Formula::ex_in(z, f, OP(x, y, z))));
}

inline Formula fun_single_valued(const NameRef& f) {
  std::string z0 = detail::fresh("z"), z1 = detail::fresh("z"), x = detail::fresh("x"), y0 = detail::fresh("y"),
              y1 = detail::fresh("y");
  return Formula::all_in(
      z0, f,
      Formula::all_in(z1, f,
                      Formula::all(x, Formula::all(y0, Formula::all(y1, Formula::imp(Formula::conj(OP(x, y0, z0), OP(x, y1, z1)),
                                                                                       Formula::eq(y0, y1)))))));
}

inline Formula fun(const NameRef& f, const NameRef& X, const NameRef& Y) {
  return Formula::conj(fun_total_graph(f, X, Y), Formula::conj(fun_total(f, X, Y), fun_single_valued(f)));
}

// ---------------------------------------------------------------------------
// Printing and parsing.

namespace detail {

inline std::string ref_string(const NameRef& r) { return r.is_var() ? r.var() : to_string(r.name()); }

inline int prec(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Imp: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    case Formula::Kind::Not: return 4;
    case Formula::Kind::Mem:
    case Formula::Kind::Eq: return 5;
    default: return 0;  // quantifiers extend to the right
  }
}

inline std::string print_formula(const Formula& f, int ctx) {
  std::string s;
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Mem: s = "mem(" + ref_string(f.x()) + ", " + ref_string(f.y()) + ")"; break;
    case K::Eq: s = "eq(" + ref_string(f.x()) + ", " + ref_string(f.y()) + ")"; break;
    case K::And: s = print_formula(f.left(), 3) + " /\\ " + print_formula(f.right(), 4); break;
    case K::Or: s = print_formula(f.left(), 2) + " \\/ " + print_formula(f.right(), 3); break;
    case K::Imp: s = print_formula(f.left(), 2) + " => " + print_formula(f.right(), 1); break;
    case K::Not: s = "~" + print_formula(f.left(), 4); break;
    case K::AllIn: s = "all " + f.var() + " in " + ref_string(f.bound()) + ". " + print_formula(f.body(), 0); break;
    case K::ExIn: s = "ex " + f.var() + " in " + ref_string(f.bound()) + ". " + print_formula(f.body(), 0); break;
    case K::All: s = "ALL " + f.var() + ". " + print_formula(f.body(), 0); break;
    case K::Ex: s = "EX " + f.var() + ". " + print_formula(f.body(), 0); break;
  }
  int p = prec(f.kind());
  bool paren = p == 0 ? ctx > 0 : p < ctx;
  return paren ? "(" + s + ")" : s;
}

}  // namespace detail

/// `mem(N, M)`, `eq(N, M)`, `/\`, `\/`, `~`, `=>`, `all x in N. φ`,
/// `ex x in N. φ`, `ALL x. φ`, `EX x. φ`.
inline std::string to_string(const Formula& f) { return detail::print_formula(f, 0); }
inline std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << to_string(f); }

using FormulaTable = std::map<std::string, Formula>;

/// Formula grammar, loosest first:
///   imp  := or ('=>' imp)?
///   or   := and ('\/' and)*
///   and  := unary ('/\' unary)*
///   unary:= '~' unary | quantifier | atom | '(' imp ')'
/// Abbreviations: up(x,y,z), op(x,y,z), zero(y), succ(y,z), theta(y), fun(f,X,Y).
class FormulaParser {
 public:
  FormulaParser(Scanner& s, const TermTable* terms = nullptr, const NameTable* names = nullptr,
                const FormulaTable* formulas = nullptr)
      : s_(s), terms_(terms), names_(names), formulas_(formulas) {}

  Formula parse() {
    Formula l = disj();
    if (s_.accept("=>")) return Formula::imp(l, parse());
    return l;
  }

 private:
  Formula disj() {
    Formula l = conj();
    while (s_.accept("\\/")) l = Formula::disj(l, conj());
    return l;
  }

  Formula conj() {
    Formula l = unary();
    while (s_.accept("/\\")) l = Formula::conj(l, unary());
    return l;
  }

  Formula quantifier_body(const std::vector<std::string>& vars) {
    bound_.insert(bound_.end(), vars.begin(), vars.end());
    Formula b = parse();
    bound_.resize(bound_.size() - vars.size());
    return b;
  }

  Formula unary() {
    if (s_.accept("~")) return Formula::neg(unary());
    if (s_.accept("(")) {
      Formula f = parse();
      s_.expect(")");
      return f;
    }
    std::string w = s_.peek_ident(false);
    if (w == "all" || w == "ex") {
      s_.ident(false);
      std::string v = s_.ident(false);
      s_.expect_word("in");
      NameRef y = ref();
      s_.expect(".");
      Formula b = quantifier_body({v});
      return w == "all" ? Formula::all_in(v, y, b) : Formula::ex_in(v, y, b);
    }
    if (w == "ALL" || w == "EX") {
      s_.ident(false);
      std::vector<std::string> vars;
      while (s_.peek() != '.') vars.push_back(s_.ident(false));
      if (vars.empty()) s_.fail("quantifier without variables");
      s_.expect(".");
      Formula b = quantifier_body(vars);
      for (auto it = vars.rbegin(); it != vars.rend(); ++it) b = w == "ALL" ? Formula::all(*it, b) : Formula::ex(*it, b);
      return b;
    }
    if (w == "mem" || w == "eq") {
      s_.ident(false);
      auto args = ref_args(2);
      return w == "mem" ? Formula::mem(args[0], args[1]) : Formula::eq(args[0], args[1]);
    }
    if (w == "up" || w == "op" || w == "succ" || w == "fun") {
      s_.ident(false);
      auto args = ref_args(w == "succ" ? 2 : 3);
      if (w == "up") return UP(args[0], args[1], args[2]);
      if (w == "op") return OP(args[0], args[1], args[2]);
      if (w == "succ") return is_succ(args[0], args[1]);
      return fun(args[0], args[1], args[2]);
    }
    if (w == "zero" || w == "theta") {
      s_.ident(false);
      auto args = ref_args(1);
      return w == "zero" ? is_zero(args[0]) : theta(args[0]);
    }
    if (formulas_ && !w.empty()) {
      std::string id = s_.peek_ident();
      auto it = formulas_->find(id);
      if (it != formulas_->end()) {
        s_.ident();
        return it->second;
      }
    }
    s_.fail("expected a formula");
  }

  std::vector<NameRef> ref_args(std::size_t n) {
    s_.expect("(");
    std::vector<NameRef> out;
    for (std::size_t i = 0; i < n; ++i) {
      if (i) s_.expect(",");
      out.push_back(ref());
    }
    s_.expect(")");
    return out;
  }

  NameRef ref() {
    std::string id = s_.peek_ident(false);
    if (!id.empty() && std::find(bound_.begin(), bound_.end(), id) != bound_.end()) {
      s_.ident(false);
      return NameRef(id);
    }
    return NameRef(NameParser(s_, terms_, names_).parse());
  }

  Scanner& s_;
  const TermTable* terms_;
  const NameTable* names_;
  const FormulaTable* formulas_;
  std::vector<std::string> bound_;
};

inline Formula parse_formula(std::string_view src, const TermTable* terms = nullptr, const NameTable* names = nullptr,
                             const FormulaTable* formulas = nullptr) {
  Scanner s(src);
  Formula f = FormulaParser(s, terms, names, formulas).parse();
  if (!s.at_end()) s.fail("unexpected trailing input after formula");
  return f;
}

}  // namespace pca
