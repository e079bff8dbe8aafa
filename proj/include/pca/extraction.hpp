#pragma once

// Natural-deduction proofs over Formula and their realizers. Proof nodes
// are validated when built; extract() maps each rule to the corresponding
// realizer construction and compiles the result.

#include "pca/compiler.hpp"
#include "pca/formula.hpp"
#include "pca/realizers.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace pca {

class ProofError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void bound_vars(const Formula& f, std::set<std::string>& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Mem:
    case K::Eq: return;
    case K::And:
    case K::Or:
    case K::Imp:
      bound_vars(f.left(), out);
      bound_vars(f.right(), out);
      return;
    case K::Not: bound_vars(f.left(), out); return;
    default:
      out.insert(f.var());
      bound_vars(f.body(), out);
  }
}

/// φ[t/v], refusing substitutions that could capture a variable t.
inline Formula subst_checked(const Formula& f, const std::string& v, const NameRef& t) {
  if (t.is_var()) {
    std::set<std::string> b;
    bound_vars(f, b);
    if (b.count(t.var()) && free_vars(f).count(v))
      throw ProofError("substituting " + t.var() + " for " + v + " would be captured in " + to_string(f));
  }
  return substitute(f, v, t);
}

inline bool mentions(const NameRef& r, const std::string& x) { return r.is_var() && r.var() == x; }

}  // namespace detail

class NDProof {
 public:
  enum class Rule {
    Assume, ImpIntro, ImpElim, AndIntro, AndElim0, AndElim1, OrIntro0, OrIntro1, OrElim,
    NegIntro, NegElim, AllIntro, AllElim, ExIntro, ExElim,
    AllInIntro, AllInElim, ExInIntro, ExInElim,
    Refl, Sym, Trans, Subst,
  };
  using Context = std::map<std::string, Formula>;

  static NDProof assume(std::string h, Formula f) {
    NDProof p(Rule::Assume, f);
    p.n_->label = h;
    p.n_->open.emplace(std::move(h), std::move(f));
    return p;
  }

  /// From ψ under the hypothesis h: φ, conclude φ ⇒ ψ.
  static NDProof imp_intro(std::string h, Formula hyp, NDProof body) {
    NDProof p(Rule::ImpIntro, Formula::imp(hyp, body.conclusion()), {body});
    p.n_->label = h;
    p.discharge(h, hyp);
    return p;
  }

  static NDProof imp_elim(NDProof f, NDProof a) {
    const Formula& c = f.conclusion();
    if (c.kind() != Formula::Kind::Imp || !alpha_equal(c.left(), a.conclusion()))
      throw ProofError("imp_elim: " + to_string(c) + " does not apply to " + to_string(a.conclusion()));
    return NDProof(Rule::ImpElim, c.right(), {f, a});
  }

  static NDProof and_intro(NDProof l, NDProof r) {
    return NDProof(Rule::AndIntro, Formula::conj(l.conclusion(), r.conclusion()), {l, r});
  }

  static NDProof and_elim(int side, NDProof p) {
    require_kind(p, Formula::Kind::And, "and_elim");
    return NDProof(side ? Rule::AndElim1 : Rule::AndElim0, side ? p.conclusion().right() : p.conclusion().left(), {p});
  }

  /// From φ (side 0) or ψ (side 1), conclude φ ∨ ψ; `other` is the disjunct not proved.
  static NDProof or_intro(int side, Formula other, NDProof p) {
    Formula c = side ? Formula::disj(other, p.conclusion()) : Formula::disj(p.conclusion(), other);
    return NDProof(side ? Rule::OrIntro1 : Rule::OrIntro0, c, {p});
  }

  /// From φ ∨ ψ, χ under h0: φ and χ under h1: ψ, conclude χ.
  static NDProof or_elim(NDProof d, std::string h0, NDProof c0, std::string h1, NDProof c1) {
    require_kind(d, Formula::Kind::Or, "or_elim");
    if (!alpha_equal(c0.conclusion(), c1.conclusion()))
      throw ProofError("or_elim: branches conclude " + to_string(c0.conclusion()) + " and " + to_string(c1.conclusion()));
    NDProof b0 = c0, b1 = c1;
    NDProof p(Rule::OrElim, c0.conclusion());
    p.n_->premises = {d, c0, c1};
    p.n_->label = h0;
    p.n_->label2 = h1;
    p.n_->open = d.open();
    Context o0 = c0.open(), o1 = c1.open();
    take(o0, h0, d.conclusion().left(), "or_elim");
    take(o1, h1, d.conclusion().right(), "or_elim");
    merge(p.n_->open, o0);
    merge(p.n_->open, o1);
    return p;
  }

  /// From ψ and ¬ψ under h: φ, conclude ¬φ.
  static NDProof neg_intro(std::string h, Formula hyp, NDProof p, NDProof np) {
    if (np.conclusion().kind() != Formula::Kind::Not || !alpha_equal(np.conclusion().left(), p.conclusion()))
      throw ProofError("neg_intro: " + to_string(np.conclusion()) + " does not negate " + to_string(p.conclusion()));
    NDProof q(Rule::NegIntro, Formula::neg(hyp), {p, np});
    q.n_->label = h;
    q.discharge(h, hyp);
    return q;
  }

  /// From φ and ¬φ, conclude anything.
  static NDProof neg_elim(NDProof p, NDProof np, Formula goal) {
    if (np.conclusion().kind() != Formula::Kind::Not || !alpha_equal(np.conclusion().left(), p.conclusion()))
      throw ProofError("neg_elim: " + to_string(np.conclusion()) + " does not negate " + to_string(p.conclusion()));
    return NDProof(Rule::NegElim, std::move(goal), {p, np});
  }

  static NDProof all_intro(std::string x, NDProof p) {
    for (const auto& [h, f] : p.open())
      if (free_vars(f).count(x)) throw ProofError("all_intro: " + x + " is free in hypothesis " + h);
    NDProof q(Rule::AllIntro, Formula::all(x, p.conclusion()), {p});
    q.n_->label = x;
    return q;
  }

  static NDProof all_elim(NDProof p, NameRef t) {
    require_kind(p, Formula::Kind::All, "all_elim");
    return NDProof(Rule::AllElim, detail::subst_checked(p.conclusion().body(), p.conclusion().var(), t), {p});
  }

  /// From body[t/x], conclude ∃x body.
  static NDProof ex_intro(std::string x, Formula body, NameRef t, NDProof p) {
    Formula inst = detail::subst_checked(body, x, t);
    if (!alpha_equal(inst, p.conclusion()))
      throw ProofError("ex_intro: " + to_string(p.conclusion()) + " is not " + to_string(inst));
    return NDProof(Rule::ExIntro, Formula::ex(x, body), {p});
  }

  /// From ∃x φ and χ under h: φ[y/x] with y fresh, conclude χ.
  static NDProof ex_elim(NDProof e, std::string y, std::string h, NDProof c) {
    require_kind(e, Formula::Kind::Ex, "ex_elim");
    Formula inst = detail::subst_checked(e.conclusion().body(), e.conclusion().var(), NameRef(y));
    eigen(y, c, h, {e.conclusion(), c.conclusion()}, "ex_elim");
    NDProof p(Rule::ExElim, c.conclusion());
    p.n_->premises = {e, c};
    p.n_->label = h;
    p.n_->open = e.open();
    Context oc = c.open();
    take(oc, h, inst, "ex_elim");
    merge(p.n_->open, oc);
    return p;
  }

  /// From φ under h: x ∈ y with x fresh, conclude ∀x∈y φ.
  static NDProof all_in_intro(std::string x, NameRef y, std::string h, NDProof p) {
    if (detail::mentions(y, x)) throw ProofError("all_in_intro: bound mentions the eigenvariable");
    eigen(x, p, h, {}, "all_in_intro");
    NDProof q(Rule::AllInIntro, Formula::all_in(x, y, p.conclusion()), {p});
    q.n_->label = h;
    q.discharge(h, Formula::mem(NameRef(x), y));
    return q;
  }

  /// From ∀x∈y φ and t ∈ y, conclude φ[t/x].
  static NDProof all_in_elim(NDProof p, NDProof m) {
    require_kind(p, Formula::Kind::AllIn, "all_in_elim");
    const Formula& c = p.conclusion();
    const Formula& mc = m.conclusion();
    if (mc.kind() != Formula::Kind::Mem || !same_ref(mc.y(), c.bound()))
      throw ProofError("all_in_elim: " + to_string(mc) + " is not a membership in the bound");
    return NDProof(Rule::AllInElim, detail::subst_checked(c.body(), c.var(), mc.x()), {p, m});
  }

  /// From t ∈ y and body[t/x], conclude ∃x∈y body.
  static NDProof ex_in_intro(std::string x, Formula body, NDProof m, NDProof p) {
    const Formula& mc = m.conclusion();
    if (mc.kind() != Formula::Kind::Mem) throw ProofError("ex_in_intro: first premise is not a membership");
    Formula inst = detail::subst_checked(body, x, mc.x());
    if (!alpha_equal(inst, p.conclusion()))
      throw ProofError("ex_in_intro: " + to_string(p.conclusion()) + " is not " + to_string(inst));
    NDProof q(Rule::ExInIntro, Formula::ex_in(x, mc.y(), body), {m, p});
    q.n_->label = x;
    return q;
  }

  /// From ∃x∈y φ and χ under hm: x' ∈ y, hb: φ[x'/x] with x' fresh, conclude χ.
  static NDProof ex_in_elim(NDProof e, std::string x, std::string hm, std::string hb, NDProof c) {
    require_kind(e, Formula::Kind::ExIn, "ex_in_elim");
    const Formula& ec = e.conclusion();
    Formula inst = detail::subst_checked(ec.body(), ec.var(), NameRef(x));
    Context oc = c.open();
    oc.erase(hm);
    oc.erase(hb);
    for (const auto& [h, f] : oc)
      if (free_vars(f).count(x)) throw ProofError("ex_in_elim: " + x + " is free in hypothesis " + h);
    if (free_vars(c.conclusion()).count(x) || free_vars(ec).count(x))
      throw ProofError("ex_in_elim: eigenvariable " + x + " escapes");
    NDProof p(Rule::ExInElim, c.conclusion());
    p.n_->premises = {e, c};
    p.n_->label = hm;
    p.n_->label2 = hb;
    p.n_->open = e.open();
    Context rest = c.open();
    take(rest, hm, Formula::mem(NameRef(x), ec.bound()), "ex_in_elim");
    take(rest, hb, inst, "ex_in_elim");
    merge(p.n_->open, rest);
    return p;
  }

  static NDProof refl(NameRef t) { return NDProof(Rule::Refl, Formula::eq(t, t)); }

  static NDProof sym(NDProof p) {
    require_kind(p, Formula::Kind::Eq, "sym");
    return NDProof(Rule::Sym, Formula::eq(p.conclusion().y(), p.conclusion().x()), {p});
  }

  static NDProof trans(NDProof p, NDProof q) {
    require_kind(p, Formula::Kind::Eq, "trans");
    require_kind(q, Formula::Kind::Eq, "trans");
    if (!same_ref(p.conclusion().y(), q.conclusion().x()))
      throw ProofError("trans: " + to_string(p.conclusion()) + " and " + to_string(q.conclusion()) + " do not chain");
    return NDProof(Rule::Trans, Formula::eq(p.conclusion().x(), q.conclusion().y()), {p, q});
  }

  /// From s = t and φ[s/x], conclude φ[t/x].
  static NDProof subst(std::string x, Formula phi, NDProof eq, NDProof p) {
    require_kind(eq, Formula::Kind::Eq, "subst");
    const NameRef& s = eq.conclusion().x();
    const NameRef& t = eq.conclusion().y();
    Formula from = detail::subst_checked(phi, x, s);
    if (!alpha_equal(from, p.conclusion()))
      throw ProofError("subst: " + to_string(p.conclusion()) + " is not " + to_string(from));
    NDProof q(Rule::Subst, detail::subst_checked(phi, x, t), {eq, p});
    q.n_->label = x;
    q.n_->motive = phi;
    return q;
  }

  Rule rule() const { return n_->rule; }
  const Formula& conclusion() const { return n_->conclusion; }
  const std::vector<NDProof>& premises() const { return n_->premises; }
  const Context& open() const { return n_->open; }
  const std::string& label() const { return n_->label; }
  const std::string& label2() const { return n_->label2; }
  const Formula& motive() const { return *n_->motive; }

 private:
  struct Node {
    Rule rule;
    Formula conclusion;
    std::vector<NDProof> premises;
    Context open;
    std::string label, label2;
    std::optional<Formula> motive;
  };

  NDProof(Rule r, Formula c, std::vector<NDProof> ps = {})
      : n_(std::make_shared<Node>(Node{r, std::move(c), std::move(ps), {}, {}, {}, std::nullopt})) {
    for (const auto& p : n_->premises) merge(n_->open, p.open());
  }

  static bool same_ref(const NameRef& a, const NameRef& b) {
    if (a.is_var() != b.is_var()) return false;
    return a.is_var() ? a.var() == b.var() : a.name() == b.name();
  }

  static void require_kind(const NDProof& p, Formula::Kind k, const char* rule) {
    if (p.conclusion().kind() != k) throw ProofError(std::string(rule) + ": wrong premise " + to_string(p.conclusion()));
  }

  static void merge(Context& into, const Context& from) {
    for (const auto& [h, f] : from) {
      auto it = into.find(h);
      if (it == into.end()) into.emplace(h, f);
      else if (!alpha_equal(it->second, f))
        throw ProofError("hypothesis " + h + " used as " + to_string(it->second) + " and " + to_string(f));
    }
  }

  static void take(Context& c, const std::string& h, const Formula& f, const char* rule) {
    auto it = c.find(h);
    if (it == c.end()) return;
    if (!alpha_equal(it->second, f))
      throw ProofError(std::string(rule) + ": hypothesis " + h + " is " + to_string(it->second) + ", expected " + to_string(f));
    c.erase(it);
  }

  static void eigen(const std::string& x, const NDProof& p, const std::string& h, std::vector<Formula> also,
                    const char* rule) {
    for (const auto& [k, f] : p.open())
      if (k != h && free_vars(f).count(x)) throw ProofError(std::string(rule) + ": " + x + " is free in hypothesis " + k);
    for (const auto& f : also)
      if (free_vars(f).count(x)) throw ProofError(std::string(rule) + ": eigenvariable " + x + " escapes");
  }

  void discharge(const std::string& h, const Formula& f) {
    n_->open = {};
    for (const auto& p : n_->premises) merge(n_->open, p.open());
    take(n_->open, h, f, "discharge");
  }

  std::shared_ptr<Node> n_;
};

// ---------------------------------------------------------------------------

namespace detail {

class Extractor {
 public:
  Term run(const NDProof& p) {
    using R = NDProof::Rule;
    const auto& ps = p.premises();
    switch (p.rule()) {
      case R::Assume: return Term::var(hyp(p.label()));
      case R::ImpIntro: return Term::lam(hyp(p.label()), run(ps[0]));
      case R::ImpElim: return Term::app(run(ps[0]), run(ps[1]));
      case R::AndIntro: return apps(C(ConstKind::P), {run(ps[0]), run(ps[1])});
      case R::AndElim0: return Term::app(C(ConstKind::P0), run(ps[0]));
      case R::AndElim1: return Term::app(C(ConstKind::P1), run(ps[0]));
      case R::OrIntro0: return apps(C(ConstKind::P), {Term::num(0ull), run(ps[0])});
      case R::OrIntro1: return apps(C(ConstKind::P), {Term::num(1ull), run(ps[0])});
      case R::OrElim: {
        std::string d = fresh("d");
        Term on0 = Term::app(Term::lam(hyp(p.label()), run(ps[1])), Term::app(C(ConstKind::P1), Term::var(d)));
        Term on1 = Term::app(Term::lam(hyp(p.label2()), run(ps[2])), Term::app(C(ConstKind::P1), Term::var(d)));
        return Term::app(Term::lam(d, dispatch(Term::app(C(ConstKind::P0), Term::var(d)), on0, on1)), run(ps[0]));
      }
      case R::NegIntro:
      case R::NegElim: return Term::num(0ull);
      case R::AllIntro:
      case R::AllElim:
      case R::ExIntro: return run(ps[0]);
      case R::ExElim: return Term::app(Term::lam(hyp(p.label()), run(ps[1])), run(ps[0]));
      case R::AllInIntro: {
        std::string c = fresh("c");
        return Term::lam(c, Term::app(Term::lam(hyp(p.label()), run(ps[0])), apps(C(ConstKind::P), {Term::var(c), lib("i_r")})));
      }
      case R::AllInElim: {
        const Formula& all = ps[0].conclusion();
        std::string q = fresh("q");
        Term r = Term::app(lib("i_s"), Term::app(C(ConstKind::P1), Term::var(q)));
        Term body = Term::app(transport(all.body(), all.var(), r), Term::app(run(ps[0]), Term::app(C(ConstKind::P0), Term::var(q))));
        return Term::app(Term::lam(q, body), run(ps[1]));
      }
      case R::ExInIntro: {
        const Formula& ex = p.conclusion();
        std::string q = fresh("q");
        Term r = Term::app(C(ConstKind::P1), Term::var(q));
        Term body = apps(C(ConstKind::P), {Term::app(C(ConstKind::P0), Term::var(q)),
                                           Term::app(transport(ex.body(), ex.var(), r), run(ps[1]))});
        return Term::app(Term::lam(q, body), run(ps[0]));
      }
      case R::ExInElim: {
        std::string e = fresh("e");
        Term k = Term::app(C(ConstKind::P0), Term::var(e));
        Term inner = Term::lam(hyp(p.label()), Term::lam(hyp(p.label2()), run(ps[1])));
        Term body = apps(inner, {apps(C(ConstKind::P), {k, lib("i_r")}), Term::app(C(ConstKind::P1), Term::var(e))});
        return Term::app(Term::lam(e, body), run(ps[0]));
      }
      case R::Refl: return lib("i_r");
      case R::Sym: return Term::app(lib("i_s"), run(ps[0]));
      case R::Trans: return Term::app(lib("i_t"), apps(C(ConstKind::P), {run(ps[0]), run(ps[1])}));
      case R::Subst: return Term::app(transport(p.motive(), p.label(), run(ps[0])), run(ps[1]));
    }
    throw ProofError("extract: unknown rule");
  }

  /// A term mapping realizers of φ[s/x] to realizers of φ[t/x], given a
  /// term r realizing s = t.
  Term transport(const Formula& f, const std::string& x, const Term& r) {
    using K = Formula::Kind;
    std::string q = fresh("q");
    Term Q = Term::var(q);
    auto ident = [&] { return Term::lam(q, Q); };
    if (!free_vars(f).count(x)) return ident();
    std::string rv = fresh("r");
    Term R = Term::var(rv);
    Term Rs = Term::app(lib("i_s"), R);
    auto pair = [](Term a, Term b) { return apps(C(ConstKind::P), {std::move(a), std::move(b)}); };
    auto p0 = [](Term a) { return Term::app(C(ConstKind::P0), std::move(a)); };
    auto p1 = [](Term a) { return Term::app(C(ConstKind::P1), std::move(a)); };
    Term body = Q;
    switch (f.kind()) {
      case K::Eq: {
        bool l = mentions(f.x(), x), rr = mentions(f.y(), x);
        if (l && rr) body = Term::app(lib("i_t"), pair(Rs, Term::app(lib("i_t"), pair(Q, R))));
        else if (l) body = Term::app(lib("i_t"), pair(Rs, Q));
        else body = Term::app(lib("i_t"), pair(Q, R));
        break;
      }
      case K::Mem: {
        bool l = mentions(f.x(), x), rr = mentions(f.y(), x);
        if (l && rr) body = Term::app(lib("i_1"), pair(R, Term::app(lib("i_0"), pair(Rs, Q))));
        else if (l) body = Term::app(lib("i_0"), pair(Rs, Q));
        else body = Term::app(lib("i_1"), pair(R, Q));
        break;
      }
      case K::And:
        body = pair(Term::app(transport(f.left(), x, R), p0(Q)), Term::app(transport(f.right(), x, R), p1(Q)));
        break;
      case K::Or: {
        Term on0 = pair(Term::num(0ull), Term::app(transport(f.left(), x, R), p1(Q)));
        Term on1 = pair(Term::num(1ull), Term::app(transport(f.right(), x, R), p1(Q)));
        body = dispatch(p0(Q), on0, on1);
        break;
      }
      case K::Imp: {
        std::string c = fresh("c");
        body = Term::lam(c, Term::app(transport(f.right(), x, R),
                                      Term::app(Q, Term::app(transport(f.left(), x, Rs), Term::var(c)))));
        break;
      }
      case K::Not: break;
      case K::All:
      case K::Ex: body = Term::app(transport(f.body(), x, R), Q); break;
      case K::AllIn: {
        std::string c = fresh("c"), m = fresh("m");
        if (!mentions(f.bound(), x)) {
          body = Term::lam(c, Term::app(transport(f.body(), x, R), Term::app(Q, Term::var(c))));
          break;
        }
        // ⟨c,d,z⟩ ∈ t: (r c)₁ ⊩ z ∈ s gives a key k of s and z' = z.
        Term M = Term::var(m);
        Term along_v = Term::app(transport(f.body(), f.var(), Term::app(lib("i_s"), p1(M))), Term::app(Q, p0(M)));
        Term along_x = f.var() == x ? along_v : Term::app(transport(f.body(), x, R), along_v);
        body = Term::lam(c, Term::app(Term::lam(m, along_x), p1(Term::app(R, Term::var(c)))));
        break;
      }
      case K::ExIn: {
        if (!mentions(f.bound(), x)) {
          body = pair(p0(Q), Term::app(transport(f.body(), x, R), p1(Q)));
          break;
        }
        // key k of s; (r k)₀ ⊩ z' ∈ t gives the key in t and z' = z''.
        std::string m = fresh("m");
        Term M = Term::var(m);
        Term along_v = Term::app(transport(f.body(), f.var(), p1(M)), p1(Q));
        Term along_x = f.var() == x ? along_v : Term::app(transport(f.body(), x, R), along_v);
        body = Term::app(Term::lam(m, pair(p0(M), along_x)), p0(Term::app(R, p0(Q))));
        break;
      }
    }
    return Term::app(Term::lam(rv, Term::lam(q, body)), r);
  }

 private:
  static Term C(ConstKind k) { return Term::constant(k); }
  static Term lib(const char* id) { return Term::quote(realizer(id)); }

  /// Hypothesis labels live in their own namespace.
  static std::string hyp(const std::string& h) { return "h:" + h; }
  std::string fresh(const char* base) { return std::string("$") + base + std::to_string(++counter_); }

  Term dispatch(Term tag, Term on0, Term on1) {
    std::string u = fresh("u");
    return apps(C(ConstKind::D), {std::move(tag), Term::num(0ull), Term::lam(u, std::move(on0)), Term::lam(u, std::move(on1)), C(ConstKind::K)});
  }

  std::size_t counter_ = 0;
};

}  // namespace detail

/// The λ-term of a proof, with open hypotheses h as free variables "h:h".
inline Term extract_lambda(const NDProof& p) { return detail::Extractor().run(p); }

/// The compiled realizer of a proof without open hypotheses.
inline Term extract(const NDProof& p) {
  if (!p.open().empty()) throw ProofError("extract: proof has open hypothesis " + p.open().begin()->first);
  return compile(extract_lambda(p));
}

inline Value extract_value(const NDProof& p) {
  auto out = eval(extract(p));
  if (!out.defined()) throw EvalError("extracted realizer does not evaluate: " + out.describe());
  return out.value();
}

/// Realizer of the transport φ[s/x] ⟹ φ[t/x] along r ⊩ s = t.
inline Value transport_value(const Formula& phi, const std::string& x, const Value& r) {
  auto out = eval(compile(detail::Extractor().transport(phi, x, Term::quote(r))));
  if (!out.defined()) throw EvalError("transport does not evaluate: " + out.describe());
  return out.value();
}

}  // namespace pca
