#pragma once

// Built-in property suites. Each suite is deterministic given the seed and
// reports every case; a failing case carries a scenario snippet that
// reproduces it on its own.

#include "pca/axioms.hpp"
#include "pca/compiler.hpp"
#include "pca/directives.hpp"
#include "pca/gen.hpp"
#include "pca/instances.hpp"
#include "pca/realizers.hpp"

#include <chrono>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pca {

enum class Outcome { Pass, Fail, Inconclusive };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct SuiteCase {
  std::string label;
  Outcome outcome = Outcome::Pass;
  std::string detail;
  std::string snippet;
};

struct SuiteReport {
  std::string id;
  std::uint64_t seed = 0;
  std::vector<SuiteCase> cases;
  double seconds = 0;

  std::size_t count(Outcome o) const {
    std::size_t n = 0;
    for (const auto& c : cases) n += c.outcome == o;
    return n;
  }
  std::size_t failures() const { return count(Outcome::Fail); }
};

inline const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {"pca-laws",          "abstraction", "fixpoints",   "equality",    "czf-axioms",
                                               "pairing-internal", "heo",         "choice-arrow", "truth-oracle"};
  return ids;
}

namespace suites {

inline Term q(const Value& v) { return Term::quote(v); }

inline Value call(const Value& f, std::initializer_list<Value> xs, const FuelConfig& cfg = {}) {
  auto out = apply_all(f, xs, cfg);
  if (!out.defined()) throw EvalError(out.describe());
  return out.value();
}
inline Value p0(const Value& v) { return call(defined_constant(ConstKind::P0), {v}); }
inline Value p1(const Value& v) { return call(defined_constant(ConstKind::P1), {v}); }
inline Value pair(const Value& x, const Value& y) { return detail::pair_value(x, y); }
inline RealizerPair diag(const Value& v) { return RealizerPair::diag(v); }
inline const Value& lib(const char* id) { return realizer(id); }
inline NameRef ref(const VName& x) { return NameRef(x); }
inline NameRef var(const char* v) { return NameRef(std::string(v)); }
inline NameRef nat(unsigned n) { return NameRef(VName::nat(n)); }

class Recorder {
 public:
  Recorder(std::string id, const RunConfig& cfg) : cfg_(cfg) {
    report_.id = std::move(id);
    report_.seed = cfg.seed;
  }

  const RunConfig& cfg() const { return cfg_; }

  /// Inconclusive evaluations count as such when `allow_unknown`, else fail.
  Outcome eval(std::string label, const EvalSpec& e, bool allow_unknown = false) {
    return run(std::move(label), [&] { return e.run(cfg_); }, [&] { return e.line(); }, allow_unknown);
  }

  void check(std::string label, const CheckSpec& c, bool allow_unknown = false) {
    run(std::move(label), [&] { return c.run(cfg_); }, [&] { return c.line(); }, allow_unknown);
  }

  void synth(std::string label, const SynthSpec& s) {
    run(std::move(label), [&] { return s.run(cfg_); }, [&] { return s.line(); }, false);
  }

  /// A property with no directive form; its snippet reruns the suite.
  void fact(std::string label, bool ok, std::string detail = {}) {
    SuiteCase c{std::move(label), ok ? Outcome::Pass : Outcome::Fail, std::move(detail), {}};
    if (!ok) c.snippet = header() + "seed " + std::to_string(cfg_.seed) + "\nsuite " + report_.id + "\n";
    report_.cases.push_back(std::move(c));
  }

  void guarded(const std::string& label, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      fact(label, false, std::string("exception: ") + e.what());
    }
  }

  SuiteReport finish(double seconds) {
    report_.seconds = seconds;
    return std::move(report_);
  }

 private:
  std::string header() const { return "-- " + report_.id + "\n" + config_lines(cfg_); }

  Outcome run(std::string label, const std::function<DirectiveResult()>& body, const std::function<std::string()>& line,
              bool allow_unknown) {
    SuiteCase c;
    c.label = std::move(label);
    try {
      DirectiveResult r = body();
      c.detail = r.summary;
      c.outcome = r.passed ? Outcome::Pass : (allow_unknown && r.inconclusive ? Outcome::Inconclusive : Outcome::Fail);
      if (r.verdict && c.outcome == Outcome::Fail) c.detail += "\n" + render_trace(r.verdict->trace, 4);
    } catch (const std::exception& e) {
      c.outcome = Outcome::Fail;
      c.detail = std::string("exception: ") + e.what();
    }
    if (c.outcome == Outcome::Fail) c.snippet = header() + line() + "\n";
    report_.cases.push_back(std::move(c));
    return report_.cases.back().outcome;
  }

  RunConfig cfg_;
  SuiteReport report_;
};

inline EvalSpec law(Term lhs, Term rhs) { return EvalSpec{std::move(lhs), std::move(rhs)}; }

inline CheckSpec realizes(const Value& a, Formula f, Status expect = Status::Realized) {
  CheckSpec c{diag(a), std::move(f)};
  c.expect = expect;
  return c;
}

inline CheckSpec on_witnesses(const Value& a, const Formula& phi, const Formula& psi, std::vector<RealizerPair> ws) {
  CheckSpec c{diag(a), Formula::imp(phi, psi)};
  c.on_witnesses = true;
  c.witnesses = std::move(ws);
  return c;
}

// ---------------------------------------------------------------------------

inline void pca_laws(Recorder& r) {
  Rng rng(r.cfg().seed);
  const Term k = Term::constant(ConstKind::K), kb = Term::constant(ConstKind::Kbar), s = Term::constant(ConstKind::S);
  const Term d = Term::constant(ConstKind::D), succ = Term::constant(ConstKind::Succ), pred = Term::constant(ConstKind::Pred);
  const Term p = Term::constant(ConstKind::P), pp0 = Term::constant(ConstKind::P0), pp1 = Term::constant(ConstKind::P1);
  for (int i = 0; i < 200; ++i) {
    std::string n = std::to_string(i);
    Value a = random_value(rng), b = random_value(rng), c = random_value(rng);
    r.eval("k " + n, law(apps(k, {q(a), q(b)}), q(a)));
    r.eval("kbar " + n, law(apps(kb, {q(a), q(b)}), q(b)));
    r.eval("s " + n, law(apps(s, {q(a), q(b), q(c)}), Term::app(Term::app(q(a), q(c)), Term::app(q(b), q(c)))));
    unsigned long long x = uniform(rng, 6), y = uniform(rng, 6);
    r.eval("d " + n, law(apps(d, {Term::num(x), Term::num(y), q(a), q(b)}), q(x == y ? a : b)));
    unsigned long long m = uniform(rng, 1000000000);
    r.eval("succ " + n, law(Term::app(succ, Term::num(m)), Term::num(m + 1)));
    r.eval("pred " + n, law(Term::app(pred, Term::app(succ, Term::num(m))), Term::num(m)));
    r.eval("p0 " + n, law(Term::app(pp0, apps(p, {q(a), q(b)})), q(a)));
    r.eval("p1 " + n, law(Term::app(pp1, apps(p, {q(a), q(b)})), q(b)));
  }
  r.eval("pred 0 is undefined", EvalSpec{Term::app(pred, Term::num(0ull)), std::nullopt, false, true});
  r.eval("d on a non-numeral is undefined",
         EvalSpec{apps(d, {k, Term::num(0ull), Term::num(1ull), Term::num(2ull)}), std::nullopt, false, true});
}

inline void abstraction(Recorder& r) {
  Rng rng(r.cfg().seed);
  for (int i = 0; i < 100; ++i) {
    Term t = random_term(rng, 2 + uniform(rng, 11), {"x", "x", "y"});
    t = substitute(t, "y", q(random_value(rng)));
    Value a = random_value(rng);
    r.eval("instance " + std::to_string(i), law(Term::app(Term::lam("x", t), q(a)), substitute(t, "x", q(a))), true);
  }
  Rng rng2(r.cfg().seed + 1);
  for (int i = 0; i < 50; ++i) {
    Term body = random_term(rng2, 2 + uniform(rng2, 11), {"x", "y"});
    Term closed = substitute(Term::lam("x", body), "y", q(random_value(rng2)));
    r.eval("closure defined " + std::to_string(i), EvalSpec{closed, std::nullopt, true});
  }
}

inline void fixpoints(Recorder& r) {
  Rng rng(r.cfg().seed);
  const Term& f = fixpoint();
  const auto& [g, h] = double_fixpoint();
  // Random instances may diverge on both sides; draw until 50 are decided.
  auto decided = [&](const std::function<Outcome(const std::string&)>& one) {
    for (int i = 0, n = 0; n < 50 && i < 200; ++i) n += one(std::to_string(i)) != Outcome::Inconclusive;
  };
  decided([&](const std::string& n) {
    Value a = random_value(rng, 2, false);
    return r.eval("f a defined " + n, EvalSpec{Term::app(f, q(a)), std::nullopt, true});
  });
  decided([&](const std::string& n) {
    Value a = random_value(rng, 2, false), b = random_value(rng);
    return r.eval("f a b " + n, law(apps(f, {q(a), q(b)}), apps(q(a), {Term::app(f, q(a)), q(b)})), true);
  });
  decided([&](const std::string& n) {
    Value u = random_value(rng), v = random_value(rng), c = random_value(rng);
    return r.eval("g a b c " + n, law(apps(g, {q(u), q(v), q(c)}), apps(q(u), {apps(h, {q(u), q(v)}), q(c)})), true);
  });
  decided([&](const std::string& n) {
    Value u = random_value(rng), v = random_value(rng), c = random_value(rng);
    return r.eval("h a b c " + n, law(apps(h, {q(u), q(v), q(c)}), apps(q(v), {apps(g, {q(u), q(v)}), q(c)})), true);
  });
  Value a = Value::opaque("a");
  Term b = compile_source("\\u v. P u v");
  const Term& rec = primrec();
  r.eval("r a b 0", law(apps(rec, {q(a), b, Term::num(0ull)}), q(a)));
  for (unsigned long long n = 0; n < 5; ++n)
    r.eval("r a b " + std::to_string(n + 1),
           law(apps(rec, {q(a), b, Term::num(n + 1)}), apps(b, {apps(rec, {q(a), b, Term::num(n)}), Term::num(n)})));
  for (unsigned long long m = 0; m < 6; ++m)
    for (unsigned long long n = 0; n < 6; ++n)
      r.eval("add " + std::to_string(m) + " " + std::to_string(n), law(apps(adder(), {Term::num(m), Term::num(n)}), Term::num(m + n)));
}

inline void equality(Recorder& r) {
  Rng rng(r.cfg().seed);
  for (int i = 0; i < 30; ++i) {
    VName x = random_finite_name(rng, 3);
    r.check("i_r on random name " + std::to_string(i), realizes(lib("i_r"), Formula::eq(ref(x), ref(x))));
  }
  for (unsigned n = 0; n <= 6; ++n) r.check("i_r on nat " + std::to_string(n), realizes(lib("i_r"), Formula::eq(nat(n), nat(n))));
  for (unsigned n = 0; n <= 4; ++n) {
    std::string tag = std::to_string(n);
    r.guarded("synthesized " + tag, [&] {
      Formula e = Formula::eq(nat(n), nat(n));
      auto s = synthesize(e);
      if (!s) throw std::runtime_error("no synthesized realizer");
      r.check("i_s on synthesized " + tag, realizes(call(lib("i_s"), {s->a}), e));
      r.check("i_t on synthesized " + tag, realizes(call(lib("i_t"), {pair(s->a, s->a)}), e));
    });
  }
  for (unsigned n = 0; n <= 3; ++n) {
    std::string tag = std::to_string(n);
    r.guarded("remapped " + tag, [&] {
      VName y = remapped_nat(n, 10), z = remapped_nat(n, 20);
      Value xy = remap_realizer(n, 10);
      r.check("remapped copy " + tag, realizes(xy, Formula::eq(nat(n), ref(y))));
      r.check("i_s on copy " + tag, realizes(call(lib("i_s"), {xy}), Formula::eq(ref(y), nat(n))));
      r.check("i_s as implication " + tag,
              on_witnesses(lib("i_s"), Formula::eq(nat(n), ref(y)), Formula::eq(ref(y), nat(n)), {diag(xy)}));
      Value yz = call(lib("i_t"), {pair(call(lib("i_s"), {xy}), remap_realizer(n, 20))});
      r.check("i_t copy to copy " + tag, realizes(yz, Formula::eq(ref(y), ref(z))));
      r.check("i_t chain " + tag, realizes(call(lib("i_t"), {pair(xy, yz)}), Formula::eq(nat(n), ref(z))));
    });
  }
  r.guarded("membership transport", [&] {
    VName y = remapped_nat(2, 10);
    Value rr = remap_realizer(2, 10);
    r.check("i_0", realizes(call(lib("i_0"), {pair(call(lib("i_s"), {rr}), pair(numeral(2), lib("i_r")))}), Formula::mem(ref(y), nat(3))));
    r.check("i_1", realizes(call(lib("i_1"), {pair(rr, pair(numeral(1), lib("i_r")))}), Formula::mem(nat(1), ref(y))));
  });
  for (unsigned n = 0; n <= 4; ++n)
    for (unsigned m = 0; m <= 4; ++m)
      if (n != m)
        r.check("refutes nat " + std::to_string(n) + " = nat " + std::to_string(m),
                realizes(lib("i_r"), Formula::eq(nat(n), nat(m)), Status::Refuted));
}

inline void czf_axioms(Recorder& r) {
  Rng rng(r.cfg().seed);
  r.guarded("pairing", [&] {
    VName x = VName::nat(1), y = VName::nat(2);
    VName z = pairing_witness(x, y);
    r.check("pairing", realizes(lib("ax.pairing"), Formula::conj(Formula::mem(ref(x), ref(z)), Formula::mem(ref(y), ref(z)))));
    for (int i = 0; i < 6; ++i) {
      VName a = random_finite_name(rng, 2), b = random_finite_name(rng, 2);
      VName w = pairing_witness(a, b);
      r.check("pairing on random names " + std::to_string(i),
              realizes(lib("ax.pairing"), Formula::conj(Formula::mem(ref(a), ref(w)), Formula::mem(ref(b), ref(w)))));
    }
  });
  r.guarded("union", [&] {
    VName x = VName::explicit_set({{numeral(0), numeral(0), VName::nat(3)}, {numeral(5), numeral(5), remapped_nat(2, 10)}});
    Formula f = Formula::all_in("u", ref(x), Formula::all_in("v", var("u"), Formula::mem(var("v"), ref(union_witness(x)))));
    r.check("union", realizes(lib("ax.union"), f));
  });
  r.guarded("extensionality", [&] {
    VName x = VName::nat(2), y = VName::upair(VName::nat(0), VName::nat(1));
    Value id = library_value("\\c. c");
    Value a = pair(id, id);
    Formula hyp = Formula::all("z", Formula::conj(Formula::imp(Formula::mem(var("z"), ref(x)), Formula::mem(var("z"), ref(y))),
                                                  Formula::imp(Formula::mem(var("z"), ref(y)), Formula::mem(var("z"), ref(x)))));
    CheckSpec h = realizes(a, hyp);
    h.instances = {VName::nat(0), VName::nat(1)};
    for (unsigned k = 0; k < 3; ++k) h.witnesses.push_back(diag(pair(numeral(k), lib("i_r"))));
    r.check("extensionality hypothesis", h);
    r.check("extensionality", realizes(call(lib("ax.ext"), {a}), Formula::eq(ref(x), ref(y))));
  });
  r.guarded("infinity", [&] {
    for (const auto& c : infinity_battery())
      r.fact("infinity " + c.label, c.status == Status::Realized, std::string(to_string(c.status)) + ": " + c.detail);
    for (const auto& o : infinity_mutations())
      r.fact("infinity mutant " + o.realizer + " @" + std::to_string(o.mutation.pos) + " " + o.mutation.from + "->" + o.mutation.to,
             o.refuted >= 1, std::to_string(o.refuted) + " refuted");
  });
  r.guarded("set induction", [&] {
    // e a ≃ a (λc. e a), observed through a = λh. P #7 h.
    Value a = library_value("\\h. P #7 h");
    Term ea = Term::app(q(lib("ax.setind")), q(a));
    r.eval("set induction equation, first component", law(Term::app(Term::constant(ConstKind::P0), ea), Term::num(7ull)));
    r.eval("set induction equation, recursive call", law(Term::app(Term::app(Term::constant(ConstKind::P1), ea), Term::num(4ull)), ea));
    Formula phi = Formula::eq(var("x"), var("x"));
    Formula step = Formula::all("x", Formula::imp(Formula::all_in("y", var("x"), Formula::eq(var("y"), var("y"))), phi));
    VName x = VName::explicit_set({{numeral(0), numeral(0), VName::nat(1)}, {numeral(3), numeral(4), VName::sing(VName::nat(0))}});
    CheckSpec c = on_witnesses(lib("ax.setind"), step, Formula::all("x", phi), {diag(library_value("\\h. i_r"))});
    c.instances = {x, VName::nat(2)};
    r.check("set induction rank-2 instance", c);
  });
  r.guarded("bounded separation", [&] {
    VName x = VName::nat(4);
    Formula phi = Formula::mem(var("u"), nat(2));
    VName y = separation_witness(x, "u", phi);
    Formula e0f = Formula::all_in("u", ref(y), Formula::conj(Formula::mem(var("u"), ref(x)), phi));
    Formula e1f = Formula::all_in("u", ref(x), Formula::imp(phi, Formula::mem(var("u"), ref(y))));
    r.check("bounded separation", realizes(lib("ax.sep"), Formula::conj(e0f, e1f)));
  });
  r.guarded("strong collection", [&] {
    VName x = VName::nat(2);
    Formula phi = Formula::eq(var("u"), var("v"));
    VName y = strong_collection_witness(x, [](const VName& u) { return u; });
    Formula hyp = Formula::all_in("u", ref(x), Formula::ex("v", phi));
    Formula concl = Formula::conj(Formula::all_in("u", ref(x), Formula::ex_in("v", ref(y), phi)),
                                  Formula::all_in("v", ref(y), Formula::ex_in("u", ref(x), phi)));
    CheckSpec c = on_witnesses(lib("ax.scoll"), hyp, concl, {diag(library_value("\\c. i_r"))});
    c.instances = {VName::nat(0), VName::nat(1)};
    r.check("strong collection", c);
  });
  r.guarded("subset collection", [&] {
    const Value& e = lib("ax.sscoll");
    Value a = library_value("\\c. P #3 c");
    r.eval("subset collection tag", law(Term::app(Term::constant(ConstKind::P0), Term::app(q(e), q(a))), Term::num(0ull)));
    Value ea = call(e, {a});
    r.eval("subset collection first", law(Term::app(q(p0(p1(ea))), Term::num(5ull)), q(pair(pair(a, numeral(5)), p1(call(a, {numeral(5)}))))));
    Value f = pair(library_value("\\x. P x x"), numeral(9));
    r.eval("subset collection second", law(Term::app(q(p1(p1(ea))), q(f)), q(pair(numeral(9), numeral(9)))));
  });
  r.guarded("powerset", [&] {
    VName x = VName::nat(3);
    Value a = library_value("\\c. P c i_r");
    std::vector<VName::Triple> cands = {{a, a, VName::nat(2)}, {a, a, VName::nat(4)}};
    VName y = powerset_witness(x, cands);
    r.check("powerset subset", realizes(a, Formula::all_in("u", nat(2), Formula::mem(var("u"), ref(x)))));
    r.check("powerset", realizes(call(lib("ax.power"), {a}), Formula::mem(nat(2), ref(y))));
  });
}

inline void pairing_internal(Recorder& r) {
  Rng rng(r.cfg().seed);
  auto pr = pairing_realizers();
  for (int i = 0; i < 8; ++i) {
    std::string n = std::to_string(i);
    VName x = random_finite_name(rng, 2), y = random_finite_name(rng, 2);
    r.check("u0 " + n, realizes(pr.u0, UP(ref(x), ref(x), ref(VName::sing(x)))));
    r.check("u1 " + n, realizes(pr.u1, UP(ref(x), ref(y), ref(VName::upair(x, y)))));
    r.check("v " + n, realizes(pr.v, OP(ref(x), ref(y), ref(VName::opair(x, y)))));
  }
  for (int i = 0; i < 4; ++i) {
    std::string n = std::to_string(i);
    VName x = random_finite_name(rng, 2), y = random_finite_name(rng, 2);
    VName canon = VName::opair(x, y);
    VName variant = VName::explicit_set({{numeral(0), numeral(0), VName::upair(x, x)}, {numeral(1), numeral(1), VName::upair(x, y)}});
    r.check("z canonical " + n, on_witnesses(pr.z, OP(ref(x), ref(y), ref(canon)), Formula::eq(ref(canon), ref(canon)), {diag(pr.v)}));
    r.check("z variant " + n, on_witnesses(pr.z, OP(ref(x), ref(y), ref(variant)), Formula::eq(ref(variant), ref(canon)), {diag(pr.v)}));
    r.guarded("w round trip " + n, [&] {
      Value zv = call(pr.z, {pr.v});
      Formula eqp = Formula::eq(ref(canon), ref(canon));
      r.check("z v " + n, realizes(zv, eqp));
      r.check("w " + n,
              on_witnesses(pr.w, eqp, Formula::conj(Formula::eq(ref(x), ref(x)), Formula::eq(ref(y), ref(y))), {diag(zv)}));
    });
  }
}

inline void heo(Recorder& r) {
  const FinType O = FinType::o(), OO = FinType::arrow(O, O);
  for (unsigned n = 0; n <= 6; ++n)
    for (unsigned m = 0; m <= 6; ++m) {
      Tri e = eq_type(numeral(n), numeral(m), O, r.cfg().budget).result;
      r.fact("eq_type o " + std::to_string(n) + " " + std::to_string(m), e == (n == m ? Tri::True : Tri::False), to_string(e));
    }
  r.fact("eq_type o on a non-numeral",
         eq_type(Value::comb(Combinator::K), Value::comb(Combinator::K), O, r.cfg().budget).result == Tri::False);
  TypeEq sp = eq_type(Value::comb(Combinator::Succ), Value::comb(Combinator::Pred), OO, r.cfg().budget);
  r.fact("SUCC vs PRED at (o)o", sp.result == Tri::False, sp.witness);
  TypeEq ss = eq_type(Value::comb(Combinator::Succ), library_value("\\x. SUCC x"), OO, r.cfg().budget);
  r.fact("SUCC vs its eta expansion is sampled", ss.result == Tri::Unknown && ss.passed == ss.samples,
         std::to_string(ss.passed) + "/" + std::to_string(ss.samples));
  r.fact("internalize 3 at o", internalize(numeral(3), O) == VName::nat(3));
  r.check("internalized numeral equals nat 3", realizes(lib("i_r"), Formula::eq(ref(internalize(numeral(3), O)), nat(3))));
  EnumBudget b = r.cfg().budget;
  b.max_index = 6;
  Value k2 = Value::comb(Combinator::K).with_arg(numeral(2));
  Value d2 = library_value("\\x. D x x #2 #2");
  auto xs = enumerate_triples(internalize(k2, OO), b).triples;
  auto ys = enumerate_triples(internalize(d2, OO), b).triples;
  r.fact("constant functions enumerate alike", xs == ys && xs.size() == 6, std::to_string(xs.size()) + " triples");
}

inline void choice_arrow(Recorder& r) {
  const FinType O = FinType::o(), OO = FinType::arrow(O, O);
  const EnumBudget& budget = r.cfg().budget;
  VName F = VName::type_name(O);
  auto sampled_all_in = [&](const std::string& label, const Value& u, const VName& X, const std::string& x, const Formula& body) {
    auto ts = enumerate_triples(X, budget, r.cfg().fuel).triples;
    for (std::size_t i = 0; i < ts.size(); ++i)
      r.check(label + " at " + to_string(ts[i].a), realizes(call(u, {ts[i].a}), substitute(body, x, ts[i].y)));
  };
  r.guarded("graph triples", [&] {
    Value a = library_value("\\c. P (SUCC c) (P c i_r)");
    auto ts = enumerate_triples(VName::graph(a, O, O), budget).triples;
    for (unsigned c = 0; c < 3; ++c)
      r.fact("graph triple " + std::to_string(c),
             c < ts.size() && ts[c].a == numeral(c) && ts[c].y == VName::opair(VName::nat(c), VName::nat(c + 1)));
  });
  const Value& e = choice_realizer(O, O);
  struct Case {
    const char* a;
    Formula phi;
  };
  std::vector<Case> cases = {{"\\c. P c i_r", Formula::eq(var("y"), var("x"))},
                             {"\\c. P (SUCC c) (P c i_r)", Formula::mem(var("x"), var("y"))}};
  for (const auto& cs : cases) {
    std::string tag = cs.a;
    r.guarded("choice " + tag, [&] {
      Value a = library_value(cs.a);
      CheckSpec h = realizes(a, Formula::all_in("x", ref(F), Formula::ex_in("y", ref(F), cs.phi)));
      h.sampled = true;
      r.check("choice hypothesis " + tag, h);
      VName f = VName::graph(a, O, O);
      Value ea = call(e, {a});
      Formula c3 = Formula::ex_in("x", ref(F), Formula::ex_in("y", ref(F), OP(var("x"), var("y"), var("z"))));
      sampled_all_in("choice (3) " + tag, p0(ea), f, "z", c3);
      Formula c4 = Formula::ex_in("y", ref(F), Formula::ex_in("z", ref(f), Formula::conj(OP(var("x"), var("y"), var("z")), cs.phi)));
      sampled_all_in("choice (4) " + tag, p0(p1(ea)), F, "x", c4);
      auto t = enumerate_triples(f, budget).triples.at(2);
      VName x = VName::nat(2), y = t.y.right();
      Formula hyp5 = Formula::conj(OP(ref(x), ref(y), ref(t.y)), OP(ref(x), ref(y), ref(t.y)));
      r.check("choice (5) " + tag, on_witnesses(call(p1(p1(ea)), {numeral(2), numeral(2)}), hyp5, Formula::eq(ref(y), ref(y)),
                                                {diag(pair(lib("pair.v"), lib("pair.v")))}));
    });
  }
  r.guarded("arrow", [&] {
    const Value& ar = arrow_realizer(O, O);
    Value succ = Value::comb(Combinator::Succ);
    Value e0s = call(p0(ar), {succ});
    VName f = VName::internal(succ, OO);
    Formula c1 = Formula::ex_in("x", ref(F), Formula::ex_in("y", ref(F), OP(var("x"), var("y"), var("z"))));
    sampled_all_in("arrow (1)", p0(e0s), f, "z", c1);
    Formula c2 = Formula::ex_in("y", ref(F), Formula::ex_in("z", ref(f), OP(var("x"), var("y"), var("z"))));
    sampled_all_in("arrow totality", p0(p1(e0s)), F, "x", c2);
    Value e1a = call(p1(ar), {e0s});
    Value g = p0(e1a);
    for (unsigned c = 0; c < 5; ++c)
      r.eval("arrow rebuilt function at " + std::to_string(c), law(Term::app(q(g), Term::num(static_cast<unsigned long long>(c))),
                                                                   Term::num(static_cast<unsigned long long>(c + 1))));
    CheckSpec eq = realizes(p1(e1a), Formula::eq(ref(f), ref(VName::internal(g, OO))));
    eq.sampled = true;
    r.check("arrow (subset) and (superset)", eq);
  });
}

inline void truth_oracle(Recorder& r) {
  Rng rng(r.cfg().seed);
  for (int i = 0; i < 50; ++i) r.synth("sentence " + std::to_string(i), SynthSpec{random_arith_sentence(rng, 2)});
}

}  // namespace suites

/// Runs the suite `id`; throws std::invalid_argument for an unknown id.
inline SuiteReport run_suite(std::string_view id, const RunConfig& cfg = {}) {
  using Fn = void (*)(suites::Recorder&);
  static const std::vector<std::pair<std::string_view, Fn>> table = {
      {"pca-laws", suites::pca_laws},       {"abstraction", suites::abstraction},
      {"fixpoints", suites::fixpoints},     {"equality", suites::equality},
      {"czf-axioms", suites::czf_axioms},   {"pairing-internal", suites::pairing_internal},
      {"heo", suites::heo},                 {"choice-arrow", suites::choice_arrow},
      {"truth-oracle", suites::truth_oracle},
  };
  for (const auto& [name, fn] : table)
    if (name == id) {
      auto start = std::chrono::steady_clock::now();
      suites::Recorder r(std::string(id), cfg);
      fn(r);
      return r.finish(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
  throw std::invalid_argument("unknown suite '" + std::string(id) + "'");
}

}  // namespace pca
