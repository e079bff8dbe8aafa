#include "pca/extraction.hpp"
#include "pca/instances.hpp"
#include "pca/realizability.hpp"

#include <gtest/gtest.h>

using namespace pca;
using P = NDProof;

namespace {

NameRef var(const char* v) { return NameRef(std::string(v)); }
NameRef nat(unsigned n) { return NameRef(VName::nat(n)); }

Value call(const Value& f, std::initializer_list<Value> xs) {
  auto out = apply_all(f, xs);
  if (!out.defined()) throw EvalError(out.describe());
  return out.value();
}

CheckOptions with_instances(std::vector<VName> xs) {
  CheckOptions o;
  o.instances = [xs](const std::string&, const Formula&) { return xs; };
  return o;
}

std::vector<VName> small_nats() { return {VName::nat(0), VName::nat(1), VName::nat(2), VName::nat(3)}; }

Verdict check_proof(const P& p, CheckOptions o = {}) {
  return check(RealizerPair::diag(extract_value(p)), p.conclusion(), {}, {}, std::move(o));
}

const Formula kLt = Formula::mem(nat(0), nat(1));
const Formula kEq = Formula::eq(nat(1), nat(1));
const Formula kGt = Formula::mem(nat(1), nat(2));

}  // namespace

TEST(Proof, ConclusionsAndHypotheses) {
  P a = P::assume("h", kLt);
  EXPECT_EQ(a.open().size(), 1u);
  P i = P::imp_intro("h", kLt, a);
  EXPECT_TRUE(i.open().empty());
  EXPECT_TRUE(alpha_equal(i.conclusion(), Formula::imp(kLt, kLt)));
  P both = P::and_intro(P::assume("h", kLt), P::assume("k", kEq));
  EXPECT_EQ(both.open().size(), 2u);
}

TEST(Proof, RejectsIllFormedSteps) {
  EXPECT_THROW(P::imp_elim(P::assume("f", Formula::imp(kLt, kEq)), P::assume("a", kEq)), ProofError);
  EXPECT_THROW(P::and_intro(P::assume("h", kLt), P::assume("h", kEq)), ProofError);
  EXPECT_THROW(P::imp_intro("h", kEq, P::assume("h", kLt)), ProofError);
  Formula xin = Formula::mem(var("x"), nat(3));
  EXPECT_THROW(P::all_intro("x", P::assume("h", xin)), ProofError);
  EXPECT_THROW(extract(P::assume("h", kLt)), ProofError);
  EXPECT_THROW(P::trans(P::refl(nat(1)), P::refl(nat(2))), ProofError);
  EXPECT_THROW(P::or_elim(P::assume("d", Formula::disj(kLt, kEq)), "a", P::assume("a", kLt), "b",
                          P::assume("b", kEq)),
               ProofError);
}

TEST(Proof, RejectsCapturingInstantiation) {
  // ∀x ∃y x ∈ y instantiated at y would capture.
  Formula body = Formula::ex("y", Formula::mem(var("x"), var("y")));
  P ax = P::assume("h", Formula::all("x", body));
  EXPECT_THROW(P::all_elim(ax, var("y")), ProofError);
  EXPECT_NO_THROW(P::all_elim(ax, var("z")));
}

TEST(Proof, EigenvariableConditions) {
  Formula e = Formula::ex("x", Formula::mem(var("x"), nat(3)));
  // The eigenvariable may not escape into the conclusion.
  P inner = P::assume("h", Formula::mem(var("y"), nat(3)));
  EXPECT_THROW(P::ex_elim(P::assume("e", e), "y", "h", inner), ProofError);
  P ok = P::ex_intro("x", Formula::mem(var("x"), nat(3)), var("y"), inner);
  EXPECT_NO_THROW(P::ex_elim(P::assume("e", e), "y", "h", ok));
}

// ---------------------------------------------------------------------------

TEST(Extract, ProjectionFromConjunction) {
  Formula c = Formula::conj(kLt, kEq);
  P p = P::imp_intro("h", c, P::and_elim(0, P::assume("h", c)));
  Value e = extract_value(p);
  Value a = Value::opaque("a"), b = Value::opaque("b");
  EXPECT_EQ(call(e, {detail::pair_value(a, b)}), a);
  Verdict v = check_proof(p);
  EXPECT_TRUE(v.realized()) << render_trace(v.trace, 6);
}

TEST(Extract, SymmetryIsTheSymmetryRealizer) {
  Formula xy = Formula::eq(var("x"), var("y"));
  P p = P::all_intro("x", P::all_intro("y", P::imp_intro("h", xy, P::sym(P::assume("h", xy)))));
  Value e = extract_value(p);
  Value r = Value::opaque("r");
  EXPECT_EQ(call(e, {r}), call(realizer("i_s"), {r}));
  Verdict v = check_proof(p, with_instances(small_nats()));
  EXPECT_TRUE(v.realized()) << render_trace(v.trace, 6);
}

TEST(Extract, SyllogismComposes) {
  Formula f = kLt, g = kEq, h = kGt;
  P body = P::imp_elim(P::assume("bc", Formula::imp(g, h)), P::imp_elim(P::assume("ab", Formula::imp(f, g)), P::assume("a", f)));
  P p = P::imp_intro("ab", Formula::imp(f, g), P::imp_intro("bc", Formula::imp(g, h), P::imp_intro("a", f, body)));
  Value e = extract_value(p);
  Value a = Value::opaque("a");
  EXPECT_EQ(call(e, {library_value("\\z. P z z"), defined_constant(ConstKind::P1), a}), a);
  Verdict v = check_proof(p);
  EXPECT_TRUE(v.realized()) << render_trace(v.trace, 6);
}

TEST(Extract, DisjunctionCommutes) {
  Formula d = Formula::disj(kLt, Formula::mem(nat(2), nat(1)));
  Formula flip = Formula::disj(d.right(), d.left());
  P p = P::imp_intro(
      "d", d,
      P::or_elim(P::assume("d", d), "l", P::or_intro(1, d.right(), P::assume("l", d.left())), "r",
                 P::or_intro(0, d.left(), P::assume("r", d.right()))));
  EXPECT_TRUE(alpha_equal(p.conclusion(), Formula::imp(d, flip)));
  Value e = extract_value(p);
  Value a = Value::opaque("a");
  EXPECT_EQ(call(e, {detail::pair_value(Value::num(0), a)}), detail::pair_value(Value::num(1), a));
  EXPECT_EQ(call(e, {detail::pair_value(Value::num(1), a)}), detail::pair_value(Value::num(0), a));
  Verdict v = check_proof(p);
  EXPECT_TRUE(v.realized()) << render_trace(v.trace, 6);
}

TEST(Extract, NegationRules) {
  // φ ⇒ ¬¬φ
  Formula nf = Formula::neg(kLt);
  P p = P::imp_intro("a", kLt, P::neg_intro("n", nf, P::assume("a", kLt), P::assume("n", nf)));
  Verdict v = check_proof(p);
  EXPECT_TRUE(v.realized()) << render_trace(v.trace, 6);
  // φ ∧ ¬φ ⇒ χ
  Formula c = Formula::conj(kLt, nf);
  P q = P::imp_intro("c", c, P::neg_elim(P::and_elim(0, P::assume("c", c)), P::and_elim(1, P::assume("c", c)), kGt));
  Verdict w = check_proof(q);
  EXPECT_TRUE(w.realized()) << render_trace(w.trace, 6);
}

TEST(Extract, BoundedUniversal) {
  Formula m = Formula::mem(var("x"), nat(2));
  P p = P::all_in_intro("x", nat(2), "h", P::assume("h", m));
  Verdict v = check_proof(p);
  EXPECT_TRUE(v.realized()) << render_trace(v.trace, 6);

  // (∀u∈3̇ u∈5̇) ⇒ 1̇∈3̇ ⇒ 1̇∈5̇
  Formula all = Formula::all_in("u", nat(3), Formula::mem(var("u"), nat(5)));
  Formula one = Formula::mem(nat(1), nat(3));
  P q = P::imp_intro("a", all, P::imp_intro("m", one, P::all_in_elim(P::assume("a", all), P::assume("m", one))));
  EXPECT_TRUE(alpha_equal(q.conclusion().right().right(), Formula::mem(nat(1), nat(5))));
  Verdict w = check_proof(q);
  EXPECT_TRUE(w.realized()) << render_trace(w.trace, 6);
}

TEST(Extract, BoundedExistential) {
  // 1̇∈3̇ ⇒ ∃u∈3̇ u=1̇
  Formula one = Formula::mem(nat(1), nat(3));
  Formula body = Formula::eq(var("u"), nat(1));
  P p = P::imp_intro("m", one, P::ex_in_intro("u", body, P::assume("m", one), P::refl(nat(1))));
  Verdict v = check_proof(p);
  EXPECT_TRUE(v.realized()) << render_trace(v.trace, 6);

  // (∃u∈3̇ u∈2̇) ⇒ ∃v∈3̇ v∈3̇
  Formula e = Formula::ex_in("u", nat(3), Formula::mem(var("u"), nat(2)));
  Formula hm = Formula::mem(var("x"), nat(3));
  P inner = P::ex_in_intro("v", Formula::mem(var("v"), nat(3)), P::assume("hm", hm), P::assume("hm", hm));
  P q = P::imp_intro("e", e, P::ex_in_elim(P::assume("e", e), "x", "hm", "hb", inner));
  Verdict w = check_proof(q);
  EXPECT_TRUE(w.realized()) << render_trace(w.trace, 6);
}

TEST(Extract, UnboundedQuantifierRules) {
  // ∀x (x∈3̇ ⇒ ∃y x∈y)
  Formula m = Formula::mem(var("x"), nat(3));
  Formula ex = Formula::ex("y", Formula::mem(var("x"), var("y")));
  P p = P::all_intro("x", P::imp_intro("h", m, P::ex_intro("y", ex.body(), nat(3), P::assume("h", m))));
  Verdict v = check_proof(p, with_instances(small_nats()));
  EXPECT_TRUE(v.realized()) << render_trace(v.trace, 6);

  // (∀x x=x) ⇒ 2̇=2̇
  Formula refl = Formula::all("x", Formula::eq(var("x"), var("x")));
  P q = P::imp_intro("a", refl, P::all_elim(P::assume("a", refl), nat(2)));
  CheckOptions o = with_instances(small_nats());
  o.witnesses = [](const Formula&) { return std::vector<RealizerPair>{RealizerPair::diag(realizer("i_r"))}; };
  Verdict w = check_proof(q, o);
  EXPECT_TRUE(w.realized()) << render_trace(w.trace, 6);
}

TEST(Extract, TransitivityAndSubstitution) {
  Formula xy = Formula::eq(var("x"), var("y"));
  Formula yz = Formula::eq(var("y"), var("z"));
  P t = P::all_intro("x", P::all_intro("y", P::all_intro("z", P::imp_intro("a", xy, P::imp_intro("b", yz, P::trans(P::assume("a", xy), P::assume("b", yz)))))));
  Verdict v = check_proof(t, with_instances({VName::nat(0), VName::nat(1), VName::nat(2)}));
  EXPECT_TRUE(v.realized()) << render_trace(v.trace, 6);

  // ∀x∀y (x=y ⇒ x∈3̇ ⇒ y∈3̇)
  Formula phi = Formula::mem(var("w"), nat(3));
  Formula xin = Formula::mem(var("x"), nat(3));
  P s = P::all_intro("x", P::all_intro("y", P::imp_intro("e", xy, P::imp_intro("m", xin, P::subst("w", phi, P::assume("e", xy), P::assume("m", xin))))));
  Verdict w = check_proof(s, with_instances(small_nats()));
  EXPECT_TRUE(w.realized()) << render_trace(w.trace, 6);
}

// ---------------------------------------------------------------------------
// Transport along 2̇ = remapped copy, checked on the synthesized realizer of φ(2̇).

namespace {

struct TransportCase {
  const char* label;
  Formula phi;
};

std::vector<TransportCase> transport_cases() {
  NameRef x = var("x"), u = var("u");
  Formula in3 = Formula::mem(x, nat(3));
  return {
      {"x = 2", Formula::eq(x, nat(2))},
      {"2 = x", Formula::eq(nat(2), x)},
      {"x = x", Formula::eq(x, x)},
      {"x in 3", in3},
      {"1 in x", Formula::mem(nat(1), x)},
      {"and", Formula::conj(in3, Formula::mem(nat(0), x))},
      {"or", Formula::disj(Formula::mem(x, nat(1)), Formula::mem(nat(1), x))},
      {"imp", Formula::imp(Formula::eq(x, nat(2)), Formula::mem(nat(1), x))},
      {"all in x", Formula::all_in("u", x, Formula::mem(u, nat(3)))},
      {"all in 3", Formula::all_in("u", nat(3), Formula::disj(Formula::mem(u, x), Formula::disj(Formula::eq(u, x), Formula::mem(x, u))))},
      {"ex in x", Formula::ex_in("u", x, Formula::eq(u, nat(1)))},
      {"ex in 4", Formula::ex_in("u", nat(4), Formula::eq(u, x))},
      {"nested", Formula::all_in("u", x, Formula::ex_in("v", x, Formula::eq(u, var("v"))))},
  };
}

}  // namespace

TEST(Transport, AlongRemappedCopy) {
  VName s = VName::nat(2), t = remapped_nat(2, 3);
  Value r = remap_realizer(2, 3);
  ASSERT_TRUE(check(RealizerPair::diag(r), Formula::eq(NameRef(s), NameRef(t))).realized());
  for (const auto& c : transport_cases()) {
    Formula from = substitute(c.phi, "x", NameRef(s));
    Formula to = substitute(c.phi, "x", NameRef(t));
    auto w = synthesize(from);
    ASSERT_TRUE(w) << c.label;
    ASSERT_TRUE(check(*w, from).realized()) << c.label;
    Value tr = transport_value(c.phi, "x", r);
    Verdict v = check_imp_on_witnesses(RealizerPair::diag(tr), from, to, {*w});
    EXPECT_TRUE(v.realized()) << c.label << "\n" << render_trace(v.trace, 8);
  }
}

TEST(Transport, NegationOverACopyIsOpen) {
  // The checker cannot decide a negation over a non-arithmetic name.
  VName s = VName::nat(2), t = remapped_nat(2, 3);
  Formula phi = Formula::neg(Formula::mem(var("x"), nat(1)));
  Formula from = substitute(phi, "x", NameRef(s));
  Formula to = substitute(phi, "x", NameRef(t));
  Value tr = transport_value(phi, "x", remap_realizer(2, 3));
  Verdict v = check_imp_on_witnesses(RealizerPair::diag(tr), from, to, {*synthesize(from)});
  EXPECT_TRUE(v.unknown()) << render_trace(v.trace, 6);
}

TEST(Transport, WrongEqualityRealizerIsCaught) {
  // A realizer of 2̇ = 2̇ used in place of one for 2̇ = copy.
  VName s = VName::nat(2), t = remapped_nat(2, 3);
  Value r = realizer("i_r");
  Formula phi = Formula::mem(var("x"), nat(3));
  Formula from = substitute(phi, "x", NameRef(s));
  Formula to = substitute(phi, "x", NameRef(t));
  Verdict v = check_imp_on_witnesses(RealizerPair::diag(transport_value(phi, "x", r)), from, to, {*synthesize(from)});
  EXPECT_FALSE(v.realized());
}

TEST(Extract, PowersetRealizerIsClosedAndDefined) {
  Term t = compile_source("\\a. P a i_r", realizer_table());
  EXPECT_TRUE(is_closed(t));
  EXPECT_FALSE(has_lambda(t));
  auto out = eval(t);
  ASSERT_TRUE(out.defined());
  EXPECT_EQ(out.value(), realizer("ax.power"));
}
