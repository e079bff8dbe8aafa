#include "pca/gen.hpp"
#include "pca/realizability.hpp"
#include "support/brute_force.hpp"
#include "support/reference.hpp"

#include <gtest/gtest.h>

using namespace pca;

namespace {

NameRef nat(unsigned n) { return NameRef(VName::nat(n)); }
Formula eqn(unsigned n, unsigned m) { return Formula::eq(nat(n), nat(m)); }
Formula F(const char* src) { return parse_formula(src); }
const Value& ir() { return realizer("i_r"); }

}  // namespace

TEST(Check, IdentityRealizesNumeralSelfEquality) {
  for (unsigned n = 0; n <= 6; ++n) {
    Verdict v = check(RealizerPair::diag(ir()), eqn(n, n));
    EXPECT_TRUE(v.realized()) << n << "\n" << render_trace(v.trace);
    EXPECT_EQ(v.trace.mode, Mode::Exhaustive);
    EXPECT_TRUE(audit_trace(v.trace));
  }
}

TEST(Check, IdentityRealizesSelfEqualityOnRandomNames) {
  Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    VName x = random_finite_name(rng, 1 + uniform(rng, 3));
    ASSERT_LE(rank(x), 3u);
    Verdict v = check(RealizerPair::diag(ir()), Formula::eq(NameRef(x), NameRef(x)));
    EXPECT_TRUE(v.realized()) << to_string(x) << "\n" << render_trace(v.trace, 6);
  }
}

TEST(Check, ZeroInOmega) {
  Value p0 = detail::pair_value(numeral(0), ir());
  Verdict v = check(RealizerPair::diag(p0), Formula::mem(nat(0), NameRef(VName::omega())));
  EXPECT_TRUE(v.realized()) << render_trace(v.trace);
  Value p1 = detail::pair_value(numeral(1), ir());
  EXPECT_TRUE(check(RealizerPair::diag(p1), Formula::mem(nat(0), NameRef(VName::omega()))).refuted());
}

TEST(Check, DistinctNumeralsRefuted) {
  for (const Value& a : {ir(), numeral(0), Value::comb(Combinator::K)}) {
    EXPECT_TRUE(check(RealizerPair::diag(a), eqn(2, 3)).refuted());
    CheckOptions o;
    o.nat_eq_shortcut = false;
    Verdict slow = check(RealizerPair::diag(a), eqn(2, 3), {}, {}, o);
    EXPECT_TRUE(slow.refuted()) << render_trace(slow.trace, 8);
  }
  for (unsigned n = 0; n <= 4; ++n)
    for (unsigned m = 0; m <= 4; ++m)
      if (n != m) EXPECT_TRUE(check(RealizerPair::diag(ir()), eqn(n, m)).refuted());
}

TEST(Check, StuckProjectionRefutes) {
  Verdict v = check(RealizerPair::diag(numeral(3)), F("mem(nat 0, nat 1) /\\ eq(nat 0, nat 0)"));
  EXPECT_TRUE(v.refuted());
  EXPECT_NE(v.trace.note.find("undefined"), std::string::npos);
}

TEST(Check, OrTagsMustBeZeroOrOne) {
  Formula f = F("eq(nat 1, nat 1) \\/ eq(nat 1, nat 1)");
  EXPECT_TRUE(check(RealizerPair::diag(detail::pair_value(numeral(0), ir())), f).realized());
  EXPECT_TRUE(check(RealizerPair::diag(detail::pair_value(numeral(1), ir())), f).realized());
  EXPECT_TRUE(check(RealizerPair::diag(detail::pair_value(numeral(2), ir())), f).refuted());
  EXPECT_TRUE(check({detail::pair_value(numeral(0), ir()), detail::pair_value(numeral(1), ir())}, f).refuted());
}

TEST(Check, FuelExhaustionIsUnknown) {
  FuelConfig tiny;
  tiny.max_steps = 3;
  Verdict v = check(RealizerPair::diag(ir()), eqn(3, 3), {}, tiny);
  EXPECT_TRUE(v.unknown()) << render_trace(v.trace);
}

TEST(Check, InfiniteNamesAreNotRealizedByTruncation) {
  Formula f = Formula::all_in("x", NameRef(VName::omega()), Formula::eq(NameRef(std::string("x")), NameRef(std::string("x"))));
  Value a = Value::comb(Combinator::K).with_arg(ir());
  Verdict v = check(RealizerPair::diag(a), f);
  EXPECT_TRUE(v.unknown());
  CheckOptions o;
  o.sample_infinite = true;
  Verdict w = check(RealizerPair::diag(a), f, {}, {}, o);
  EXPECT_TRUE(w.realized());
  EXPECT_EQ(w.trace.mode, Mode::WitnessDirected);
  EXPECT_TRUE(uses_witnesses(w.trace));
}

TEST(Check, RejectsOpenFormulas) {
  Formula open = Formula::mem(NameRef(std::string("x")), nat(1));
  EXPECT_THROW(check(RealizerPair::diag(ir()), open), std::invalid_argument);
}

TEST(Check, IdentityImplication) {
  Formula phi = F("mem(nat 1, nat 3)");
  Value id = library_value("\\c. c");
  Verdict v = check(RealizerPair::diag(id), Formula::imp(phi, phi));
  EXPECT_TRUE(v.realized()) << render_trace(v.trace);
  Verdict w = check_imp_on_witnesses(RealizerPair::diag(id), phi, phi, {*synthesize(phi)});
  EXPECT_TRUE(w.realized());
  EXPECT_EQ(w.trace.mode, Mode::WitnessDirected);
  EXPECT_NE(w.trace.note.find("unverified"), std::string::npos);
}

TEST(Check, WitnessesThatDoNotRealizeAreSkipped) {
  Formula phi = F("mem(nat 1, nat 3)");
  Value id = library_value("\\c. c");
  Verdict v = check_imp_on_witnesses(RealizerPair::diag(id), phi, phi, {RealizerPair::diag(numeral(4))});
  EXPECT_TRUE(v.unknown());
  ASSERT_EQ(v.trace.children.size(), 1u);
  EXPECT_NE(v.trace.children[0].note.find("skipped"), std::string::npos);
}

TEST(Check, ImplicationMappingToNonRealizerRefuted) {
  Formula phi = F("mem(nat 1, nat 3)");
  Formula psi = F("mem(nat 1, nat 3) \\/ eq(nat 0, nat 0)");
  Value bad = library_value("\\c. P #2 c");
  Value good = library_value("\\c. P #0 c");
  EXPECT_TRUE(check_imp_on_witnesses(RealizerPair::diag(bad), phi, psi, {*synthesize(phi)}).refuted());
  EXPECT_TRUE(check_imp_on_witnesses(RealizerPair::diag(good), phi, psi, {*synthesize(phi)}).realized());
}

TEST(Check, VacuousAndRefutedImplicationsByTruth) {
  EXPECT_TRUE(check(RealizerPair::diag(numeral(0)), F("eq(nat 1, nat 2) => eq(nat 3, nat 4)")).realized());
  EXPECT_TRUE(check(RealizerPair::diag(Value::comb(Combinator::K)), F("eq(nat 1, nat 1) => eq(nat 3, nat 4)")).refuted());
  EXPECT_TRUE(check(RealizerPair::diag(numeral(0)), F("~ eq(nat 1, nat 2)")).realized());
  EXPECT_TRUE(check(RealizerPair::diag(numeral(0)), F("~ eq(nat 1, nat 1)")).refuted());
}

TEST(Check, UnboundedQuantifiersUseSuppliedInstances) {
  Formula f = F("ALL x. eq(x, x)");
  EXPECT_TRUE(check(RealizerPair::diag(ir()), f).unknown());
  CheckOptions o;
  o.instances = [](const std::string&, const Formula&) {
    return std::vector<VName>{VName::nat(0), VName::nat(2), VName::opair(VName::nat(1), VName::nat(0))};
  };
  Verdict v = check(RealizerPair::diag(ir()), f, {}, {}, o);
  EXPECT_TRUE(v.realized());
  EXPECT_EQ(v.trace.mode, Mode::WitnessDirected);
}

TEST(TruthEval, Examples) {
  EXPECT_TRUE(truth_eval(eqn(2, 2)));
  EXPECT_TRUE(truth_eval(Formula::mem(nat(2), nat(5))));
  EXPECT_FALSE(truth_eval(Formula::mem(nat(5), nat(2))));
  EXPECT_TRUE(truth_eval(F("all x in nat 4. ex y in nat 5. mem(x, y)")));
  EXPECT_FALSE(truth_eval(F("all x in nat 5. ex y in nat 5. mem(x, y)")));
  EXPECT_TRUE(truth_eval(F("mem(nat 7, omega)")));
  EXPECT_THROW(truth_eval(Formula::mem(NameRef(VName::sing(VName::nat(0))), nat(2))), FragmentError);
  EXPECT_THROW(truth_eval(F("ALL x. eq(x, x)")), FragmentError);
}

TEST(DecideNatEq, Examples) {
  EXPECT_TRUE(decide_nat_eq(3, 3));
  EXPECT_FALSE(decide_nat_eq(2, 3));
}

TEST(DecideNatEq, AgreesWithBruteForceSearch) {
  brute::Search s = brute::search_nat_eq(2);
  EXPECT_GT(s.values, 1000u);
  for (const auto& [nm, found] : s.found)
    EXPECT_EQ(found, decide_nat_eq(nm.first, nm.second)) << nm.first << " = " << nm.second;
}

TEST(Synthesize, Examples) {
  auto p = synthesize(eqn(3, 3));
  ASSERT_TRUE(p);
  EXPECT_EQ(p->a, ir());
  EXPECT_TRUE(check(*p, eqn(3, 3)).realized());
  auto q = synthesize(F("ex y in nat 5. eq(nat 2, y)"));
  ASSERT_TRUE(q);
  EXPECT_EQ(apply(defined_constant(ConstKind::P0), q->a).value(), numeral(2));
  EXPECT_FALSE(synthesize(eqn(2, 3)));
  EXPECT_THROW(synthesize(F("ALL x. eq(x, x)")), FragmentError);
}

TEST(Synthesize, RoundTripMatchesTruth) {
  Rng rng(2024);
  int t = 0;
  for (int i = 0; i < 50; ++i) {
    Formula f = random_arith_sentence(rng, 2);
    bool truth = truth_eval(f);
    t += truth;
    auto p = synthesize(f);
    bool realized = false;
    if (p) {
      Verdict v = check(*p, f);
      realized = v.realized();
      EXPECT_TRUE(audit_trace(v.trace));
    }
    EXPECT_EQ(truth, realized) << to_string(f);
  }
  EXPECT_GT(t, 10);
  EXPECT_LT(t, 45);
}

TEST(Symmetry, OnTheNumeralFragment) {
  Rng rng(7);
  for (int i = 0; i < 40; ++i) {
    Formula f = random_arith_sentence(rng, 2);
    auto p = synthesize(f);
    if (!p) continue;
    // Pair the synthesized realizer with one for a different true sentence
    // so that a and b differ.
    Formula g = random_arith_sentence(rng, 2);
    auto q = synthesize(g);
    Value b = q ? q->a : p->a;
    Verdict ab = check({p->a, b}, f), ba = check({b, p->a}, f);
    if (ab.realized()) EXPECT_TRUE(ba.realized()) << to_string(f);
    EXPECT_EQ(ab.status, ba.status) << to_string(f);
  }
}

TEST(Monotonicity, RefutedSurvivesTenfoldFuel) {
  FuelConfig big;
  big.max_steps *= 10;
  CheckOptions o;
  o.nat_eq_shortcut = false;
  std::vector<std::pair<Value, Formula>> cases = {
      {ir(), eqn(2, 3)},
      {ir(), eqn(1, 0)},
      {detail::pair_value(numeral(2), ir()), F("eq(nat 1, nat 1) \\/ eq(nat 1, nat 1)")},
      {detail::pair_value(numeral(4), ir()), F("mem(nat 2, nat 4)")},
  };
  Rng rng(99);
  for (int i = 0; i < 40; ++i) {
    std::vector<VName> pool;
    for (int k = 0; k < 3; ++k) pool.push_back(random_finite_name(rng, 2));
    Formula f = reference::random_formula(rng, pool, 2);
    cases.push_back({reference::candidate(rng, f), f});
  }
  int refuted = 0;
  for (const auto& [a, f] : cases) {
    Verdict v = check(RealizerPair::diag(a), f, {}, {}, o);
    if (!v.refuted()) continue;
    ++refuted;
    EXPECT_TRUE(check(RealizerPair::diag(a), f, {}, big, o).refuted()) << to_string(f);
  }
  EXPECT_GE(refuted, 10);
}

TEST(CrossCheck, AgreesWithReferenceImplementation) {
  auto r = reference::cross_check(314, 200);
  EXPECT_EQ(r.instances, 200u);
  EXPECT_EQ(r.agreements, 200u);
  for (const auto& d : r.disagreements) ADD_FAILURE() << d;
  EXPECT_GT(r.realized, 20u);
  EXPECT_LT(r.realized, 180u);
}

TEST(Trace, RenderAndAudit) {
  Verdict v = check(RealizerPair::diag(ir()), eqn(2, 2));
  std::string s = render_trace(v.trace, 1);
  EXPECT_EQ(s.rfind("eq [realized, exhaustive] eq(nat 2, nat 2)", 0), 0u) << s;
  EXPECT_NE(s.find("sub-checks"), std::string::npos);
  Trace bad;
  bad.status = Status::Realized;
  EXPECT_FALSE(audit_trace(bad));
}
