#include "pca/compiler.hpp"
#include "pca/formula.hpp"
#include "pca/names.hpp"

#include <gtest/gtest.h>

using namespace pca;

namespace {

const FinType O = FinType::o();
const FinType OO = FinType::arrow(O, O);

Value cv(const char* src) { return eval(compile_source(src)).value(); }

}  // namespace

TEST(FinType, PrintAndParse) {
  FinType t = FinType::arrow(OO, O);
  EXPECT_EQ(to_string(O), "o");
  EXPECT_EQ(to_string(OO), "(o)o");
  EXPECT_EQ(to_string(t), "((o)o)o");
  EXPECT_EQ(parse_type(to_string(t)), t);
  EXPECT_EQ(t.level(), 2u);
}

TEST(Lookup, OmegaIndexesByNumeral) {
  Lookup r = lookup_triples(VName::omega(), numeral(3), numeral(3), {});
  ASSERT_EQ(r.matches.size(), 1u);
  EXPECT_EQ(r.matches[0], VName::nat(3));
  EXPECT_TRUE(r.exhaustive);
  EXPECT_TRUE(lookup_triples(VName::omega(), numeral(3), numeral(4), {}).matches.empty());
}

TEST(Lookup, Singleton) {
  VName x = VName::nat(2);
  Lookup r = lookup_triples(VName::sing(x), numeral(0), numeral(0), {});
  ASSERT_EQ(r.matches.size(), 1u);
  EXPECT_EQ(r.matches[0], x);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_TRUE(lookup_triples(VName::sing(x), numeral(1), numeral(1), {}).matches.empty());
}

TEST(Lookup, NatOutOfRange) {
  Lookup r = lookup_triples(VName::nat(2), numeral(5), numeral(5), {});
  EXPECT_TRUE(r.matches.empty());
  EXPECT_TRUE(r.exhaustive);
}

TEST(Lookup, ExplicitByExactKeys) {
  VName x = VName::explicit_set({{numeral(7), numeral(8), VName::nat(1)}, {numeral(7), numeral(8), VName::nat(2)}});
  EXPECT_EQ(lookup_triples(x, numeral(7), numeral(8), {}).matches.size(), 2u);
  EXPECT_TRUE(lookup_triples(x, numeral(8), numeral(7), {}).matches.empty());
}

TEST(Enumerate, FiniteAndSchematic) {
  TripleList n3 = enumerate_triples(VName::nat(3), {});
  EXPECT_EQ(n3.triples.size(), 3u);
  EXPECT_TRUE(n3.exhaustive);
  for (unsigned m = 0; m < 3; ++m) {
    EXPECT_EQ(n3.triples[m].a, numeral(m));
    EXPECT_EQ(n3.triples[m].y, VName::nat(m));
  }
  EnumBudget b;
  b.max_index = 5;
  TripleList w = enumerate_triples(VName::omega(), b);
  EXPECT_EQ(w.triples.size(), 5u);
  EXPECT_FALSE(w.exhaustive);
  TripleList p = enumerate_triples(VName::opair(VName::nat(1), VName::nat(2)), {});
  ASSERT_EQ(p.triples.size(), 2u);
  EXPECT_EQ(p.triples[0].y, VName::sing(VName::nat(1)));
  EXPECT_EQ(p.triples[1].y, VName::upair(VName::nat(1), VName::nat(2)));
}

TEST(Enumerate, Deterministic) {
  VName g = VName::internal(Value::comb(Combinator::Succ), OO);
  auto a = enumerate_triples(g, {});
  auto b = enumerate_triples(g, {});
  ASSERT_EQ(a.triples.size(), b.triples.size());
  for (std::size_t i = 0; i < a.triples.size(); ++i) EXPECT_EQ(a.triples[i], b.triples[i]);
}

TEST(Rank, Hereditarily) {
  EXPECT_EQ(rank(VName::nat(3)), 3u);
  EXPECT_EQ(rank(VName::sing(VName::nat(2))), 3u);
  EXPECT_EQ(rank(VName::opair(VName::nat(1), VName::nat(2))), 4u);
  EXPECT_TRUE(is_finite(VName::opair(VName::nat(1), VName::nat(2))));
  EXPECT_FALSE(is_finite(VName::omega()));
}

TEST(EqType, TypeO) {
  EXPECT_EQ(eq_type(numeral(3), numeral(3), O, {}).result, Tri::True);
  EXPECT_EQ(eq_type(numeral(3), numeral(4), O, {}).result, Tri::False);
  EXPECT_EQ(eq_type(Value::comb(Combinator::K), Value::comb(Combinator::K), O, {}).result, Tri::False);
}

TEST(EqType, ArrowIsSampled) {
  TypeEq e = eq_type(Value::comb(Combinator::Succ), cv(R"(\x. SUCC x)"), OO, {});
  EXPECT_EQ(e.result, Tri::Unknown);
  EXPECT_EQ(e.samples, 8u);
  EXPECT_EQ(e.passed, 8u);
}

TEST(EqType, SuccVsPred) {
  TypeEq e = eq_type(Value::comb(Combinator::Succ), Value::comb(Combinator::Pred), OO, {});
  EXPECT_EQ(e.result, Tri::False);
  EXPECT_NE(e.witness.find("#0"), std::string::npos) << e.witness;
}

TEST(GenElems, TypeO) {
  EnumBudget b;
  b.max_index = 3;
  auto g = gen_elems(O, b);
  ASSERT_EQ(g.size(), 4u);
  for (unsigned n = 0; n < 4; ++n) EXPECT_EQ(g[n], numeral(n));
}

TEST(GenElems, ArrowFamily) {
  auto g = gen_elems(OO, {});
  auto has = [&](const Value& v) { return std::find(g.begin(), g.end(), v) != g.end(); };
  EXPECT_TRUE(has(Value::comb(Combinator::K).with_arg(numeral(5))));
  EXPECT_TRUE(has(Value::comb(Combinator::Succ)));
}

TEST(GenElems, HigherTypeAppliedToSucc) {
  auto g = gen_elems(FinType::arrow(OO, O), {});
  EXPECT_FALSE(g.empty());
  for (const auto& v : g) {
    auto out = apply(v, Value::comb(Combinator::Succ));
    ASSERT_TRUE(out.defined()) << to_string(v);
    EXPECT_TRUE(out.value().is_num());
  }
}

TEST(GenElems, SelfConsistent) {
  for (const FinType& t : {O, OO, FinType::arrow(OO, O), FinType::arrow(O, OO)})
    for (const auto& v : gen_elems(t, {})) {
      EXPECT_NE(eq_type(v, v, t, {}).result, Tri::False) << to_string(v) << " at " << to_string(t);
    }
}

TEST(Per, LawsOnSamples) {
  // Transitivity and symmetry never turn False on generator samples.
  for (const FinType& t : {O, OO}) {
    auto g = gen_elems(t, {});
    for (const auto& a : g)
      for (const auto& b : g)
        for (const auto& c : g) {
          auto ab = eq_type(a, b, t, {}).result, bc = eq_type(b, c, t, {}).result;
          if (ab == Tri::False || bc == Tri::False) continue;
          EXPECT_NE(eq_type(a, a, t, {}).result, Tri::False);
          EXPECT_NE(eq_type(b, a, t, {}).result, Tri::False);
          EXPECT_NE(eq_type(a, c, t, {}).result, Tri::False);
        }
  }
}

TEST(Internalize, NumeralIsNat) {
  EXPECT_EQ(internalize(numeral(3), O), VName::nat(3));
  EXPECT_EQ(enumerate_triples(internalize(numeral(3), O), {}).triples.size(), 3u);
  EXPECT_THROW(internalize(Value::comb(Combinator::K), O), std::invalid_argument);
}

TEST(Internalize, SuccTriples) {
  TripleList ts = enumerate_triples(internalize(Value::comb(Combinator::Succ), OO), {});
  ASSERT_FALSE(ts.triples.empty());
  EXPECT_FALSE(ts.exhaustive);
  EXPECT_EQ(ts.triples[0].a, numeral(0));
  EXPECT_EQ(ts.triples[0].y, VName::opair(VName::nat(0), VName::nat(1)));
  Lookup l = lookup_triples(internalize(Value::comb(Combinator::Succ), OO), numeral(4), numeral(4), {});
  ASSERT_EQ(l.matches.size(), 1u);
  EXPECT_EQ(l.matches[0], VName::opair(VName::nat(4), VName::nat(5)));
}

TEST(Internalize, ExtensionallyEqualConstants) {
  EnumBudget b;
  b.max_index = 6;
  Value k2 = Value::comb(Combinator::K).with_arg(numeral(2));
  Value d2 = cv(R"(\x. D x x #2 #2)");
  auto x = enumerate_triples(internalize(k2, OO), b).triples;
  auto y = enumerate_triples(internalize(d2, OO), b).triples;
  ASSERT_EQ(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_EQ(x[i], y[i]);
}

TEST(Graph, ProjectsFirstComponent) {
  Value a = cv(R"(\c. P (SUCC c) (P c #0))");
  Lookup l = lookup_triples(VName::graph(a, O, O), numeral(2), numeral(2), {});
  ASSERT_EQ(l.matches.size(), 1u);
  EXPECT_EQ(l.matches[0], VName::opair(VName::nat(2), VName::nat(3)));
}

TEST(NameSyntax, RoundTrip) {
  const char* samples[] = {"nat 3", "omega", "sing (nat 2)", "upair (nat 1) (nat 2)", "opair (nat 1) (sing omega)",
                           "F ((o)o)o", "int (SUCC) : (o)o", "graph (\\c. P c #0) : o -> o",
                           "{ (#0, #0, nat 1); (#1, K, sing (nat 0)) }", "{ }"};
  for (const char* s : samples) {
    VName x = parse_name(s);
    EXPECT_EQ(parse_name(to_string(x)), x) << s << " printed as " << to_string(x);
  }
}

TEST(NameSyntax, Errors) {
  EXPECT_THROW(parse_name("nat"), ParseError);
  EXPECT_THROW(parse_name("{ (#0, #0) }"), ParseError);
  EXPECT_THROW(parse_name("bogus"), ParseError);
  NameTable names{{"two", VName::nat(2)}};
  EXPECT_EQ(parse_name("sing two", nullptr, &names), VName::sing(VName::nat(2)));
}

TEST(FormulaSyntax, RoundTrip) {
  const char* samples[] = {
      "mem(nat 0, omega)",
      "eq(nat 2, nat 2) /\\ mem(nat 1, nat 2)",
      "~eq(nat 1, nat 2) \\/ mem(nat 0, nat 1) => eq(nat 0, nat 0)",
      "all x in nat 4. ex y in nat 5. mem(x, y)",
      "ALL x y. mem(x, y) => ~eq(x, y)",
      "EX z. eq(z, nat 0)",
      "up(nat 1, nat 2, upair (nat 1) (nat 2))",
      "op(nat 1, nat 2, opair (nat 1) (nat 2))",
      "theta(nat 3)",
      "fun(graph (\\c. P c #0) : o -> o, F o, F o)",
  };
  for (const char* s : samples) {
    Formula f = parse_formula(s);
    EXPECT_EQ(parse_formula(to_string(f)), f) << s << " printed as " << to_string(f);
    EXPECT_TRUE(is_closed(f)) << s;
  }
}

TEST(FormulaSyntax, Associativity) {
  Formula f = parse_formula("mem(nat 0, nat 1) => mem(nat 0, nat 2) => mem(nat 0, nat 3)");
  ASSERT_EQ(f.kind(), Formula::Kind::Imp);
  EXPECT_EQ(f.right().kind(), Formula::Kind::Imp);
  Formula g = parse_formula("mem(nat 0, nat 1) /\\ mem(nat 0, nat 2) \\/ mem(nat 0, nat 3)");
  EXPECT_EQ(g.kind(), Formula::Kind::Or);
}

TEST(FormulaSyntax, FreeVariablesAndSubstitution) {
  Formula f = Formula::all("x", Formula::mem(NameRef(std::string("x")), NameRef(std::string("y"))));
  EXPECT_EQ(free_vars(f), std::set<std::string>{"y"});
  Formula g = substitute(f, "y", VName::omega());
  EXPECT_TRUE(is_closed(g));
  EXPECT_EQ(g, parse_formula("ALL z. mem(z, omega)"));
}

TEST(FormulaMacros, Shapes) {
  Formula up = UP(VName::nat(1), VName::nat(2), VName::upair(VName::nat(1), VName::nat(2)));
  EXPECT_EQ(up.kind(), Formula::Kind::And);
  EXPECT_EQ(up.right().right().kind(), Formula::Kind::AllIn);
  Formula z = is_zero(VName::nat(0));
  EXPECT_EQ(z.kind(), Formula::Kind::AllIn);
  EXPECT_EQ(z.body().kind(), Formula::Kind::Not);
}
