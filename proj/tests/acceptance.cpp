// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "pca/extraction.hpp"
#include "pca/suites.hpp"
#include "support/brute_force.hpp"
#include "support/reference.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace pca;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << detail << std::endl;
  failures += !ok;
}

std::size_t with_prefix(const SuiteReport& r, const std::string& prefix, Outcome o) {
  std::size_t n = 0;
  for (const auto& c : r.cases) n += c.label.rfind(prefix, 0) == 0 && c.outcome == o;
  return n;
}

std::string first_failure(const SuiteReport& r) {
  for (const auto& c : r.cases)
    if (c.outcome == Outcome::Fail) return "; first failure: " + c.label + ": " + c.detail;
  return {};
}

std::string summary(const SuiteReport& r) {
  std::ostringstream s;
  s << r.cases.size() << " cases, " << r.failures() << " failed, " << r.count(Outcome::Inconclusive) << " inconclusive, ";
  s.precision(2);
  s << std::fixed << r.seconds << " s";
  return s.str() + first_failure(r);
}

/// Every label prefix has at least `min` passing cases.
bool each_at_least(const SuiteReport& r, std::initializer_list<const char*> prefixes, std::size_t min, std::string& why) {
  for (const char* p : prefixes) {
    std::size_t n = with_prefix(r, p, Outcome::Pass);
    if (n < min) {
      why += "; only " + std::to_string(n) + " passing '" + p + "' cases";
      return false;
    }
  }
  return true;
}

void guarded(int n, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(n, false, std::string("exception: ") + e.what());
  }
}

}  // namespace

int main() {
  RunConfig cfg;

  guarded(1, [&] {
    SuiteReport r = run_suite("pca-laws", cfg);
    std::string why = summary(r);
    bool ok = r.failures() == 0 && r.seconds < 5.0 &&
              each_at_least(r, {"k ", "kbar ", "s ", "d ", "succ ", "pred ", "p0 ", "p1 "}, 200, why);
    report(1, ok, "pca laws as Kleene equalities: " + why);
  });

  guarded(2, [&] {
    SuiteReport r = run_suite("abstraction", cfg);
    std::size_t conclusive = with_prefix(r, "instance ", Outcome::Pass);
    std::size_t mismatches = with_prefix(r, "instance ", Outcome::Fail);
    report(2, mismatches == 0 && conclusive >= 90 && r.failures() == 0,
           "bracket abstraction vs substitution: " + std::to_string(conclusive) + " conclusive agreements, " +
               std::to_string(mismatches) + " mismatches; " + summary(r));
  });

  guarded(3, [&] {
    SuiteReport r = run_suite("fixpoints", cfg);
    std::string why = summary(r);
    bool ok = r.failures() == 0 && each_at_least(r, {"f a defined ", "f a b ", "g a b c ", "h a b c "}, 50, why) &&
              with_prefix(r, "r a b 0", Outcome::Pass) >= 1 && with_prefix(r, "add 2 3", Outcome::Pass) == 1;
    report(3, ok, "recursion, double recursion, primitive recursion, 2+3=5: " + why);
  });

  guarded(4, [&] {
    SuiteReport r = run_suite("equality", cfg);
    std::string why = summary(r);
    bool ok = r.failures() == 0 && r.seconds < 30.0 && each_at_least(r, {"i_r on random name "}, 30, why) &&
              each_at_least(r, {"i_r on nat "}, 7, why) && each_at_least(r, {"i_s on synthesized ", "i_t on synthesized "}, 1, why);
    report(4, ok, "equality realizers: " + why);
  });

  guarded(5, [&] {
    RunConfig c = cfg;
    std::size_t refuted = 0, pairs = 0;
    for (unsigned n = 0; n <= 4; ++n)
      for (unsigned m = 0; m <= 4; ++m) {
        if (n == m) continue;
        ++pairs;
        Formula f = Formula::eq(NameRef(VName::nat(n)), NameRef(VName::nat(m)));
        bool all = true;
        for (const RealizerPair& p : {RealizerPair::diag(numeral(0)), RealizerPair::diag(realizer("i_r")),
                                      RealizerPair{realizer("i_r"), realizer("i_s")}})
          all = all && check(p, f, c.budget, c.fuel).refuted();
        refuted += all;
      }
    brute::Search s = brute::search_nat_eq(2, 7);
    bool agree = true;
    for (const auto& [nm, found] : s.found) agree = agree && found == (nm.first == nm.second);
    report(5, refuted == pairs && agree,
           std::to_string(refuted) + "/" + std::to_string(pairs) + " distinct numeral equalities refuted; brute force over " +
               std::to_string(s.pairs) + " realizer pairs " + (agree ? "agrees" : "disagrees") +
               " (realizers exist exactly on the diagonal for n, m <= 2)");
  });

  guarded(6, [&] {
    SuiteReport r = run_suite("czf-axioms", cfg);
    std::string why = summary(r);
    bool ok = r.failures() == 0 && r.count(Outcome::Inconclusive) == 0 &&
              each_at_least(r, {"pairing", "union", "bounded separation", "infinity ", "set induction", "strong collection",
                                "infinity mutant "},
                            1, why);
    report(6, ok, "set theory axioms and infinity mutants: " + why);
  });

  guarded(7, [&] {
    SuiteReport r = run_suite("pairing-internal", cfg);
    std::string why = summary(r);
    bool ok = r.failures() == 0 && r.count(Outcome::Inconclusive) == 0 && each_at_least(r, {"u0 ", "u1 ", "v ", "w ", "z "}, 1, why);
    report(7, ok, "internal pairing: " + why);
  });

  guarded(8, [&] {
    SuiteReport r = run_suite("heo", cfg);
    std::string why = summary(r);
    bool ok = r.failures() == 0 && each_at_least(r, {"eq_type o ", "SUCC vs PRED at (o)o", "internalize 3 at o",
                                                     "constant functions enumerate alike"},
                                                 1, why);
    report(8, ok, "hereditarily effective operations: " + why);
  });

  guarded(9, [&] {
    RunConfig c = cfg;
    c.budget.max_index = 8;
    SuiteReport r = run_suite("choice-arrow", c);
    std::string why = summary(r);
    bool ok = r.failures() == 0 && r.seconds < 60.0 && r.count(Outcome::Inconclusive) == 0 &&
              each_at_least(r, {"graph triple ", "choice (3) ", "choice (4) ", "choice (5) ", "arrow (1)", "arrow (subset) and (superset)"},
                            1, why);
    report(9, ok, "choice and arrow types at (o,o), budget 8: " + why);
  });

  guarded(10, [&] {
    SuiteReport r = run_suite("truth-oracle", cfg);
    report(10, r.failures() == 0 && with_prefix(r, "sentence ", Outcome::Pass) == 50, "truth vs synthesized realizers: " + summary(r));
  });

  guarded(11, [&] {
    reference::CrossCheck x = reference::cross_check(314, 200);
    report(11, x.instances == 200 && x.disagreements.empty(),
           std::to_string(x.instances) + " random instances, " + std::to_string(x.realized) + " realized, " +
               std::to_string(x.disagreements.size()) + " disagreements" +
               (x.disagreements.empty() ? "" : "; first: " + x.disagreements.front()));
  });

  guarded(12, [&] {
    using P = NDProof;
    auto nat = [](unsigned n) { return NameRef(VName::nat(n)); };
    const Formula f = Formula::mem(nat(0), nat(1)), g = Formula::eq(nat(1), nat(1)), h = Formula::mem(nat(1), nat(2));
    std::vector<std::string> bad;
    auto verify = [&](const std::string& what, const P& p, CheckOptions o) {
      Verdict v = check(RealizerPair::diag(extract_value(p)), p.conclusion(), cfg.budget, cfg.fuel, std::move(o));
      if (!v.realized()) bad.push_back(what + " " + to_string(v.status));
    };

    Formula c = Formula::conj(f, g);
    verify("projection", P::imp_intro("h", c, P::and_elim(0, P::assume("h", c))), {});

    Formula xy = Formula::eq(NameRef(std::string("x")), NameRef(std::string("y")));
    P sym = P::all_intro("x", P::all_intro("y", P::imp_intro("h", xy, P::sym(P::assume("h", xy)))));
    CheckOptions nats;
    nats.instances = [](const std::string&, const Formula&) {
      return std::vector<VName>{VName::nat(0), VName::nat(1), VName::nat(2), VName::nat(3)};
    };
    verify("symmetry", sym, nats);
    Value r = Value::opaque("r");
    if (!(apply_all(extract_value(sym), {r}).value() == apply_all(realizer("i_s"), {r}).value()))
      bad.push_back("symmetry is not i_s");

    P body = P::imp_elim(P::assume("bc", Formula::imp(g, h)), P::imp_elim(P::assume("ab", Formula::imp(f, g)), P::assume("a", f)));
    verify("syllogism", P::imp_intro("ab", Formula::imp(f, g), P::imp_intro("bc", Formula::imp(g, h), P::imp_intro("a", f, body))), {});

    Term t = compile_source("\\a. P a i_r", realizer_table());
    auto out = eval(t, {}, cfg.fuel);
    bool power = is_closed(t) && out.defined() && out.value() == realizer("ax.power");
    if (!power) bad.push_back("powerset term");
    std::string detail = "three extracted realizers check realized, powerset term closed and defined";
    for (const auto& b : bad) detail += "; " + b;
    report(12, bad.empty(), detail);
  });

  std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed")) << std::endl;
  return failures ? 1 : 0;
}
