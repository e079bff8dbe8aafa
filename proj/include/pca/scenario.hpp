#pragma once

// Scenario files: one directive per line ("\" at the end of a line joins
// it with the next), "--" comments.
//
//   fuel N | budget N [M] | seed N
//   term ID = <term>     name ID = <name>     formula ID = <formula>
//   eval <term> [expect <term> | expect defined | expect undefined]
//   check [sampled] (<term>, <term>) <formula>
//         [witnesses (<term>, <term>); ...] [instances <name>; ...]
//         [expect realized|refuted|unknown]
//   check-with-witnesses ...   same shape; the formula is φ => ψ and only
//                              the listed witnesses realize φ
//   synth-roundtrip <formula>
//   suite <id>
//
// Library realizer ids (i_r, ax.pairing, ...) are in scope in terms.

#include "pca/directives.hpp"
#include "pca/formula.hpp"
#include "pca/names.hpp"
#include "pca/suites.hpp"
#include "pca/syntax.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace pca {

struct ConfigDirective {
  enum class Key { Fuel, Budget, Seed } key;
  std::uint64_t value = 0;
  std::optional<std::uint64_t> second;
};

struct CheckDirective {
  Term a, b;
  std::vector<std::pair<Term, Term>> witnesses;
  CheckSpec spec;  // pair and witnesses are filled in when run
};

struct SuiteDirective {
  std::string id;
};

struct Directive {
  std::size_t line = 0;
  std::string text;
  std::variant<ConfigDirective, EvalSpec, CheckDirective, SynthSpec, SuiteDirective> body;
};

struct Scenario {
  std::vector<Directive> directives;
};

namespace detail {

inline std::uint64_t to_u64(Scanner& s) {
  Natural n = s.natural();
  if (n > Natural(std::numeric_limits<std::uint64_t>::max())) s.fail("number out of range");
  return static_cast<std::uint64_t>(n);
}

class ScenarioParser {
 public:
  ScenarioParser() : terms_(realizer_table()) {}

  Scenario parse(std::string_view src) {
    Scenario out;
    std::size_t line_no = 0, start_line = 0;
    std::string pending;
    std::istringstream in{std::string(src)};
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (pending.empty()) start_line = line_no;
      if (!line.empty() && line.back() == '\\') {
        line.pop_back();
        pending += line + "\n";
        continue;
      }
      pending += line;
      if (auto d = directive(pending, start_line)) out.directives.push_back(std::move(*d));
      pending.clear();
    }
    if (!pending.empty())
      if (auto d = directive(pending, start_line)) out.directives.push_back(std::move(*d));
    return out;
  }

 private:
  std::optional<Directive> directive(const std::string& text, std::size_t line) {
    Scanner s(text, line);
    if (s.at_end()) return std::nullopt;
    Directive d;
    d.line = line;
    d.text = text;
    std::string kw = word(s);
    if (kw == "fuel") {
      d.body = ConfigDirective{ConfigDirective::Key::Fuel, to_u64(s), std::nullopt};
    } else if (kw == "budget") {
      ConfigDirective c{ConfigDirective::Key::Budget, to_u64(s), std::nullopt};
      if (!s.at_end()) c.second = to_u64(s);
      d.body = c;
    } else if (kw == "seed") {
      d.body = ConfigDirective{ConfigDirective::Key::Seed, to_u64(s), std::nullopt};
    } else if (kw == "term") {
      std::string id = s.ident();
      s.expect("=");
      terms_.insert_or_assign(id, compile(TermParser(s, &terms_).parse()));
      end(s);
      return std::nullopt;
    } else if (kw == "name") {
      std::string id = s.ident();
      s.expect("=");
      VName x = NameParser(s, &terms_, &names_).parse();
      end(s);
      names_.insert_or_assign(id, x);
      return std::nullopt;
    } else if (kw == "formula") {
      std::string id = s.ident();
      s.expect("=");
      Formula f = formula(s);
      end(s);
      formulas_.insert_or_assign(id, f);
      return std::nullopt;
    } else if (kw == "eval") {
      EvalSpec e{term(s)};
      if (s.accept_word("expect")) {
        if (s.accept_word("defined")) e.expect_defined = true;
        else if (s.accept_word("undefined")) e.expect_undefined = true;
        else e.expect = term(s);
      }
      d.body = std::move(e);
    } else if (kw == "check" || kw == "check-with-witnesses") {
      d.body = check(s, kw != "check");
    } else if (kw == "synth-roundtrip") {
      d.body = SynthSpec{formula(s)};
    } else if (kw == "suite") {
      std::string id = word(s);
      if (std::find(suite_ids().begin(), suite_ids().end(), id) == suite_ids().end()) s.fail("unknown suite '" + id + "'");
      d.body = SuiteDirective{id};
    } else {
      s.fail(kw.empty() ? "expected a directive" : "unknown directive '" + kw + "'");
    }
    end(s);
    return d;
  }

  CheckDirective check(Scanner& s, bool on_witnesses) {
    bool sampled = s.accept_word("sampled");
    auto [a, b] = term_pair(s);
    Formula f = formula(s);
    if (!is_closed(f)) s.fail("formula has free variables");
    if (on_witnesses && f.kind() != Formula::Kind::Imp) s.fail("check-with-witnesses needs an implication");
    Value placeholder = numeral(0);
    CheckDirective c{a, b, {}, CheckSpec{RealizerPair::diag(placeholder), f}};
    c.spec.on_witnesses = on_witnesses;
    c.spec.has_expect = false;
    c.spec.sampled = sampled;
    for (;;) {
      if (s.accept_word("witnesses")) {
        do c.witnesses.push_back(term_pair(s));
        while (s.accept(";"));
      } else if (s.accept_word("instances")) {
        do c.spec.instances.push_back(NameParser(s, &terms_, &names_).parse());
        while (s.accept(";"));
      } else {
        break;
      }
    }
    if (on_witnesses && c.witnesses.empty()) s.fail("check-with-witnesses needs a witnesses clause");
    if (s.accept_word("expect")) {
      std::string w = s.ident(false);
      auto st = parse_status(w);
      if (!st) s.fail("expected realized, refuted or unknown");
      c.spec.expect = *st;
      c.spec.has_expect = true;
    }
    return c;
  }

  std::pair<Term, Term> term_pair(Scanner& s) {
    s.expect("(");
    Term a = term(s);
    s.expect(",");
    Term b = term(s);
    s.expect(")");
    return {a, b};
  }

  Term term(Scanner& s) { return compile(TermParser(s, &terms_).parse()); }
  Formula formula(Scanner& s) { return FormulaParser(s, &terms_, &names_, &formulas_).parse(); }

  /// A word of letters and hyphens (directive keywords, suite ids).
  static std::string word(Scanner& s) {
    if (s.at_end()) return {};
    std::string_view r = s.rest();
    std::size_t n = 0;
    while (n < r.size() && (std::isalpha(static_cast<unsigned char>(r[n])) || r[n] == '-')) ++n;
    std::string w(r.substr(0, n));
    s.accept(w);
    return w;
  }

  static void end(Scanner& s) {
    if (!s.at_end()) s.fail("unexpected input '" + std::string(s.rest().substr(0, 20)) + "'");
  }

  TermTable terms_;
  NameTable names_;
  FormulaTable formulas_;
};

}  // namespace detail

/// Throws ParseError with the line and column of the first error.
inline Scenario parse_scenario(std::string_view src) { return detail::ScenarioParser().parse(src); }

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

// ---------------------------------------------------------------------------

struct DirectiveReport {
  std::size_t line = 0;
  std::string kind;
  std::string text;
  bool passed = false;
  std::string summary;
  std::optional<Trace> trace;
  std::optional<SuiteReport> suite;
};

struct ScenarioReport {
  std::vector<DirectiveReport> directives;
  bool passed() const {
    for (const auto& d : directives)
      if (!d.passed) return false;
    return true;
  }
};

namespace detail {

inline Value realizer_value(const Term& t, const FuelConfig& cfg) {
  auto out = eval(t, {}, cfg);
  if (!out.defined()) throw EvalError("realizer term does not evaluate: " + out.describe());
  return out.value();
}

}  // namespace detail

inline ScenarioReport run_scenario(const Scenario& sc, RunConfig cfg = {}) {
  ScenarioReport rep;
  for (const auto& d : sc.directives) {
    DirectiveReport r;
    r.line = d.line;
    r.text = d.text;
    r.passed = true;
    try {
      std::visit(
          [&](const auto& b) {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, ConfigDirective>) {
              r.kind = "config";
              if (b.key == ConfigDirective::Key::Fuel) cfg.fuel.max_steps = b.value;
              if (b.key == ConfigDirective::Key::Seed) cfg.seed = b.value;
              if (b.key == ConfigDirective::Key::Budget) {
                cfg.budget.max_index = b.value;
                if (b.second) cfg.budget.generators_per_type = *b.second;
              }
              r.summary = "ok";
            } else if constexpr (std::is_same_v<T, EvalSpec>) {
              r.kind = "eval";
              DirectiveResult res = b.run(cfg);
              r.passed = res.passed;
              r.summary = res.summary;
            } else if constexpr (std::is_same_v<T, CheckDirective>) {
              r.kind = b.spec.on_witnesses ? "check-with-witnesses" : "check";
              CheckSpec spec = b.spec;
              spec.pair = {detail::realizer_value(b.a, cfg.fuel), detail::realizer_value(b.b, cfg.fuel)};
              for (const auto& [x, y] : b.witnesses)
                spec.witnesses.push_back({detail::realizer_value(x, cfg.fuel), detail::realizer_value(y, cfg.fuel)});
              DirectiveResult res = spec.run(cfg);
              r.passed = res.passed;
              r.summary = res.summary;
              if (res.verdict) r.trace = res.verdict->trace;
            } else if constexpr (std::is_same_v<T, SynthSpec>) {
              r.kind = "synth-roundtrip";
              DirectiveResult res = b.run(cfg);
              r.passed = res.passed;
              r.summary = res.summary;
              if (res.verdict) r.trace = res.verdict->trace;
            } else {
              r.kind = "suite";
              SuiteReport s = run_suite(b.id, cfg);
              r.passed = s.failures() == 0;
              r.summary = std::to_string(s.cases.size()) + " cases, " + std::to_string(s.failures()) + " failed, " +
                          std::to_string(s.count(Outcome::Inconclusive)) + " inconclusive";
              r.suite = std::move(s);
            }
          },
          d.body);
    } catch (const std::exception& e) {
      r.passed = false;
      r.summary = std::string("error: ") + e.what();
    }
    rep.directives.push_back(std::move(r));
  }
  return rep;
}

}  // namespace pca
