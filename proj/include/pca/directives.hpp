#pragma once

// Executable directives shared by scenario files and the built-in suites.
// Each directive can print itself back as a scenario line.

#include "pca/realizability.hpp"
#include "pca/realizers.hpp"
#include "pca/syntax.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace pca {

struct RunConfig {
  FuelConfig fuel;
  EnumBudget budget;
  std::uint64_t seed = 2024;
};

inline std::optional<Status> parse_status(std::string_view w) {
  if (w == "realized") return Status::Realized;
  if (w == "refuted") return Status::Refuted;
  if (w == "unknown") return Status::Unknown;
  return std::nullopt;
}

/// Config lines needed to reproduce a run under `cfg`.
inline std::string config_lines(const RunConfig& cfg) {
  std::string out;
  if (cfg.fuel.max_steps != FuelConfig{}.max_steps) out += "fuel " + std::to_string(cfg.fuel.max_steps) + "\n";
  EnumBudget d;
  if (cfg.budget.max_index != d.max_index || cfg.budget.generators_per_type != d.generators_per_type)
    out += "budget " + std::to_string(cfg.budget.max_index) + " " + std::to_string(cfg.budget.generators_per_type) + "\n";
  return out;
}

struct DirectiveResult {
  bool passed = false;
  bool inconclusive = false;  // a resource limit or generic atom decided nothing
  std::string summary;        // one line
  std::optional<Verdict> verdict;
};

// ---------------------------------------------------------------------------

/// `eval t [expect u | expect defined | expect undefined]`
struct EvalSpec {
  Term term;
  std::optional<Term> expect;
  bool expect_defined = false;
  bool expect_undefined = false;

  DirectiveResult run(const RunConfig& cfg) const {
    Term t = compile(term);
    EvalOutcome out = eval(t, {}, cfg.fuel);
    DirectiveResult r;
    r.summary = out.describe();
    r.inconclusive = out.inconclusive();
    if (expect_undefined) {
      r.passed = out.stuck();
    } else if (expect_defined) {
      r.passed = out.defined();
    } else if (expect) {
      EvalOutcome want = eval(compile(*expect), {}, cfg.fuel);
      r.inconclusive = r.inconclusive || want.inconclusive();
      if (r.inconclusive) r.passed = false;
      else if (out.defined() && want.defined()) r.passed = out.value() == want.value();
      else r.passed = out.stuck() && want.stuck();
      if (!r.passed) r.summary += ", expected " + want.describe();
    } else {
      r.passed = true;
    }
    return r;
  }

  std::string line() const {
    std::string s = "eval " + to_string(term);
    if (expect_undefined) s += " expect undefined";
    else if (expect_defined) s += " expect defined";
    else if (expect) s += " expect " + to_string(*expect);
    return s;
  }
};

/// `check (a, b) φ ...` and `check-with-witnesses (a, b) φ ⇒ ψ ...`
struct CheckSpec {
  RealizerPair pair;
  Formula formula;
  Status expect = Status::Realized;
  bool has_expect = true;
  bool sampled = false;
  /// Only the listed witnesses for the antecedent (formula must be φ ⇒ ψ).
  bool on_witnesses = false;
  std::vector<RealizerPair> witnesses;
  std::vector<VName> instances;

  CheckOptions options() const {
    CheckOptions o;
    o.sample_infinite = sampled;
    if (!on_witnesses && !witnesses.empty()) {
      auto ws = witnesses;
      o.witnesses = [ws](const Formula&) { return ws; };
    }
    if (!instances.empty()) {
      auto xs = instances;
      o.instances = [xs](const std::string&, const Formula&) { return xs; };
    }
    return o;
  }

  Verdict verdict(const RunConfig& cfg) const {
    if (on_witnesses) {
      if (formula.kind() != Formula::Kind::Imp) throw std::invalid_argument("check-with-witnesses needs an implication");
      return check_imp_on_witnesses(pair, formula.left(), formula.right(), witnesses, cfg.budget, cfg.fuel, options());
    }
    return check(pair, formula, cfg.budget, cfg.fuel, options());
  }

  DirectiveResult run(const RunConfig& cfg) const {
    DirectiveResult r;
    Verdict v = verdict(cfg);
    r.inconclusive = v.unknown() && expect != Status::Unknown;
    r.passed = !has_expect || v.status == expect;
    r.summary = to_string(v.status);
    if (!v.trace.note.empty()) r.summary += ": " + v.trace.note;
    if (!r.passed) r.summary += " (expected " + std::string(to_string(expect)) + ")";
    r.verdict = std::move(v);
    return r;
  }

  std::string line() const {
    std::ostringstream s;
    s << (on_witnesses ? "check-with-witnesses " : "check ");
    if (sampled) s << "sampled ";
    s << "(" << to_string(pair.a) << ", " << to_string(pair.b) << ") " << to_string(formula);
    if (!witnesses.empty()) {
      s << " witnesses";
      for (std::size_t i = 0; i < witnesses.size(); ++i)
        s << (i ? "; " : " ") << "(" << to_string(witnesses[i].a) << ", " << to_string(witnesses[i].b) << ")";
    }
    if (!instances.empty()) {
      s << " instances";
      for (std::size_t i = 0; i < instances.size(); ++i) s << (i ? "; " : " ") << to_string(instances[i]);
    }
    if (has_expect) s << " expect " << to_string(expect);
    return s.str();
  }
};

/// `synth-roundtrip φ`: truth on bounded arithmetic agrees with
/// checking the synthesized realizer.
struct SynthSpec {
  Formula formula;

  DirectiveResult run(const RunConfig& cfg) const {
    DirectiveResult r;
    bool truth = truth_eval(formula);
    auto p = synthesize(formula);
    bool realized = false;
    if (p) {
      Verdict v = check(*p, formula, cfg.budget, cfg.fuel);
      realized = v.realized();
      r.verdict = std::move(v);
    }
    r.passed = truth == realized;
    r.summary = std::string("truth ") + (truth ? "true" : "false") + ", synthesized realizer " +
                (p ? (realized ? "realizes it" : "does not check") : "absent");
    return r;
  }

  std::string line() const { return "synth-roundtrip " + to_string(formula); }
};

}  // namespace pca
