#pragma once

// Canonical desk-scale instances shared by the suites: key-remapped copies
// of ṅ, the Infinity battery, and single-token mutations of realizer
// sources.

#include "pca/axioms.hpp"
#include "pca/formula.hpp"
#include "pca/realizability.hpp"
#include "pca/realizers.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace pca {

/// {⟨k+off, k+off, k̇⟩ : k < n}: extensionally ṅ, with other keys.
inline VName remapped_nat(unsigned n, unsigned off) {
  std::vector<VName::Triple> ts;
  for (unsigned k = 0; k < n; ++k) ts.push_back({numeral(k + off), numeral(k + off), VName::nat(k)});
  return VName::explicit_set(std::move(ts));
}

/// A realizer of ṅ = remapped_nat(n, off), dispatching on the key. Its
/// two components differ, unlike those of i_r.
inline Value remap_realizer(unsigned n, unsigned off) {
  std::string body = "#0";
  for (unsigned k = n; k-- > 0;) {
    std::string kk = "#" + std::to_string(k), ko = "#" + std::to_string(k + off);
    body = "(D c " + kk + " (P (P " + ko + " i_r) #0) (D c " + ko + " (P #0 (P " + kk + " i_r)) " + body + "))";
  }
  return library_value("\\c. " + body);
}

// ---------------------------------------------------------------------------

struct CaseResult {
  std::string label;
  Status status = Status::Unknown;
  std::string detail;
};

/// Realizers of y ∈ ω̇ for n ≤ max_n: p n̄ i_r on ṅ and p n̄ (i_s R) on the
/// remapped copy.
struct OmegaWitness {
  VName y;
  RealizerPair r;
  unsigned n;
};

inline std::vector<OmegaWitness> omega_witnesses(unsigned max_n) {
  std::vector<OmegaWitness> out;
  for (unsigned n = 0; n <= max_n; ++n) {
    out.push_back({VName::nat(n), RealizerPair::diag(detail::pair_value(numeral(n), realizer("i_r"))), n});
    Value rs = library_value("i_s");
    Value r = apply(rs, remap_realizer(n, 10)).value();
    out.push_back({remapped_nat(n, 10), RealizerPair::diag(detail::pair_value(numeral(n), r)), n});
  }
  return out;
}

/// e0 ⊩ y ∈ ω̇ ⟹ ϑ(y) and e1 ⊩ ϑ(y) ⟹ y ∈ ω̇ on the witnesses above, with
/// e1 fed the outputs of `e0_for_e1` and one hand-built realizer of ϑ(0̇).
inline std::vector<CaseResult> infinity_battery(const Value& e0, const Value& e1, const Value& e0_for_e1,
                                                unsigned max_n = 4, FuelConfig cfg = {}) {
  std::vector<CaseResult> out;
  Formula omega_mem = Formula::mem(NameRef(std::string("y")), NameRef(VName::omega()));
  for (const auto& w : omega_witnesses(max_n)) {
    Formula in = substitute(omega_mem, "y", w.y);
    Formula th = theta(NameRef(w.y));
    std::string tag = to_string(w.y);
    Verdict v0 = check_imp_on_witnesses(RealizerPair::diag(e0), in, th, {w.r}, {}, cfg);
    out.push_back({"e0 on " + tag, v0.status, v0.trace.note});
    auto t = apply(e0_for_e1, w.r.a, cfg);
    if (!t.defined()) {
      out.push_back({"e1 on " + tag, Status::Unknown, "no theta witness: " + t.describe()});
      continue;
    }
    Verdict v1 = check_imp_on_witnesses(RealizerPair::diag(e1), th, in, {RealizerPair::diag(t.value())}, {}, cfg);
    out.push_back({"e1 on " + tag, v1.status, v1.trace.note});
  }
  // ϑ(0̇) realized with a nonzero second component, which e0 never produces.
  Formula th0 = theta(NameRef(VName::nat(0)));
  RealizerPair z = RealizerPair::diag(detail::pair_value(numeral(0), numeral(7)));
  Verdict v = check_imp_on_witnesses(RealizerPair::diag(e1), th0, substitute(omega_mem, "y", VName::nat(0)), {z}, {}, cfg);
  out.push_back({"e1 on p 0 7", v.status, v.trace.note});
  return out;
}

inline std::vector<CaseResult> infinity_battery() {
  return infinity_battery(realizer("ax.inf.e0"), realizer("ax.inf.e1"), realizer("ax.inf.e0"));
}

// ---------------------------------------------------------------------------

/// A single-token change of a source: a projection P0 ↔ P1, or a numeral
/// #0 ↔ #1 in tag position (the first argument of P, or an argument of D).
struct Mutation {
  std::size_t pos;
  std::string from, to;
};

inline std::vector<Mutation> mutation_sites(const std::string& src) {
  std::vector<Mutation> out;
  auto ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\''; };
  for (std::size_t i = 0; i + 1 < src.size(); ++i) {
    bool left_ok = i == 0 || !ident(src[i - 1]);
    bool right_ok = i + 2 >= src.size() || !ident(src[i + 2]);
    if (src[i] == 'P' && (src[i + 1] == '0' || src[i + 1] == '1') && left_ok && right_ok)
      out.push_back({i, src.substr(i, 2), src[i + 1] == '0' ? "P1" : "P0"});
    if (src[i] == '#' && (src[i + 1] == '0' || src[i + 1] == '1') && right_ok) {
      // tag position: directly after "P " or after "D " / "D <atom> "
      std::size_t j = i;
      while (j > 0 && src[j - 1] == ' ') --j;
      bool after_p = j >= 1 && src[j - 1] == 'P' && (j < 2 || !ident(src[j - 2]));
      bool after_d = j >= 1 && src[j - 1] == 'D' && (j < 2 || !ident(src[j - 2]));
      if (after_p || after_d) out.push_back({i, src.substr(i, 2), src[i + 1] == '0' ? "#1" : "#0"});
    }
  }
  return out;
}

inline std::string apply_mutation(std::string src, const Mutation& m) { return src.replace(m.pos, m.from.size(), m.to); }

struct MutationOutcome {
  std::string realizer;
  Mutation mutation;
  std::size_t refuted = 0, cases = 0;
};

/// Every single-site mutant of e0 and of e1, each run through the battery.
inline std::vector<MutationOutcome> infinity_mutations(unsigned max_n = 4) {
  std::vector<MutationOutcome> out;
  const Value& e0 = realizer("ax.inf.e0");
  const Value& e1 = realizer("ax.inf.e1");
  for (const char* id : {"ax.inf.e0", "ax.inf.e1"}) {
    const std::string& src = realizer_source(id);
    for (const auto& m : mutation_sites(src)) {
      Value mut = library_value(apply_mutation(src, m));
      bool first = std::string(id) == "ax.inf.e0";
      FuelConfig cfg;
      cfg.max_steps = 20000;
      auto cases = first ? infinity_battery(mut, e1, mut, max_n, cfg) : infinity_battery(e0, mut, e0, max_n, cfg);
      MutationOutcome o{id, m, 0, cases.size()};
      for (const auto& c : cases) o.refuted += c.status == Status::Refuted;
      out.push_back(o);
    }
  }
  return out;
}

}  // namespace pca
