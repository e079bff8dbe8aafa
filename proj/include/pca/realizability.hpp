#pragma once

// a = b ⊩ φ on the finite/schematic fragment, as a three-valued check
// with an evidence trace; the truth oracle for bounded arithmetic and
// realizer synthesis for its true sentences.

#include "pca/formula.hpp"
#include "pca/machine.hpp"
#include "pca/names.hpp"
#include "pca/realizers.hpp"

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace pca {

enum class Status { Realized, Refuted, Unknown };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Realized: return "realized";
    case Status::Refuted: return "refuted";
    case Status::Unknown: return "unknown";
  }
  return "?";
}

/// How a Realized node was established. Exhaustive: every instance of the
/// clause was verified (possibly by the realizability-equals-truth fact on
/// arithmetic). WitnessDirected: verified only on supplied witnesses or on
/// sampled instances of an infinite name.
enum class Mode { None, Exhaustive, WitnessDirected };

inline const char* to_string(Mode m) {
  switch (m) {
    case Mode::None: return "-";
    case Mode::Exhaustive: return "exhaustive";
    case Mode::WitnessDirected: return "witness-directed";
  }
  return "?";
}

struct Trace {
  std::string clause;
  std::optional<Formula> formula;
  Status status = Status::Unknown;
  Mode mode = Mode::None;
  std::string note;
  std::vector<Trace> children;
};

struct Verdict {
  Status status = Status::Unknown;
  Trace trace;
  std::size_t samples = 0;

  bool realized() const { return status == Status::Realized; }
  bool refuted() const { return status == Status::Refuted; }
  bool unknown() const { return status == Status::Unknown; }
};

struct RealizerPair {
  Value a, b;
  static RealizerPair diag(const Value& a) { return {a, a}; }
};

struct CheckOptions {
  /// Refute ṅ = ṁ for n ≠ m outright (absoluteness at type o).
  bool nat_eq_shortcut = true;
  /// Decide ¬φ and vacuous implications on the arithmetic fragment by truth.
  bool truth_shortcuts = true;
  /// Run implication realizers on generic atoms; an output that does not
  /// depend on its input is checked once for all inputs.
  bool generic_implications = true;
  /// Allow Realized (witness-directed) for bounded quantifiers and
  /// equalities over infinite names when every enumerated instance passes.
  bool sample_infinite = false;
  /// Extra realizers believed to realize an implication's antecedent.
  std::function<std::vector<RealizerPair>(const Formula&)> witnesses;
  /// Instances for unbounded quantifiers (witness-directed).
  std::function<std::vector<VName>(const std::string&, const Formula&)> instances;
};

// ---------------------------------------------------------------------------
// Truth on bounded arithmetic: names are ṅ and ω̇, ∈ is <, = is =.

inline bool arithmetic_name(const VName& x) { return x.kind() == VName::Kind::Nat || x.kind() == VName::Kind::Omega; }

/// Closed formula over ṅ/ω̇ atoms with bounded quantifiers over ṅ only.
inline bool in_fragment(const Formula& f) {
  using K = Formula::Kind;
  auto ok = [](const NameRef& r) { return !r.is_var() && arithmetic_name(r.name()); };
  switch (f.kind()) {
    case K::Mem:
    case K::Eq: return ok(f.x()) && ok(f.y());
    case K::And:
    case K::Or:
    case K::Imp: return in_fragment(f.left()) && in_fragment(f.right());
    case K::Not: return in_fragment(f.left());
    case K::AllIn:
    case K::ExIn: {
      if (f.bound().is_var() || f.bound().name().kind() != VName::Kind::Nat) return false;
      if (f.bound().name().n() == 0) return true;
      return in_fragment(substitute(f.body(), f.var(), VName::nat(0)));
    }
    default: return false;
  }
}

class FragmentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline bool truth_eval(const Formula& f) {
  using K = Formula::Kind;
  auto num = [](const NameRef& r) -> std::optional<Natural> {
    if (r.is_var() || !arithmetic_name(r.name()))
      throw FragmentError("truth_eval: not an arithmetic name: " + detail::ref_string(r));
    if (r.name().kind() == VName::Kind::Omega) return std::nullopt;
    return r.name().n();
  };
  switch (f.kind()) {
    case K::Mem: {
      auto x = num(f.x()), y = num(f.y());
      if (!x) return false;   // ω is not an element of ω or of any n
      if (!y) return true;    // every n is in ω
      return *x < *y;
    }
    case K::Eq: {
      auto x = num(f.x()), y = num(f.y());
      if (!x || !y) return !x && !y;
      return *x == *y;
    }
    case K::And: return truth_eval(f.left()) && truth_eval(f.right());
    case K::Or: return truth_eval(f.left()) || truth_eval(f.right());
    case K::Imp: return !truth_eval(f.left()) || truth_eval(f.right());
    case K::Not: return !truth_eval(f.left());
    case K::AllIn:
    case K::ExIn: {
      if (f.bound().is_var() || f.bound().name().kind() != VName::Kind::Nat)
        throw FragmentError("truth_eval: bounded quantifier needs a numeral bound");
      bool all = f.kind() == K::AllIn;
      for (Natural m = 0; m < f.bound().name().n(); ++m) {
        bool v = truth_eval(substitute(f.body(), f.var(), VName::nat(m)));
        if (all && !v) return false;
        if (!all && v) return true;
      }
      return all;
    }
    default: throw FragmentError("truth_eval: unbounded quantifier");
  }
}

/// Whether some realizer of ṅ = ṁ exists: exactly when n = m.
inline bool decide_nat_eq(const Natural& n, const Natural& m) { return n == m; }

// ---------------------------------------------------------------------------

class Checker {
 public:
  Checker(EnumBudget budget = {}, FuelConfig cfg = {}, CheckOptions opts = {})
      : budget_(budget), cfg_(cfg), opts_(std::move(opts)) {}

  Verdict check(const RealizerPair& p, const Formula& f) {
    if (!is_closed(f)) throw std::invalid_argument("check: formula has free variables: " + to_string(f));
    samples_ = 0;
    Verdict v;
    v.trace = run(p.a, p.b, f);
    v.status = v.trace.status;
    v.samples = samples_;
    return v;
  }

  /// ∀c,d (c = d ⊩ φ ⟹ ac = bd ⊩ ψ) checked on the given witnesses only.
  Verdict check_imp_on_witnesses(const RealizerPair& p, const Formula& phi, const Formula& psi,
                                 const std::vector<RealizerPair>& witnesses) {
    samples_ = 0;
    Trace t = node("imp", Formula::imp(phi, psi));
    witness_directed(t, p.a, p.b, phi, psi, witnesses);
    if (t.status == Status::Unknown && t.note.empty()) t.note = "no usable witness";
    Verdict v;
    v.status = t.status;
    v.trace = std::move(t);
    v.samples = samples_;
    return v;
  }

  const EnumBudget& budget() const { return budget_; }
  const FuelConfig& fuel() const { return cfg_; }

 private:
  struct Step {
    std::optional<Value> v;
    Status fail = Status::Unknown;
    std::string why;
  };

  Step app(const Value& f, const Value& x) {
    auto out = apply(f, x, cfg_);
    if (out.defined()) return {out.value(), Status::Unknown, {}};
    return {std::nullopt, out.inconclusive() ? Status::Unknown : Status::Refuted, out.describe()};
  }

  Step proj(const Value& v, int i) { return app(defined_constant(i ? ConstKind::P1 : ConstKind::P0), v); }

  Trace node(const char* clause, const Formula& f) {
    ++samples_;
    Trace t;
    t.clause = clause;
    t.formula = f;
    return t;
  }

  static Trace leaf(Trace t, Status s, std::string note, Mode m = Mode::None) {
    t.status = s;
    t.note = std::move(note);
    t.mode = s == Status::Realized ? (m == Mode::None ? Mode::Exhaustive : m) : Mode::None;
    return t;
  }

  /// Fails `t` if either evaluation failed; returns false in that case.
  static bool require(Trace& t, const Step& x, const Step& y, const char* what) {
    for (const Step* s : {&x, &y}) {
      if (!s->v) {
        Status st = s->fail;
        if (x.v || y.v || st == Status::Refuted || x.fail == Status::Refuted || y.fail == Status::Refuted)
          st = (x.fail == Status::Refuted && !x.v) || (y.fail == Status::Refuted && !y.v) ? Status::Refuted
                                                                                            : Status::Unknown;
        t = leaf(std::move(t), st, std::string(what) + " undefined: " + s->why);
        return false;
      }
    }
    return true;
  }

  static Mode combine(Mode a, Mode b) {
    if (a == Mode::WitnessDirected || b == Mode::WitnessDirected) return Mode::WitnessDirected;
    return Mode::Exhaustive;
  }

  /// ∀-shaped: every child must be Realized and the enumeration complete.
  void conjunctive(Trace& t, bool exhaustive) {
    bool all = true;
    Mode m = Mode::Exhaustive;
    for (const auto& c : t.children) {
      if (c.status == Status::Refuted) {
        t.status = Status::Refuted;
        t.mode = Mode::None;
        return;
      }
      if (c.status != Status::Realized) all = false;
      else m = combine(m, c.mode);
    }
    if (all && exhaustive) {
      t.status = Status::Realized;
      t.mode = m;
    } else if (all && opts_.sample_infinite) {
      t.status = Status::Realized;
      t.mode = Mode::WitnessDirected;
      if (t.note.empty()) t.note = "all " + std::to_string(t.children.size()) + " sampled instances pass";
    } else {
      t.status = Status::Unknown;
      if (t.note.empty()) t.note = all ? "enumeration truncated by budget" : "some instance unknown";
    }
  }

  /// ∃-shaped: some child Realized; refuted only if every candidate is
  /// refuted and the lookup was complete.
  void existential(Trace& t, bool exhaustive, bool sampled) {
    bool all_refuted = true;
    for (const auto& c : t.children) {
      if (c.status == Status::Realized) {
        t.status = Status::Realized;
        t.mode = sampled ? Mode::WitnessDirected : c.mode;
        if (sampled && t.note.empty()) t.note = "membership of the key rests on a sampled =_σ check";
        return;
      }
      if (c.status != Status::Refuted) all_refuted = false;
    }
    if (all_refuted && exhaustive) {
      t.status = Status::Refuted;
      if (t.note.empty()) t.note = t.children.empty() ? "no triple with this key" : "no candidate works";
    } else {
      t.status = Status::Unknown;
      if (t.note.empty()) t.note = exhaustive ? "some candidate unknown" : "lookup incomplete";
    }
  }

  Trace run(const Value& a, const Value& b, const Formula& f) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::Mem: return mem(a, b, f);
      case K::Eq: return eq(a, b, f);
      case K::And: {
        Trace t = node("and", f);
        Step a0 = proj(a, 0), b0 = proj(b, 0), a1 = proj(a, 1), b1 = proj(b, 1);
        if (!require(t, a0, b0, "(a)0") || !require(t, a1, b1, "(a)1")) return t;
        t.children.push_back(run(*a0.v, *b0.v, f.left()));
        if (t.children.back().status != Status::Refuted) t.children.push_back(run(*a1.v, *b1.v, f.right()));
        conjunctive(t, true);
        return t;
      }
      case K::Or: {
        Trace t = node("or", f);
        Step a0 = proj(a, 0), b0 = proj(b, 0);
        if (!require(t, a0, b0, "tag")) return t;
        long long ta = small_numeral(*a0.v), tb = small_numeral(*b0.v);
        if (ta != tb || (ta != 0 && ta != 1))
          return leaf(std::move(t), Status::Refuted, "tags " + to_string(*a0.v) + " / " + to_string(*b0.v) + " are not both 0 or both 1");
        Step a1 = proj(a, 1), b1 = proj(b, 1);
        if (!require(t, a1, b1, "(a)1")) return t;
        t.note = ta == 0 ? "left disjunct" : "right disjunct";
        t.children.push_back(run(*a1.v, *b1.v, ta == 0 ? f.left() : f.right()));
        t.status = t.children.back().status;
        t.mode = t.children.back().mode;
        return t;
      }
      case K::Not: {
        Trace t = node("not", f);
        if (opts_.truth_shortcuts && in_fragment(f.left())) {
          if (truth_eval(f.left())) return leaf(std::move(t), Status::Refuted, "negated formula is true, hence realized");
          return leaf(std::move(t), Status::Realized, "negated formula is false, hence has no realizer");
        }
        return leaf(std::move(t), Status::Unknown, "negation over all of A is not decidable here");
      }
      case K::Imp: return imp(a, b, f);
      case K::AllIn: {
        Trace t = node("all-in", f);
        TripleList ts = bound_triples(f.bound(), t);
        for (const auto& tr : ts.triples) {
          Step ac = app(a, tr.a), bd = app(b, tr.b);
          Trace c = node("instance", substitute(f.body(), f.var(), tr.y));
          if (!require(c, ac, bd, "a c")) {
            t.children.push_back(std::move(c));
            if (t.children.back().status == Status::Refuted) break;
            continue;
          }
          Trace sub = run(*ac.v, *bd.v, *c.formula);
          bool refuted = sub.status == Status::Refuted;
          t.children.push_back(std::move(sub));
          if (refuted) break;
        }
        conjunctive(t, ts.exhaustive);
        return t;
      }
      case K::ExIn: {
        Trace t = node("ex-in", f);
        Step a0 = proj(a, 0), b0 = proj(b, 0), a1 = proj(a, 1), b1 = proj(b, 1);
        if (!require(t, a0, b0, "(a)0") || !require(t, a1, b1, "(a)1")) return t;
        Lookup lk = bound_lookup(f.bound(), *a0.v, *b0.v);
        for (const auto& x : lk.matches) {
          t.children.push_back(run(*a1.v, *b1.v, substitute(f.body(), f.var(), x)));
          if (t.children.back().status == Status::Realized) break;
        }
        existential(t, lk.exhaustive, lk.sampled);
        return t;
      }
      case K::All:
      case K::Ex: {
        bool all = f.kind() == K::All;
        Trace t = node(all ? "all" : "ex", f);
        if (!free_vars(f.body()).count(f.var())) {
          t.children.push_back(run(a, b, f.body()));
          t.status = t.children.back().status;
          t.mode = t.children.back().mode;
          return t;
        }
        std::vector<VName> inst;
        if (opts_.instances) inst = opts_.instances(f.var(), f.body());
        if (inst.empty()) return leaf(std::move(t), Status::Unknown, "unbounded quantifier over V(A)");
        for (const auto& x : inst) {
          t.children.push_back(run(a, b, substitute(f.body(), f.var(), x)));
          auto st = t.children.back().status;
          if ((all && st == Status::Refuted) || (!all && st == Status::Realized)) break;
        }
        if (all) {
          bool saved = opts_.sample_infinite;
          opts_.sample_infinite = true;
          conjunctive(t, false);
          opts_.sample_infinite = saved;
          if (t.status == Status::Realized) t.note = "on " + std::to_string(inst.size()) + " supplied instances";
        } else {
          existential(t, false, false);
        }
        return t;
      }
    }
    return Trace{};
  }

  TripleList bound_triples(const NameRef& r, Trace& t) {
    if (r.is_var()) throw std::invalid_argument("check: unbound variable " + r.var());
    TripleList ts = enumerate_triples(r.name(), budget_, cfg_);
    if (!ts.exhaustive) t.note = "enumerated " + std::to_string(ts.triples.size()) + " triples of an infinite name";
    return ts;
  }

  Lookup bound_lookup(const NameRef& r, const Value& a, const Value& b) {
    if (r.is_var()) throw std::invalid_argument("check: unbound variable " + r.var());
    return lookup_triples(r.name(), a, b, budget_, cfg_);
  }

  Trace mem(const Value& a, const Value& b, const Formula& f) {
    Trace t = node("mem", f);
    Step a0 = proj(a, 0), b0 = proj(b, 0), a1 = proj(a, 1), b1 = proj(b, 1);
    if (!require(t, a0, b0, "(a)0") || !require(t, a1, b1, "(a)1")) return t;
    Lookup lk = bound_lookup(f.y(), *a0.v, *b0.v);
    for (const auto& z : lk.matches) {
      t.children.push_back(run(*a1.v, *b1.v, Formula::eq(f.x(), z)));
      if (t.children.back().status == Status::Realized) break;
    }
    existential(t, lk.exhaustive, lk.sampled);
    return t;
  }

  Trace eq(const Value& a, const Value& b, const Formula& f) {
    Trace t = node("eq", f);
    const VName& x = f.x().name();
    const VName& y = f.y().name();
    if (opts_.nat_eq_shortcut && x.kind() == VName::Kind::Nat && y.kind() == VName::Kind::Nat &&
        !decide_nat_eq(x.n(), y.n()))
      return leaf(std::move(t), Status::Refuted, "distinct numeral names have no realizer of equality");
    bool exhaustive = true;
    for (int side = 0; side < 2; ++side) {
      const VName& from = side == 0 ? x : y;
      const VName& into = side == 0 ? y : x;
      TripleList ts = enumerate_triples(from, budget_, cfg_);
      exhaustive = exhaustive && ts.exhaustive;
      for (const auto& tr : ts.triples) {
        Trace c = node(side == 0 ? "eq-left" : "eq-right", Formula::mem(tr.y, into));
        Step ac = app(a, tr.a), bd = app(b, tr.b);
        if (!require(c, ac, bd, "a c")) {
          t.children.push_back(std::move(c));
          if (t.children.back().status == Status::Refuted) break;
          continue;
        }
        Step p = proj(*ac.v, side), q = proj(*bd.v, side);
        if (!require(c, p, q, "(a c)i")) {
          t.children.push_back(std::move(c));
          if (t.children.back().status == Status::Refuted) break;
          continue;
        }
        t.children.push_back(mem(*p.v, *q.v, *c.formula));
        if (t.children.back().status == Status::Refuted) break;
      }
      if (!t.children.empty() && t.children.back().status == Status::Refuted) break;
    }
    if (!exhaustive && t.note.empty()) t.note = "enumeration of an infinite name truncated by budget";
    conjunctive(t, exhaustive);
    return t;
  }

  Trace imp(const Value& a, const Value& b, const Formula& f) {
    Trace t = node("imp", f);
    const Formula& phi = f.left();
    const Formula& psi = f.right();
    bool arith_phi = opts_.truth_shortcuts && in_fragment(phi);
    if (arith_phi) {
      bool tphi = truth_eval(phi);
      if (!tphi) return leaf(std::move(t), Status::Realized, "antecedent is false, hence has no realizer");
      if (in_fragment(psi) && !truth_eval(psi))
        return leaf(std::move(t), Status::Refuted, "antecedent is realizable but the consequent is false");
    }
    if (opts_.generic_implications) {
      ++generic_counter_;
      Value c = Value::opaque("c" + std::to_string(generic_counter_), true);
      Value d = Value::opaque("d" + std::to_string(generic_counter_), true);
      Step ac = app(a, c), bd = app(b, d);
      if (ac.v && bd.v) {
        if (*ac.v == c && *bd.v == d && alpha_equal(phi, psi))
          return leaf(std::move(t), Status::Realized, "identity on a generic input", Mode::Exhaustive);
        if (!ac.v->contains_generic() && !bd.v->contains_generic()) {
          Trace sub = run(*ac.v, *bd.v, psi);
          if (sub.status == Status::Realized) {
            t.note = "output independent of a generic input";
            t.children.push_back(std::move(sub));
            t.status = Status::Realized;
            t.mode = t.children.back().mode;
            return t;
          }
        }
      } else if ((!ac.v && ac.fail == Status::Refuted) || (!bd.v && bd.fail == Status::Refuted)) {
        // Stuck without inspecting the input: stuck for every input.
        t.note = "realizer is undefined on every input";
        if (arith_phi) return leaf(std::move(t), Status::Refuted, t.note);
      }
    }
    std::vector<RealizerPair> ws;
    if (opts_.witnesses) ws = opts_.witnesses(phi);
    if (arith_phi) {
      if (auto s = synthesize_value(phi)) ws.push_back(RealizerPair::diag(*s));
    }
    if (ws.empty()) return leaf(std::move(t), Status::Unknown, "implication over all of A; no witnesses");
    witness_directed(t, a, b, phi, psi, ws);
    return t;
  }

  void witness_directed(Trace& t, const Value& a, const Value& b, const Formula& phi, const Formula& psi,
                        const std::vector<RealizerPair>& ws) {
    std::size_t used = 0;
    bool any_unknown = false;
    for (const auto& w : ws) {
      Trace pre = run(w.a, w.b, phi);
      if (pre.status != Status::Realized) {
        Trace skip = node("witness", phi);
        skip.status = Status::Unknown;
        skip.note = "witness skipped: it does not realize the antecedent";
        t.children.push_back(std::move(skip));
        continue;
      }
      ++used;
      Step ac = app(a, w.a), bd = app(b, w.b);
      Trace c = node("witness", psi);
      if (!require(c, ac, bd, "a c")) {
        if (c.status == Status::Refuted && pre.mode != Mode::Exhaustive) c.status = Status::Unknown;
        bool refuted = c.status == Status::Refuted;
        t.children.push_back(std::move(c));
        if (refuted) {
          t.status = Status::Refuted;
          t.note = "undefined on a realizer of the antecedent";
          return;
        }
        any_unknown = true;
        continue;
      }
      Trace sub = run(*ac.v, *bd.v, psi);
      if (sub.status == Status::Refuted && pre.mode != Mode::Exhaustive) {
        sub.status = Status::Unknown;
        sub.note = "refuted on a witness that is itself only witness-directed";
      }
      t.children.push_back(std::move(sub));
      auto st = t.children.back().status;
      if (st == Status::Refuted) {
        t.status = Status::Refuted;
        t.mode = Mode::None;
        t.note = "a realizer of the antecedent is mapped to a non-realizer";
        return;
      }
      if (st == Status::Unknown) any_unknown = true;
    }
    if (used == 0 || any_unknown) {
      t.status = Status::Unknown;
      t.note = used == 0 ? "no witness realizes the antecedent" : "some witness output unknown";
      return;
    }
    t.status = Status::Realized;
    t.mode = Mode::WitnessDirected;
    t.note = "verified on " + std::to_string(used) + " witness(es); the universal claim over A is unverified";
  }

 public:
  /// A realizer of a true fragment sentence, or nullopt if it is false.
  static std::optional<Value> synthesize_value(const Formula& f);

 private:
  EnumBudget budget_;
  FuelConfig cfg_;
  CheckOptions opts_;
  std::size_t samples_ = 0;
  std::size_t generic_counter_ = 0;
};

inline Verdict check(const RealizerPair& p, const Formula& f, EnumBudget budget = {}, FuelConfig cfg = {},
                     CheckOptions opts = {}) {
  return Checker(budget, cfg, std::move(opts)).check(p, f);
}

inline Verdict check_imp_on_witnesses(const RealizerPair& p, const Formula& phi, const Formula& psi,
                                      const std::vector<RealizerPair>& witnesses, EnumBudget budget = {},
                                      FuelConfig cfg = {}, CheckOptions opts = {}) {
  return Checker(budget, cfg, std::move(opts)).check_imp_on_witnesses(p, phi, psi, witnesses);
}

/// Every Realized node is marked exhaustive or witness-directed, and no
/// Realized node has an Unknown or Refuted child it depends on.
inline bool audit_trace(const Trace& t) {
  if (t.status == Status::Realized && t.mode == Mode::None) return false;
  for (const auto& c : t.children)
    if (!audit_trace(c)) return false;
  return true;
}

/// True if any Realized node of the trace is witness-directed.
inline bool uses_witnesses(const Trace& t) {
  if (t.status == Status::Realized && t.mode == Mode::WitnessDirected) return true;
  for (const auto& c : t.children)
    if (c.status == Status::Realized && uses_witnesses(c)) return true;
  return false;
}

inline std::string render_trace(const Trace& t, int max_depth = 3, int depth = 0) {
  std::ostringstream os;
  os << std::string(2 * depth, ' ') << t.clause << " [" << to_string(t.status);
  if (t.status == Status::Realized) os << ", " << to_string(t.mode);
  os << "]";
  if (t.formula) os << " " << to_string(*t.formula);
  if (!t.note.empty()) os << "  -- " << t.note;
  os << "\n";
  if (depth < max_depth)
    for (const auto& c : t.children) os << render_trace(c, max_depth, depth + 1);
  else if (!t.children.empty())
    os << std::string(2 * depth + 2, ' ') << "... " << t.children.size() << " sub-checks\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Synthesis on the arithmetic fragment.

namespace detail {

inline Value eval_value(const Term& t) {
  auto out = eval(t);
  if (!out.defined()) throw EvalError("synthesis produced an undefined term: " + out.describe());
  return out.value();
}

inline Value pair_value(const Value& x, const Value& y) {
  return eval_value(apps(Term::constant(ConstKind::P), {Term::quote(x), Term::quote(y)}));
}

}  // namespace detail

inline std::optional<Value> Checker::synthesize_value(const Formula& f) {
  using K = Formula::Kind;
  if (!in_fragment(f)) throw FragmentError("synthesize: formula outside the arithmetic fragment: " + to_string(f));
  if (!truth_eval(f)) return std::nullopt;
  const Value& ir = realizer("i_r");
  switch (f.kind()) {
    case K::Eq: return ir;
    case K::Mem: {
      const VName& x = f.x().name();
      return detail::pair_value(Value::num(x.n()), ir);
    }
    case K::And: return detail::pair_value(*synthesize_value(f.left()), *synthesize_value(f.right()));
    case K::Or: {
      if (truth_eval(f.left())) return detail::pair_value(numeral(0), *synthesize_value(f.left()));
      return detail::pair_value(numeral(1), *synthesize_value(f.right()));
    }
    case K::Not: return numeral(0);
    case K::Imp: {
      if (!truth_eval(f.left())) return Value::comb(Combinator::K).with_arg(numeral(0));
      return Value::comb(Combinator::K).with_arg(*synthesize_value(f.right()));
    }
    case K::AllIn: {
      const Natural& n = f.bound().name().n();
      if (n == 0) return Value::comb(Combinator::K).with_arg(numeral(0));
      // \c. D c #0 s0 (D c #1 s1 (... s_{n-1}))
      Term table = Term::quote(*synthesize_value(substitute(f.body(), f.var(), VName::nat(n - 1))));
      for (Natural m = n - 1; m > 0;) {
        --m;
        Term sm = Term::quote(*synthesize_value(substitute(f.body(), f.var(), VName::nat(m))));
        table = apps(Term::constant(ConstKind::D), {Term::var("c"), Term::num(m), sm, table});
      }
      return detail::eval_value(compile(Term::lam("c", table)));
    }
    case K::ExIn: {
      for (Natural m = 0; m < f.bound().name().n(); ++m) {
        Formula inst = substitute(f.body(), f.var(), VName::nat(m));
        if (truth_eval(inst)) return detail::pair_value(Value::num(m), *synthesize_value(inst));
      }
      return std::nullopt;
    }
    default: return std::nullopt;
  }
}

inline std::optional<RealizerPair> synthesize(const Formula& f) {
  auto v = Checker::synthesize_value(f);
  if (!v) return std::nullopt;
  return RealizerPair::diag(*v);
}

}  // namespace pca
