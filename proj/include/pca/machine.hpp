#pragma once

// Fuel-bounded call-by-value evaluation: the partial application operation
// of the term machine.

#include "pca/abstraction.hpp"
#include "pca/term.hpp"
#include "pca/value.hpp"

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>

namespace pca {

struct FuelConfig {
  std::size_t max_steps = 100000;
  std::size_t max_value_size = 1000000;
};

enum class StuckKind {
  IllTyped,          // a numeral applied as a function
  NonNumeralCase,    // D, SUCC or PRED on a non-numeral
  PredZero,          // PRED on 0
  GenericInspected,  // a generic atom was applied or cased on
};

inline const char* to_string(StuckKind k) {
  switch (k) {
    case StuckKind::IllTyped: return "ill-typed-application";
    case StuckKind::NonNumeralCase: return "non-numeral";
    case StuckKind::PredZero: return "pred-zero";
    case StuckKind::GenericInspected: return "generic-inspected";
  }
  return "?";
}

struct Defined {
  Value value;
  std::size_t steps = 0;
};
struct FuelExhausted {
  std::string state;
};
struct SizeExceeded {
  std::size_t size = 0;
};
struct Stuck {
  StuckKind kind;
  std::string detail;
};

/// Result of an evaluation. Only `Defined` means the term denotes an element.
class EvalOutcome {
 public:
  using Alt = std::variant<Defined, FuelExhausted, SizeExceeded, Stuck>;

  EvalOutcome(Alt a) : alt_(std::move(a)) {}

  bool defined() const { return std::holds_alternative<Defined>(alt_); }
  bool fuel_exhausted() const { return std::holds_alternative<FuelExhausted>(alt_); }
  bool size_exceeded() const { return std::holds_alternative<SizeExceeded>(alt_); }
  bool stuck() const { return std::holds_alternative<Stuck>(alt_); }
  /// Fuel or size limit: the outcome says nothing about definedness.
  bool resource_limited() const { return fuel_exhausted() || size_exceeded(); }
  /// Stuck on a generic atom: inconclusive, like a resource limit.
  bool inconclusive() const {
    return resource_limited() || (stuck() && std::get<Stuck>(alt_).kind == StuckKind::GenericInspected);
  }

  const Value& value() const { return std::get<Defined>(alt_).value; }
  std::size_t steps() const { return defined() ? std::get<Defined>(alt_).steps : 0; }
  const Stuck& stuck_info() const { return std::get<Stuck>(alt_); }
  const Alt& alt() const { return alt_; }

  std::string describe() const;

 private:
  Alt alt_;
};

enum class Tri { False, True, Unknown };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

/// Raised for precondition violations (unbound variables, lambdas left in a
/// term handed to the evaluator). Partiality is reported through
/// EvalOutcome, never through exceptions.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Env = std::map<std::string, Value>;

const Value& defined_constant(ConstKind k);

class Machine {
 public:
  explicit Machine(FuelConfig cfg = {}) : cfg_(cfg) {}

  EvalOutcome eval(const Term& t, const Env& env = {}) {
    return run([&] { return eval_rec(t, env); });
  }

  EvalOutcome apply(const Value& f, const Value& a) {
    return run([&] { return apply_rec(f, a); });
  }

  EvalOutcome apply_all(const Value& f, std::span<const Value> args) {
    return run([&] {
      Value r = f;
      for (const auto& a : args) r = apply_rec(r, a);
      return r;
    });
  }

  std::size_t steps_used() const { return steps_; }

 private:
  struct FuelSignal {
    std::string state;
  };
  struct SizeSignal {
    std::size_t size;
  };
  struct StuckSignal {
    StuckKind kind;
    std::string detail;
  };

  template <class F>
  EvalOutcome run(F&& body) {
    steps_ = 0;
    try {
      Value v = body();
      return EvalOutcome(Defined{std::move(v), steps_});
    } catch (const FuelSignal& s) {
      return EvalOutcome(FuelExhausted{s.state});
    } catch (const SizeSignal& s) {
      return EvalOutcome(SizeExceeded{s.size});
    } catch (const StuckSignal& s) {
      return EvalOutcome(Stuck{s.kind, s.detail});
    }
  }

  void tick(const Value& head) {
    if (++steps_ > cfg_.max_steps) {
      std::string h = head.is_comb() ? keyword(to_const(head.combinator())) : head.is_num() ? "numeral" : "atom";
      throw FuelSignal{"fuel exhausted after " + std::to_string(cfg_.max_steps) + " steps applying " + h +
                       " with " + std::to_string(head.args().size()) + " args"};
    }
  }

  Value extend(const Value& f, const Value& a) {
    std::size_t s = f.size() + a.size();
    if (s > cfg_.max_value_size) throw SizeSignal{s};
    return f.with_arg(a);
  }

  static const Natural& need_numeral(const Value& v, const char* who) {
    if (v.is_num()) return v.number();
    if (v.is_generic())
      throw StuckSignal{StuckKind::GenericInspected, std::string(who) + " on a generic atom"};
    throw StuckSignal{StuckKind::NonNumeralCase, std::string(who) + " on a non-numeral"};
  }

  Value apply_rec(Value f, Value a) {
    for (;;) {
      tick(f);
      switch (f.kind()) {
        case Value::Kind::Num:
          throw StuckSignal{StuckKind::IllTyped, "numeral applied as a function"};
        case Value::Kind::Opaque:
          if (f.is_generic()) throw StuckSignal{StuckKind::GenericInspected, "generic atom applied"};
          return extend(f, a);
        case Value::Kind::Comb:
          break;
      }
      const auto c = f.combinator();
      const auto& args = f.args();
      if (args.size() + 1 < arity(c)) return extend(f, a);
      switch (c) {
        case Combinator::K:
          return args[0];
        case Combinator::Kbar:
          return a;
        case Combinator::S: {
          Value u = apply_rec(args[0], a);
          Value v = apply_rec(args[1], a);
          f = std::move(u);
          a = std::move(v);
          continue;
        }
        case Combinator::D: {
          const Natural& n = need_numeral(args[0], "D");
          const Natural& m = need_numeral(args[1], "D");
          return n == m ? args[2] : a;
        }
        case Combinator::Succ:
          return Value::num(need_numeral(a, "SUCC") + 1);
        case Combinator::Pred: {
          const Natural& n = need_numeral(a, "PRED");
          if (n == 0) throw StuckSignal{StuckKind::PredZero, "PRED on 0"};
          return Value::num(n - 1);
        }
      }
    }
  }

  Value eval_rec(const Term& t, const Env& env) {
    return std::visit(
        [&](const auto& n) -> Value {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Term::Const>) {
            switch (n.kind) {
              case ConstKind::K: return Value::comb(Combinator::K);
              case ConstKind::S: return Value::comb(Combinator::S);
              case ConstKind::D: return Value::comb(Combinator::D);
              case ConstKind::Succ: return Value::comb(Combinator::Succ);
              case ConstKind::Pred: return Value::comb(Combinator::Pred);
              case ConstKind::Kbar: return Value::comb(Combinator::Kbar);
              default: return defined_constant(n.kind);
            }
          } else if constexpr (std::is_same_v<T, Term::Num>) {
            return Value::num(n.n);
          } else if constexpr (std::is_same_v<T, Term::Var>) {
            auto it = env.find(n.name);
            if (it == env.end()) throw EvalError("unbound variable '" + n.name + "'");
            return it->second;
          } else if constexpr (std::is_same_v<T, Term::App>) {
            Value f = eval_rec(n.fun, env);
            Value a = eval_rec(n.arg, env);
            return apply_rec(std::move(f), std::move(a));
          } else if constexpr (std::is_same_v<T, Term::Opaque>) {
            return n.value ? *n.value : Value::opaque(n.id);
          } else {
            throw EvalError("lambda reached the evaluator; compile the term first");
          }
        },
        t.node());
  }

  FuelConfig cfg_;
  std::size_t steps_ = 0;
};

inline const Value& defined_constant(ConstKind k) {
  auto build = [](ConstKind kind) {
    Machine m;
    auto out = m.eval(pairing_definition(kind));
    if (!out.defined()) throw EvalError("pairing definition failed to evaluate");
    return out.value();
  };
  static const Value p = build(ConstKind::P);
  static const Value p0 = build(ConstKind::P0);
  static const Value p1 = build(ConstKind::P1);
  switch (k) {
    case ConstKind::P: return p;
    case ConstKind::P0: return p0;
    case ConstKind::P1: return p1;
    default: throw EvalError("not a defined constant");
  }
}

inline EvalOutcome eval(const Term& t, const Env& env = {}, FuelConfig cfg = {}) {
  return Machine(cfg).eval(t, env);
}

inline EvalOutcome apply(const Value& f, const Value& a, FuelConfig cfg = {}) {
  return Machine(cfg).apply(f, a);
}

inline EvalOutcome apply_all(const Value& f, std::span<const Value> args, FuelConfig cfg = {}) {
  return Machine(cfg).apply_all(f, args);
}

inline EvalOutcome apply_all(const Value& f, std::initializer_list<Value> args, FuelConfig cfg = {}) {
  return Machine(cfg).apply_all(f, std::span<const Value>(args.begin(), args.size()));
}

/// Kleene equality of closed terms, approximated by fuel: both defined and
/// identical is True, both defined and different is False, both stuck is
/// True (both undefined), anything resource-limited is Unknown.
inline Tri kleene_eq(const Term& t1, const Term& t2, FuelConfig cfg = {}) {
  auto a = eval(t1, {}, cfg);
  auto b = eval(t2, {}, cfg);
  if (a.inconclusive() || b.inconclusive()) return Tri::Unknown;
  if (a.defined() && b.defined()) return a.value() == b.value() ? Tri::True : Tri::False;
  if (a.stuck() && b.stuck()) return Tri::True;
  return Tri::False;
}

inline std::string EvalOutcome::describe() const {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Defined>) return "defined in " + std::to_string(x.steps) + " steps";
        else if constexpr (std::is_same_v<T, FuelExhausted>) return x.state;
        else if constexpr (std::is_same_v<T, SizeExceeded>) return "value size limit exceeded (" + std::to_string(x.size) + " nodes)";
        else return std::string("stuck: ") + to_string(x.kind) + " (" + x.detail + ")";
      },
      alt_);
}

}  // namespace pca
