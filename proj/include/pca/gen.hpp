#pragma once

// Seeded random generators for property tests and suites.

#include "pca/formula.hpp"
#include "pca/names.hpp"
#include "pca/term.hpp"
#include "pca/value.hpp"

#include <random>
#include <string>
#include <vector>

namespace pca {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

/// Random canonical value of bounded depth: numerals, atoms, and
/// under-applied K, KBAR, S, D, SUCC. Without `with_s` no S node appears,
/// so the value never calls its argument.
inline Value random_value(Rng& rng, int depth = 2, bool with_s = true) {
  auto leaf = [&]() -> Value {
    switch (uniform(rng, 8)) {
      case 0: case 1: case 2: return numeral(uniform(rng, 6));
      case 3: return Value::opaque(std::string(1, static_cast<char>('a' + uniform(rng, 4))));
      case 4: return Value::comb(Combinator::K);
      case 5: return Value::comb(Combinator::Kbar);
      case 6: return Value::comb(Combinator::Succ);
      default: return Value::comb(Combinator::D);
    }
  };
  if (depth <= 0 || uniform(rng, 3) == 0) return leaf();
  std::size_t pick = uniform(rng, 6);
  if (!with_s && (pick == 1 || pick == 2)) pick = 0;
  switch (pick) {
    case 0: return Value::comb(Combinator::K).with_arg(random_value(rng, depth - 1, with_s));
    case 1: return Value::comb(Combinator::S).with_arg(random_value(rng, depth - 1, with_s));
    case 2:
      return Value::comb(Combinator::S).with_arg(random_value(rng, depth - 1, with_s)).with_arg(random_value(rng, depth - 1, with_s));
    case 3: return Value::comb(Combinator::D).with_arg(numeral(uniform(rng, 4)));
    case 4:
      return Value::comb(Combinator::D).with_arg(numeral(uniform(rng, 4))).with_arg(numeral(uniform(rng, 4)));
    default:
      return Value::comb(Combinator::D)
          .with_arg(numeral(uniform(rng, 4)))
          .with_arg(numeral(uniform(rng, 4)))
          .with_arg(random_value(rng, depth - 1, with_s));
  }
}

/// Random lambda-free term with exactly `size` leaves-or-applications
/// budget, over primitive constants, small numerals and `vars`.
inline Term random_term(Rng& rng, std::size_t size, const std::vector<std::string>& vars) {
  if (size <= 1) {
    std::size_t pick = uniform(rng, 9 + 2 * vars.size());
    switch (pick) {
      case 0: return K();
      case 1: return S();
      case 2: return Term::constant(ConstKind::Kbar);
      case 3: return Term::constant(ConstKind::D);
      case 4: return Term::constant(ConstKind::Succ);
      case 5: return Term::constant(ConstKind::P);
      case 6: case 7: case 8: return Term::num(static_cast<unsigned long long>(uniform(rng, 4)));
      default: return Term::var(vars[(pick - 9) % vars.size()]);
    }
  }
  std::size_t left = 1 + uniform(rng, size - 1);
  if (left + 1 > size) left = size - 1;
  std::size_t right = size - 1 - left;
  if (right == 0) return random_term(rng, size - 1, vars);
  return Term::app(random_term(rng, left, vars), random_term(rng, right, vars));
}

/// Random finite name of rank at most `rank`. With `explicit_only` every
/// node is an explicit triple set; otherwise numeral names and the
/// singleton/pair constructors are mixed in. Keys are S-free values.
inline VName random_finite_name(Rng& rng, std::size_t rank, bool explicit_only = false) {
  if (rank == 0) return VName::explicit_set({});
  if (!explicit_only) {
    switch (uniform(rng, 6)) {
      case 0: return VName::nat(uniform(rng, rank + 1));
      case 1: return VName::sing(random_finite_name(rng, rank - 1));
      case 2: return VName::upair(random_finite_name(rng, rank - 1), random_finite_name(rng, rank - 1));
      case 3:
        if (rank >= 2) return VName::opair(random_finite_name(rng, rank - 2), random_finite_name(rng, rank - 2));
        break;
      default: break;
    }
  }
  std::vector<VName::Triple> ts;
  std::size_t n = uniform(rng, 4);
  for (std::size_t i = 0; i < n; ++i) {
    Value a = uniform(rng, 2) ? numeral(uniform(rng, 3)) : random_value(rng, 1, false);
    Value b = uniform(rng, 3) ? a : random_value(rng, 1, false);
    ts.push_back({a, b, random_finite_name(rng, rank - 1, explicit_only)});
  }
  return VName::explicit_set(std::move(ts));
}

/// Random closed sentence of bounded arithmetic: atoms over ṅ (n ≤ `max_num`)
/// and ω̇, connectives, and bounded quantifiers over ṅ nested at most
/// `depth` deep.
inline Formula random_arith_sentence(Rng& rng, int depth, unsigned max_num = 5,
                                     std::vector<std::string> scope = {}, int size = 3) {
  auto ref = [&](bool allow_omega) -> NameRef {
    std::size_t k = uniform(rng, 10);
    if (!scope.empty() && k < 4) return NameRef(scope[uniform(rng, scope.size())]);
    if (allow_omega && k == 4) return NameRef(VName::omega());
    return NameRef(VName::nat(uniform(rng, max_num + 1)));
  };
  std::size_t pick = uniform(rng, size <= 0 ? 2 : 8);
  switch (pick) {
    case 0: return Formula::mem(ref(false), ref(true));
    case 1: return Formula::eq(ref(false), ref(false));
    case 2: return Formula::conj(random_arith_sentence(rng, depth, max_num, scope, size - 1),
                                 random_arith_sentence(rng, depth, max_num, scope, size - 1));
    case 3: return Formula::disj(random_arith_sentence(rng, depth, max_num, scope, size - 1),
                                 random_arith_sentence(rng, depth, max_num, scope, size - 1));
    case 4: return Formula::imp(random_arith_sentence(rng, depth, max_num, scope, size - 1),
                                random_arith_sentence(rng, depth, max_num, scope, size - 1));
    case 5: return Formula::neg(random_arith_sentence(rng, depth, max_num, scope, size - 1));
    default: {
      if (depth <= 0) return Formula::mem(ref(false), ref(true));
      std::string v = "x" + std::to_string(scope.size());
      NameRef bound(VName::nat(uniform(rng, max_num + 1)));
      auto inner = scope;
      inner.push_back(v);
      Formula body = random_arith_sentence(rng, depth - 1, max_num, inner, size - 1);
      return pick == 6 ? Formula::all_in(v, bound, body) : Formula::ex_in(v, bound, body);
    }
  }
}

}  // namespace pca
