#pragma once

// A second, direct transcription of the realizability clauses for finite
// names, used to cross-check the production checker. Two-valued: any
// undefined application counts as failure.

#include "pca/formula.hpp"
#include "pca/gen.hpp"
#include "pca/machine.hpp"
#include "pca/realizability.hpp"

#include <optional>

namespace pca::reference {

inline std::optional<Value> ap(const Value& f, const Value& x, const FuelConfig& cfg) {
  auto o = apply(f, x, cfg);
  if (o.defined()) return o.value();
  return std::nullopt;
}

inline std::optional<Value> pr(const Value& v, int i, const FuelConfig& cfg) {
  return ap(defined_constant(i ? ConstKind::P1 : ConstKind::P0), v, cfg);
}

/// Triples of a finite name via its constructors' definitions.
inline std::vector<VName::Triple> members(const VName& x) {
  std::vector<VName::Triple> out;
  switch (x.kind()) {
    case VName::Kind::Explicit: return x.triples();
    case VName::Kind::Nat:
      for (Natural m = 0; m < x.n(); ++m) out.push_back({Value::num(m), Value::num(m), VName::nat(m)});
      return out;
    case VName::Kind::Sing: return {{numeral(0), numeral(0), x.left()}};
    case VName::Kind::UPair: return {{numeral(0), numeral(0), x.left()}, {numeral(1), numeral(1), x.right()}};
    case VName::Kind::OPair:
      return {{numeral(0), numeral(0), VName::sing(x.left())},
              {numeral(1), numeral(1), VName::upair(x.left(), x.right())}};
    default: throw std::invalid_argument("reference: infinite name");
  }
}

inline bool realizes(const Value& a, const Value& b, const Formula& f, const FuelConfig& cfg = {}) {
  using K = Formula::Kind;
  auto both = [&](int i) -> std::optional<std::pair<Value, Value>> {
    auto x = pr(a, i, cfg), y = pr(b, i, cfg);
    if (!x || !y) return std::nullopt;
    return std::make_pair(*x, *y);
  };
  switch (f.kind()) {
    case K::Mem: {
      auto k = both(0), r = both(1);
      if (!k || !r) return false;
      for (const auto& t : members(f.y().name()))
        if (t.a == k->first && t.b == k->second && realizes(r->first, r->second, Formula::eq(f.x(), t.y), cfg))
          return true;
      return false;
    }
    case K::Eq: {
      for (int side = 0; side < 2; ++side) {
        const VName& from = side ? f.y().name() : f.x().name();
        const VName& into = side ? f.x().name() : f.y().name();
        for (const auto& t : members(from)) {
          auto c = ap(a, t.a, cfg), d = ap(b, t.b, cfg);
          if (!c || !d) return false;
          auto c1 = pr(*c, side, cfg), d1 = pr(*d, side, cfg);
          if (!c1 || !d1 || !realizes(*c1, *d1, Formula::mem(t.y, into), cfg)) return false;
        }
      }
      return true;
    }
    case K::And: {
      auto l = both(0), r = both(1);
      return l && r && realizes(l->first, l->second, f.left(), cfg) && realizes(r->first, r->second, f.right(), cfg);
    }
    case K::Or: {
      auto tag = both(0), r = both(1);
      if (!tag || !r || !(tag->first == tag->second)) return false;
      if (tag->first == numeral(0)) return realizes(r->first, r->second, f.left(), cfg);
      if (tag->first == numeral(1)) return realizes(r->first, r->second, f.right(), cfg);
      return false;
    }
    case K::AllIn: {
      for (const auto& t : members(f.bound().name())) {
        auto c = ap(a, t.a, cfg), d = ap(b, t.b, cfg);
        if (!c || !d || !realizes(*c, *d, substitute(f.body(), f.var(), t.y), cfg)) return false;
      }
      return true;
    }
    case K::ExIn: {
      auto k = both(0), r = both(1);
      if (!k || !r) return false;
      for (const auto& t : members(f.bound().name()))
        if (t.a == k->first && t.b == k->second &&
            realizes(r->first, r->second, substitute(f.body(), f.var(), t.y), cfg))
          return true;
      return false;
    }
    default: throw std::invalid_argument("reference: clause outside the finite fragment");
  }
}

/// Random positive formula over the given finite names, with bounded
/// quantifiers over them.
inline Formula random_formula(Rng& rng, const std::vector<VName>& pool, int size, std::vector<std::string> scope = {}) {
  auto ref = [&]() -> NameRef {
    if (!scope.empty() && uniform(rng, 2)) return NameRef(scope[uniform(rng, scope.size())]);
    return NameRef(pool[uniform(rng, pool.size())]);
  };
  auto lit = [&]() { return NameRef(pool[uniform(rng, pool.size())]); };
  switch (size <= 0 ? uniform(rng, 2) : uniform(rng, 6)) {
    case 0: return Formula::mem(ref(), ref());
    case 1: return Formula::eq(ref(), ref());
    case 2: return Formula::conj(random_formula(rng, pool, size - 1, scope), random_formula(rng, pool, size - 1, scope));
    case 3: return Formula::disj(random_formula(rng, pool, size - 1, scope), random_formula(rng, pool, size - 1, scope));
    default: {
      std::string v = "v" + std::to_string(scope.size());
      auto inner = scope;
      inner.push_back(v);
      Formula body = random_formula(rng, pool, size - 1, inner);
      return uniform(rng, 2) ? Formula::all_in(v, lit(), body) : Formula::ex_in(v, lit(), body);
    }
  }
}

/// A candidate realizer shaped after the clauses of `f`; right roughly
/// half of the time.
inline Value candidate(Rng& rng, const Formula& f) {
  using K = Formula::Kind;
  auto pair = [](const Value& x, const Value& y) { return detail::pair_value(x, y); };
  auto konst = [](const Value& x) { return Value::comb(Combinator::K).with_arg(x); };
  switch (f.kind()) {
    case K::Eq:
      if (uniform(rng, 4)) return realizer("i_r");
      return uniform(rng, 2) ? konst(pair(random_value(rng, 1, false), random_value(rng, 1, false)))
                             : random_value(rng, 2, false);
    case K::Mem: {
      auto ts = members(f.y().name());
      if (ts.empty() || uniform(rng, 5) == 0) return pair(numeral(uniform(rng, 3)), realizer("i_r"));
      const auto& t = ts[uniform(rng, ts.size())];
      return pair(t.a, candidate(rng, Formula::eq(f.x(), t.y)));
    }
    case K::And: return pair(candidate(rng, f.left()), candidate(rng, f.right()));
    case K::Or: {
      unsigned tag = uniform(rng, 7) == 0 ? 2 : static_cast<unsigned>(uniform(rng, 2));
      return pair(numeral(tag), candidate(rng, tag == 1 ? f.right() : f.left()));
    }
    case K::AllIn: {
      auto ts = members(f.bound().name());
      if (ts.empty()) return konst(numeral(0));
      return konst(candidate(rng, substitute(f.body(), f.var(), ts[uniform(rng, ts.size())].y)));
    }
    case K::ExIn: {
      auto ts = members(f.bound().name());
      if (ts.empty()) return pair(numeral(0), numeral(0));
      const auto& t = ts[uniform(rng, ts.size())];
      return pair(t.a, candidate(rng, substitute(f.body(), f.var(), t.y)));
    }
    default: return numeral(0);
  }
}

struct CrossCheck {
  std::size_t instances = 0, agreements = 0, realized = 0;
  std::vector<std::string> disagreements;
};

/// `n` random (pair, formula) instances over explicit names of rank ≤ 2.
inline CrossCheck cross_check(std::uint64_t seed, std::size_t n) {
  Rng rng(seed);
  CrossCheck out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<VName> pool;
    for (int k = 0; k < 3; ++k) pool.push_back(random_finite_name(rng, 1 + uniform(rng, 2), uniform(rng, 2)));
    Formula f = random_formula(rng, pool, 2);
    Value a = candidate(rng, f);
    Value b = uniform(rng, 5) == 0 ? candidate(rng, f) : a;
    bool expected = realizes(a, b, f);
    Verdict v = check({a, b}, f);
    ++out.instances;
    bool agree = expected ? v.realized() : v.refuted();
    if (agree) ++out.agreements;
    else out.disagreements.push_back(to_string(f) + " expected " + (expected ? "realized" : "refuted") + " got " +
                                     to_string(v.status));
    if (expected) ++out.realized;
  }
  return out;
}

}  // namespace pca::reference
