#pragma once

// Source-level compilation and the fixed-point combinators.

#include "pca/abstraction.hpp"
#include "pca/syntax.hpp"

#include <utility>

namespace pca {

/// Parses `src`, resolving free identifiers through `table`, then compiles
/// away every lambda.
inline Term compile_source(std::string_view src, const TermTable* table = nullptr) {
  return compile(parse_term(src, table));
}

inline Term compile_source(std::string_view src, const TermTable& table) { return compile_source(src, &table); }

/// f := λa.cc with c := λdb.a(dd)b. f a is a value and f a b ≃ a (f a) b.
/// The inner abstraction over b keeps the self-application d d guarded.
inline const Term& fixpoint() {
  static const Term f = compile_source(R"(\a. (\d b. a (d d) b) (\d b. a (d d) b))");
  return f;
}

/// (g, h) with g a b c ≃ a (h a b) c and h a b c ≃ b (g a b) c.
///   t(a,b) := λxc. a (λc. b x c) c
///   g := λab. f t(a,b)
///   h := λab. (λxc. b x c) (g a b)
/// h a b is built by the same abstraction that t(a,b) applies to its x, so
/// the element g a b hands to a is identical to h a b, not just
/// extensionally equal to it.
inline const std::pair<Term, Term>& double_fixpoint() {
  static const std::pair<Term, Term> gh = [] {
    TermTable tab{{"fix", fixpoint()}};
    Term g = compile_source(R"(\a b. fix (\x c. a (\c. b x c) c))", tab);
    tab.emplace("g", g);
    Term h = compile_source(R"(\a b. (\x c. b x c) (g a b))", tab);
    return std::pair<Term, Term>(g, h);
  }();
  return gh;
}

/// r a b 0 ≃ a and r a b (n+1) ≃ b (r a b n) n. The branches of the
/// case split are thunked so only the selected one runs.
inline const Term& primrec() {
  static const Term r = compile_source(
      R"(fix (\self a b n. D n #0 (\_. a) (\_. b (self a b (PRED n)) (PRED n)) K))",
      TermTable{{"fix", fixpoint()}});
  return r;
}

/// add m n = m + n, by recursion on n.
inline const Term& adder() {
  static const Term add = compile_source(R"(\m. r m (\u v. SUCC u))", TermTable{{"r", primrec()}});
  return add;
}

}  // namespace pca
