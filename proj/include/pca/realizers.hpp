#pragma once

// The closed realizer terms: equality, the set-theoretic axioms, internal
// pairing, choice and arrow types. Each entry is kept as source text over
// earlier entries so that variants can be recompiled.

#include "pca/compiler.hpp"
#include "pca/machine.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pca {

/// Lazy pair: projections evaluate only the selected component.
inline std::string lazy_pair(std::string_view x, std::string_view y) {
  return "(\\lp_s. lp_s (\\lp_u. " + std::string(x) + ") (\\lp_u. " + std::string(y) + ") K)";
}

/// Case split on numerals that runs only the selected branch.
inline std::string if_eq(std::string_view n, std::string_view m, std::string_view yes, std::string_view no) {
  return "(D (" + std::string(n) + ") (" + std::string(m) + ") (\\if_t. " + std::string(yes) + ") (\\if_t. " +
         std::string(no) + ") K)";
}

struct RealizerInfo {
  std::string id;
  std::string group;
  std::string summary;
  std::string source;  // empty for the built-in fixed points
};

namespace detail {

inline std::vector<RealizerInfo> make_catalog() {
  std::vector<RealizerInfo> c;
  auto add = [&](std::string id, std::string group, std::string summary, std::string src) {
    c.push_back({std::move(id), std::move(group), std::move(summary), std::move(src)});
  };
  add("fix", "combinators", "f a b ~ a (f a) b", "");
  add("dfix.g", "combinators", "g a b c ~ a (h a b) c", "");
  add("dfix.h", "combinators", "h a b c ~ b (g a b) c", "");
  add("primrec", "combinators", "r a b 0 ~ a, r a b (n+1) ~ b (r a b n) n", "");
  add("add", "combinators", "add m n ~ m + n", "");

  add("i_r", "equality", "x = x", R"(fix (\self a. P (P a self) (P a self)))");
  add("i_s", "equality", "x = y => y = x", R"(\a c. P (P1 (a c)) (P0 (a c)))");
  add("isym", "equality", "x = y => y = x, lazily", R"(\x c. )" + lazy_pair("P1 (x c)", "P0 (x c)"));
  // i_t ⊩ x = y ∧ y = z ⟹ x = z and i_0 ⊩ x = y ∧ y ∈ z ⟹ x ∈ z, solved
  // together by double recursion: i_t ≃ T i_0, i_0 ≃ R i_t.
  add("eq.T", "equality", "step for i_t",
      R"(\i0 a c. )" + lazy_pair("i0 (P (P1 (P0 (P0 a c))) (P0 (P1 a (P0 (P0 (P0 a c))))))",
                                  "i0 (P (P1 (P1 (P1 a c))) (P1 (P0 a (P0 (P1 (P1 a c))))))"));
  add("eq.R", "equality", "step for i_0", R"(\it a. P (P0 (P1 a)) (it (P (P0 a) (P1 (P1 a)))))");
  add("i_t", "equality", "x = y /\\ y = z => x = z", "dfix.g eq.T eq.R");
  add("i_0", "equality", "x = y /\\ y in z => x in z", "dfix.h eq.T eq.R");
  add("i_1", "equality", "y = z /\\ x in y => x in z",
      R"(\a. P (P0 (P0 (P0 a (P0 (P1 a))))) (i_t (P (P1 (P1 a)) (P1 (P0 (P0 a (P0 (P1 a))))))))");
  add("i", "equality", "z = y0 /\\ z = y1 => y0 = y1", R"(\q. i_t (P (i_s (P0 q)) (P1 q)))");

  add("ax.ext", "axioms", "ALL z. (z in x <=> z in y) => x = y",
      R"(\a c. )" + lazy_pair("P0 a (P c i_r)", "P1 a (P c i_r)"));
  add("ax.pairing", "axioms", "x in z /\\ y in z", "P (P #0 i_r) (P #0 i_r)");
  add("ax.union", "axioms", "all u in x. all v in u. v in y", R"(\a c. P c i_r)");
  add("ax.inf.e0", "axioms", "y in omega => theta(y)",
      R"(\a. )" +
          if_eq("#0", "P0 a", "P #0 #0",
                "P #1 (let m = PRED (P0 a) in P m (P (\\c. D (P0 (P0 (P1 a c))) m (P #1 (P1 (P0 (P1 a c)))) "
                "(P #0 (P0 (P1 a c)))) (P (\\x. P1 (P1 a x)) (P1 (P1 a m)))))"));
  add("ax.inf.e1", "axioms", "theta(y) => y in omega",
      R"(\a. )" +
          if_eq("#0", "P0 a", "P (P0 a) i_r",
                "P (SUCC (P0 (P1 a))) (\\c. " +
                    lazy_pair("D #0 (P0 (P0 (P1 (P1 a)) c)) (P1 (P0 (P1 (P1 a)) c)) "
                              "(P (P0 (P1 a)) (P1 (P0 (P1 (P1 a)) c)))",
                              if_eq("c", "P0 (P1 a)", "P1 (P1 (P1 (P1 a)))", "P0 (P1 (P1 (P1 a))) c")) +
                    ")"));
  add("ax.inf", "axioms", "ALL y. y in omega <=> theta(y)", "P ax.inf.e0 ax.inf.e1");
  add("ax.setind", "axioms", "ALL x. (all y in x. phi(y) => phi(x)) => ALL x. phi(x)",
      R"(fix (\self a. a (\c. self a)))");
  add("ax.sep.e0", "axioms", "all u in y. u in x /\\ phi(u)", R"(\f. P (P (P0 f) i_r) (P1 f))");
  add("ax.sep.e1", "axioms", "all u in x. phi(u) => u in y", R"(\a c. P (P a c) i_r)");
  add("ax.sep", "axioms", "bounded separation", "P ax.sep.e0 ax.sep.e1");
  add("ax.scoll", "axioms", "strong collection", R"(\a. P (\c. P c (a c)) (\c. P c (a c)))");
  add("ax.sscoll", "axioms", "subset collection",
      R"(\a. P #0 (P (\c. P (P a c) (P1 (a c))) (\f. P (P1 f) (P1 (P0 f (P1 f))))))");
  add("ax.power", "axioms", "z sub x => z in y", R"(\a. P a i_r)");

  add("pair.u0", "pairing", "UP(x, x, {x})", R"(P (P #0 i_r) (P (P #0 i_r) (\c. P #0 i_r)))");
  add("pair.u1", "pairing", "UP(x, y, {x, y})", R"(P (P #0 i_r) (P (P #1 i_r) (\c. P c i_r)))");
  add("pair.v", "pairing", "OP(x, y, <x, y>)",
      R"(P (P #0 pair.u0) (P (P #1 pair.u1) (\c. P c (D c #0 pair.u0 pair.u1))))");
  // Q0 R ⊩ w = {x} from R ⊩ UP(x, x, w); Q1 R ⊩ w = {x, y} from R ⊩ UP(x, y, w).
  add("pair.Q0", "pairing", "UP(x, x, w) => w = {x}",
      R"(\R c. )" + lazy_pair("P #0 (P1 (P1 (P1 R) c))", "P0 R"));
  add("pair.Q1", "pairing", "UP(x, y, w) => w = {x, y}",
      R"(\R c. )" + lazy_pair("P1 (P1 R) c", "D c #0 (P0 R) (P0 (P1 R))"));
  add("pair.z", "pairing", "OP(x, y, z) => z = <x, y>",
      R"(\a c. )" +
          lazy_pair("let t = P0 (P1 (P1 a) c) in let R = P1 (P1 (P1 a) c) in P t (D t #0 (pair.Q0 R) (pair.Q1 R))",
                    "D c #0 (P (P0 (P0 a)) (isym (pair.Q0 (P1 (P0 a))))) "
                    "(P (P0 (P0 (P1 a))) (isym (pair.Q1 (P1 (P0 (P1 a))))))"));
  add("pair.w", "pairing", "<x, y> = <u, v> => x = u /\\ y = v",
      R"(\a.
        let Ux = P1 (P1 (P1 (P0 (a #0)) #0)) in
        let G1 = P0 (P1 (P0 (a #1)) #1) in
        let l = P0 G1 in let Ry = P1 G1 in
        let k = P0 (P1 (a #1)) in
        let F1 = P0 (P1 (P1 (a #1)) #1) in
        let j = P0 F1 in let Rv = P1 F1 in
        let chain = i_t (P Ry (i_t (P Ux (isym Rv)))) in
        P (isym Ux) (D l #1 Ry (D k #1 (D j #1 (isym Rv) chain) chain)))");

  add("choice", "choice", "all x in F s. ex y in F t. phi(x, y) => choice function",
      R"(\a. P (\c. P c (P (P0 (a c)) pair.v))
               (P (\c. P (P0 (a c)) (P c (P pair.v (P1 (a c)))))
                  (\c0 c1 g. i (P (P1 (pair.w (pair.z (P0 g)))) (P1 (pair.w (pair.z (P1 g))))))))");
  add("arrow.e0", "choice", "all f in F st. f : F s -> F t",
      R"(\a. P (\c. P c (P (a c) pair.v))
               (P (\x. P (a x) (P x pair.v))
                  (\c0 c1 g. i (P (P1 (pair.w (pair.z (P0 g)))) (P1 (pair.w (pair.z (P1 g))))))))");
  add("arrow.e1", "choice", "f : F s -> F t => f in F st",
      R"(\a. P (\c. P0 (P0 (P1 a) c))
               (\c. )" +
          lazy_pair("P (P0 (P0 a c)) (pair.z (P1 (P1 (P0 a c))))",
                    "P (P0 (P1 (P0 (P1 a) c))) (i_s (pair.z (P1 (P1 (P0 (P1 a) c)))))") +
          ")");
  add("arrow", "choice", "F st = F s -> F t", "P arrow.e0 arrow.e1");
  return c;
}

class Library {
 public:
  static Library& instance() {
    static Library lib;
    return lib;
  }

  const std::vector<RealizerInfo>& catalog() const { return catalog_; }
  const TermTable& table() const { return table_; }

  const RealizerInfo& info(std::string_view id) const {
    for (const auto& r : catalog_)
      if (r.id == id) return r;
    throw std::out_of_range("unknown realizer: " + std::string(id));
  }

  const Value& value(std::string_view id) const {
    auto it = values_.find(std::string(id));
    if (it == values_.end()) throw std::out_of_range("unknown realizer: " + std::string(id));
    return it->second;
  }

  const Term& term(std::string_view id) const {
    auto it = terms_.find(std::string(id));
    if (it == terms_.end()) throw std::out_of_range("unknown realizer: " + std::string(id));
    return it->second;
  }

  Value compile_value(std::string_view src) const {
    Term t = compile_source(src, table_);
    auto out = eval(t);
    if (!out.defined()) throw EvalError("realizer source does not evaluate: " + out.describe());
    return out.value();
  }

 private:
  Library() : catalog_(make_catalog()) {
    for (const auto& r : catalog_) {
      Term t = r.id == "fix"       ? fixpoint()
               : r.id == "dfix.g"  ? double_fixpoint().first
               : r.id == "dfix.h"  ? double_fixpoint().second
               : r.id == "primrec" ? primrec()
               : r.id == "add"     ? adder()
                                   : compile_source(r.source, table_);
      auto out = eval(t);
      if (!out.defined()) throw EvalError("realizer " + r.id + " does not evaluate: " + out.describe());
      terms_.emplace(r.id, t);
      values_.emplace(r.id, out.value());
      table_.emplace(r.id, Term::quote(out.value()));
    }
  }

  std::vector<RealizerInfo> catalog_;
  TermTable table_;
  std::map<std::string, Term> terms_;
  std::map<std::string, Value> values_;
};

}  // namespace detail

inline const std::vector<RealizerInfo>& realizer_catalog() { return detail::Library::instance().catalog(); }

/// The evaluated realizer with the given id.
inline const Value& realizer(std::string_view id) { return detail::Library::instance().value(id); }

/// The compiled combinator term of a realizer.
inline const Term& realizer_term(std::string_view id) { return detail::Library::instance().term(id); }

inline const std::string& realizer_source(std::string_view id) { return detail::Library::instance().info(id).source; }

/// Every realizer id usable as a free identifier in term sources.
inline const TermTable& realizer_table() { return detail::Library::instance().table(); }

/// Compiles and evaluates `src` with library ids in scope.
inline Value library_value(std::string_view src) { return detail::Library::instance().compile_value(src); }

inline const Term& i_r_term() { return realizer_term("i_r"); }

struct EqRealizers {
  Value i_r, i_s, i_t, i_0, i_1;
};

inline EqRealizers eq_realizers() {
  return {realizer("i_r"), realizer("i_s"), realizer("i_t"), realizer("i_0"), realizer("i_1")};
}

struct PairingRealizers {
  Value u0, u1, v, w, z;
};

inline PairingRealizers pairing_realizers() {
  return {realizer("pair.u0"), realizer("pair.u1"), realizer("pair.v"), realizer("pair.w"), realizer("pair.z")};
}

/// The choice realizer does not depend on the types; they are accepted to
/// mirror the statement.
template <class Type>
inline const Value& choice_realizer(const Type&, const Type&) {
  return realizer("choice");
}

template <class Type>
inline const Value& arrow_realizer(const Type&, const Type&) {
  return realizer("arrow");
}

}  // namespace pca
