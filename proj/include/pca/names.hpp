#pragma once

// The finite/schematic fragment of the realizability universe: names as
// sets of triples <a, b, y>, finite types, the hereditarily extensional
// equalities =_σ and internalization of typed elements.

#include "pca/compiler.hpp"
#include "pca/machine.hpp"
#include "pca/syntax.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pca {

class FinType {
 public:
  static FinType o() { return FinType(nullptr); }
  static FinType arrow(FinType dom, FinType cod);

  bool is_o() const { return node_ == nullptr; }
  const FinType& dom() const;
  const FinType& cod() const;

  std::size_t level() const { return is_o() ? 0 : std::max(dom().level() + 1, cod().level()); }

  friend bool operator==(const FinType& a, const FinType& b) {
    if (a.is_o() || b.is_o()) return a.is_o() == b.is_o();
    return a.dom() == b.dom() && a.cod() == b.cod();
  }
  friend bool operator!=(const FinType& a, const FinType& b) { return !(a == b); }

 private:
  struct Node;
  explicit FinType(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct FinType::Node {
  FinType dom, cod;
};

inline FinType FinType::arrow(FinType dom, FinType cod) {
  return FinType(std::make_shared<const Node>(Node{std::move(dom), std::move(cod)}));
}
inline const FinType& FinType::dom() const { return node_->dom; }
inline const FinType& FinType::cod() const { return node_->cod; }

/// `o` and `(σ)τ`.
inline std::string to_string(const FinType& t) {
  if (t.is_o()) return "o";
  return "(" + to_string(t.dom()) + ")" + to_string(t.cod());
}

inline FinType parse_type(Scanner& s) {
  if (s.accept("(")) {
    FinType d = parse_type(s);
    s.expect(")");
    FinType c = parse_type(s);
    return FinType::arrow(d, c);
  }
  if (s.peek_ident(false) == "o") {
    s.ident(false);
    return FinType::o();
  }
  s.fail("expected a finite type ('o' or '(σ)τ')");
}

inline FinType parse_type(std::string_view src) {
  Scanner s(src);
  FinType t = parse_type(s);
  if (!s.at_end()) s.fail("unexpected trailing input after type");
  return t;
}

struct EnumBudget {
  std::size_t max_index = 8;
  std::size_t generators_per_type = 6;
};

class VName {
 public:
  enum class Kind { Explicit, Nat, Omega, Sing, UPair, OPair, TypeName, Internal, Graph };
  struct Triple;

  static VName explicit_set(std::vector<Triple> triples);
  static VName nat(Natural n);
  static VName nat(unsigned long long n) { return nat(Natural(n)); }
  static VName omega();
  static VName sing(VName x);
  static VName upair(VName x, VName y);
  static VName opair(VName x, VName y);
  static VName type_name(FinType s);
  /// ȧ^σ. At type o the name is folded to the numeral name, so a must be
  /// a numeral there.
  static VName internal(Value a, FinType s);
  static VName graph(Value a, FinType s, FinType t);

  Kind kind() const;
  const std::vector<Triple>& triples() const;
  const Natural& n() const;
  const VName& left() const;
  const VName& right() const;
  const FinType& type() const;
  const FinType& cod_type() const;
  const Value& value() const;

  bool same_node(const VName& o) const { return node_ == o.node_; }

 private:
  struct Node;
  explicit VName(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct VName::Triple {
  Value a, b;
  VName y;
};

bool operator==(const VName& x, const VName& y);
inline bool operator!=(const VName& x, const VName& y) { return !(x == y); }

inline bool operator==(const VName::Triple& s, const VName::Triple& t) { return s.a == t.a && s.b == t.b && s.y == t.y; }

struct VName::Node {
  Kind kind = Kind::Omega;
  std::vector<Triple> triples;
  Natural n;
  std::vector<VName> kids;
  FinType s = FinType::o(), t = FinType::o();
  std::optional<Value> a;
};

inline VName VName::explicit_set(std::vector<Triple> triples) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Explicit;
  for (auto& tr : triples)
    if (std::find(node->triples.begin(), node->triples.end(), tr) == node->triples.end())
      node->triples.push_back(std::move(tr));
  return VName(std::move(node));
}

inline VName VName::nat(Natural n) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Nat;
  node->n = std::move(n);
  return VName(std::move(node));
}

inline VName VName::omega() {
  static const VName w = [] {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Omega;
    return VName(std::move(node));
  }();
  return w;
}

inline VName VName::sing(VName x) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Sing;
  node->kids = {std::move(x)};
  return VName(std::move(node));
}

inline VName VName::upair(VName x, VName y) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::UPair;
  node->kids = {std::move(x), std::move(y)};
  return VName(std::move(node));
}

inline VName VName::opair(VName x, VName y) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::OPair;
  node->kids = {std::move(x), std::move(y)};
  return VName(std::move(node));
}

inline VName VName::type_name(FinType s) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::TypeName;
  node->s = std::move(s);
  return VName(std::move(node));
}

inline VName VName::internal(Value a, FinType s) {
  if (s.is_o()) {
    if (!a.is_num()) throw std::invalid_argument("internalize: element of type o must be a numeral, got " + to_string(a));
    return nat(a.number());
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Internal;
  node->a = std::move(a);
  node->s = std::move(s);
  return VName(std::move(node));
}

inline VName VName::graph(Value a, FinType s, FinType t) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Graph;
  node->a = std::move(a);
  node->s = std::move(s);
  node->t = std::move(t);
  return VName(std::move(node));
}

inline VName::Kind VName::kind() const { return node_->kind; }
inline const std::vector<VName::Triple>& VName::triples() const { return node_->triples; }
inline const Natural& VName::n() const { return node_->n; }
inline const VName& VName::left() const { return node_->kids.at(0); }
inline const VName& VName::right() const { return node_->kids.at(1); }
inline const FinType& VName::type() const { return node_->s; }
inline const FinType& VName::cod_type() const { return node_->t; }
inline const Value& VName::value() const { return *node_->a; }

inline bool operator==(const VName& x, const VName& y) {
  if (x.same_node(y)) return true;
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case VName::Kind::Explicit: return x.triples() == y.triples();
    case VName::Kind::Nat: return x.n() == y.n();
    case VName::Kind::Omega: return true;
    case VName::Kind::Sing: return x.left() == y.left();
    case VName::Kind::UPair:
    case VName::Kind::OPair: return x.left() == y.left() && x.right() == y.right();
    case VName::Kind::TypeName: return x.type() == y.type();
    case VName::Kind::Internal: return x.value() == y.value() && x.type() == y.type();
    case VName::Kind::Graph:
      return x.value() == y.value() && x.type() == y.type() && x.cod_type() == y.cod_type();
  }
  return false;
}

/// Finite names expand to finitely many triples, each again finite.
inline bool is_finite(const VName& x) {
  switch (x.kind()) {
    case VName::Kind::Explicit:
      return std::all_of(x.triples().begin(), x.triples().end(), [](const auto& t) { return is_finite(t.y); });
    case VName::Kind::Nat: return true;
    case VName::Kind::Sing: return is_finite(x.left());
    case VName::Kind::UPair:
    case VName::Kind::OPair: return is_finite(x.left()) && is_finite(x.right());
    default: return false;
  }
}

/// Set-theoretic rank of a finite name (0 for the empty set).
inline std::size_t rank(const VName& x) {
  switch (x.kind()) {
    case VName::Kind::Explicit: {
      std::size_t r = 0;
      for (const auto& t : x.triples()) r = std::max(r, rank(t.y) + 1);
      return r;
    }
    case VName::Kind::Nat: return x.n().convert_to<std::size_t>();
    case VName::Kind::Sing: return rank(x.left()) + 1;
    case VName::Kind::UPair: return std::max(rank(x.left()), rank(x.right())) + 1;
    case VName::Kind::OPair: return std::max(rank(x.left()), rank(x.right())) + 2;
    default: throw std::invalid_argument("rank: name is not finite");
  }
}

inline std::string to_string(const VName& x);

namespace detail {

inline std::string name_atom(const VName& x) {
  std::string s = to_string(x);
  bool simple = x.kind() == VName::Kind::Explicit || x.kind() == VName::Kind::Omega;
  return simple ? s : "(" + s + ")";
}

}  // namespace detail

/// Surface syntax: `nat 3`, `omega`, `sing N`, `upair N M`, `opair N M`,
/// `F σ`, `int t : σ`, `graph t : σ -> τ`, `{ (t1, t2, N); ... }`.
inline std::string to_string(const VName& x) {
  switch (x.kind()) {
    case VName::Kind::Explicit: {
      if (x.triples().empty()) return "{}";
      std::string s = "{ ";
      for (std::size_t i = 0; i < x.triples().size(); ++i) {
        const auto& t = x.triples()[i];
        if (i) s += "; ";
        s += "(" + to_string(t.a) + ", " + to_string(t.b) + ", " + to_string(t.y) + ")";
      }
      return s + " }";
    }
    case VName::Kind::Nat: return "nat " + x.n().str();
    case VName::Kind::Omega: return "omega";
    case VName::Kind::Sing: return "sing " + detail::name_atom(x.left());
    case VName::Kind::UPair: return "upair " + detail::name_atom(x.left()) + " " + detail::name_atom(x.right());
    case VName::Kind::OPair: return "opair " + detail::name_atom(x.left()) + " " + detail::name_atom(x.right());
    case VName::Kind::TypeName: return "F " + to_string(x.type());
    case VName::Kind::Internal: return "int (" + to_string(x.value()) + ") : " + to_string(x.type());
    case VName::Kind::Graph:
      return "graph (" + to_string(x.value()) + ") : " + to_string(x.type()) + " -> " + to_string(x.cod_type());
  }
  return "?";
}

inline std::ostream& operator<<(std::ostream& os, const VName& x) { return os << to_string(x); }
inline std::ostream& operator<<(std::ostream& os, const FinType& t) { return os << to_string(t); }

// ---------------------------------------------------------------------------
// HEO: sampled =_σ and generators of A_σ.

struct TypeEq {
  Tri result = Tri::Unknown;
  std::size_t passed = 0;   // sampled argument pairs that agreed
  std::size_t samples = 0;  // sampled argument pairs tried
  std::string witness;      // first disagreement, if any
};

std::vector<Value> gen_elems(const FinType& s, const EnumBudget& budget);

namespace detail {

inline Value compiled_value(const std::string& src) {
  auto out = eval(compile_source(src));
  if (!out.defined()) throw EvalError("generator failed to evaluate: " + src);
  return out.value();
}

/// The evaluation of `f c` as a value of type τ, or nullopt when undefined
/// within fuel. `inconclusive` is set when the limit, not a stuck state,
/// was hit.
inline std::optional<Value> apply_value(const Value& f, const Value& c, const FuelConfig& cfg, bool* inconclusive) {
  auto out = apply(f, c, cfg);
  if (out.defined()) return out.value();
  if (out.inconclusive() && inconclusive) *inconclusive = true;
  return std::nullopt;
}

}  // namespace detail

/// a =_σ b. Exact at type o. At arrow types the relation is sampled over the
/// first `max_index` generators of the domain: any disagreement gives
/// False, otherwise the answer is Unknown with the pass count (domains are
/// infinite, so the relation is never affirmed).
inline TypeEq eq_type(const Value& a, const Value& b, const FinType& s, const EnumBudget& budget,
                      const FuelConfig& cfg = {}) {
  TypeEq r;
  if (s.is_o()) {
    r.samples = 1;
    if (a.is_num() && b.is_num() && a.number() == b.number()) {
      r.result = Tri::True;
      r.passed = 1;
    } else {
      r.result = Tri::False;
      r.witness = to_string(a) + " and " + to_string(b) + " are not the same numeral";
    }
    return r;
  }
  auto gens = gen_elems(s.dom(), budget);
  if (gens.size() > budget.max_index) gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(budget.max_index), gens.end());
  for (const auto& c : gens) {
    ++r.samples;
    bool inconclusive = false;
    auto ac = detail::apply_value(a, c, cfg, &inconclusive);
    auto bc = detail::apply_value(b, c, cfg, &inconclusive);
    if (!ac || !bc) {
      if (inconclusive) continue;
      r.result = Tri::False;
      r.witness = "at " + to_string(c) + ": application undefined";
      return r;
    }
    TypeEq sub = eq_type(*ac, *bc, s.cod(), budget, cfg);
    if (sub.result == Tri::False) {
      r.result = Tri::False;
      r.witness = "at " + to_string(c) + ": " + sub.witness;
      return r;
    }
    ++r.passed;
  }
  r.result = Tri::Unknown;
  return r;
}

/// Sample inhabitants of A_σ. At o: the numerals 0..max_index. At σ→τ: at
/// most `generators_per_type` of the identity (σ = τ), SUCC and a 0/1 swap
/// (at o→o) and evaluation at a fixed argument (σ = ρ→τ), followed by the
/// constant functions K v over the codomain generators.
inline std::vector<Value> gen_elems(const FinType& s, const EnumBudget& budget) {
  std::vector<Value> out;
  if (s.is_o()) {
    for (std::size_t n = 0; n <= budget.max_index; ++n) out.push_back(numeral(n));
    return out;
  }
  const FinType& dom = s.dom();
  const FinType& cod = s.cod();
  // The special family is capped by generators_per_type; every constant
  // function over the codomain generators is included after it.
  auto push = [&](const Value& v, bool special) {
    if (special && out.size() >= budget.generators_per_type) return;
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  EnumBudget inner = budget;
  inner.max_index = std::min<std::size_t>(budget.max_index, 3);
  if (dom == cod) push(detail::compiled_value(R"(\x. x)"), true);
  if (dom.is_o() && cod.is_o()) {
    push(Value::comb(Combinator::Succ), true);
    push(detail::compiled_value(R"(\x. D x #0 #1 (D x #1 #0 x))"), true);
  }
  if (!dom.is_o() && dom.cod() == cod) {
    auto args = gen_elems(dom.dom(), inner);
    for (std::size_t i = 0; i < args.size() && i < 2; ++i) {
      auto v = eval(compile(Term::lam("f", Term::app(Term::var("f"), Term::quote(args[i])))));
      push(v.value(), true);
    }
  }
  for (const auto& v : gen_elems(cod, cod.is_o() ? budget : inner)) push(Value::comb(Combinator::K).with_arg(v), false);
  return out;
}

inline VName internalize(const Value& a, const FinType& s) { return VName::internal(a, s); }

// ---------------------------------------------------------------------------
// Triple enumeration and lookup.

struct TripleList {
  std::vector<VName::Triple> triples;
  bool exhaustive = true;
};

struct Lookup {
  std::vector<VName> matches;
  bool exhaustive = true;
  /// Set when a match rests on a sampled =_σ check rather than a decided one.
  bool sampled = false;
};

namespace detail {

inline VName::Triple diag(unsigned long long k, VName y) { return {numeral(k), numeral(k), std::move(y)}; }

/// The triple of ȧ^{στ} (or of a graph name, with `project` set) at key c,
/// if the value at c is defined and internalizable.
inline std::optional<VName> arrow_component(const Value& a, const FinType& s, const FinType& t, const Value& c,
                                            bool project, const FuelConfig& cfg) {
  Term body = Term::app(Term::quote(a), Term::quote(c));
  if (project) body = Term::app(Term::constant(ConstKind::P0), body);
  auto out = eval(body, {}, cfg);
  if (!out.defined()) return std::nullopt;
  if (t.is_o() && !out.value().is_num()) return std::nullopt;
  if (s.is_o() && !c.is_num()) return std::nullopt;
  return VName::opair(internalize(c, s), internalize(out.value(), t));
}

}  // namespace detail

/// All triples of x, or the first `max_index` of a schematic infinite
/// name (then exhaustive = false). Order is deterministic.
inline TripleList enumerate_triples(const VName& x, const EnumBudget& budget, const FuelConfig& cfg = {}) {
  TripleList r;
  using K = VName::Kind;
  switch (x.kind()) {
    case K::Explicit:
      r.triples = x.triples();
      break;
    case K::Nat:
      for (Natural m = 0; m < x.n(); ++m) r.triples.push_back({Value::num(m), Value::num(m), VName::nat(m)});
      break;
    case K::Omega:
      for (std::size_t m = 0; m < budget.max_index; ++m) r.triples.push_back(detail::diag(m, VName::nat(m)));
      r.exhaustive = false;
      break;
    case K::Sing:
      r.triples.push_back(detail::diag(0, x.left()));
      break;
    case K::UPair:
      r.triples.push_back(detail::diag(0, x.left()));
      r.triples.push_back(detail::diag(1, x.right()));
      break;
    case K::OPair:
      r.triples.push_back(detail::diag(0, VName::sing(x.left())));
      r.triples.push_back(detail::diag(1, VName::upair(x.left(), x.right())));
      break;
    case K::TypeName: {
      r.exhaustive = false;
      if (x.type().is_o()) {
        for (std::size_t m = 0; m < budget.max_index; ++m) r.triples.push_back(detail::diag(m, VName::nat(m)));
      } else {
        auto gens = gen_elems(x.type(), budget);
        if (gens.size() > budget.max_index) gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(budget.max_index), gens.end());
        for (const auto& g : gens) r.triples.push_back({g, g, internalize(g, x.type())});
      }
      break;
    }
    case K::Internal:
    case K::Graph: {
      r.exhaustive = false;
      const FinType& s = x.kind() == K::Internal ? x.type().dom() : x.type();
      const FinType& t = x.kind() == K::Internal ? x.type().cod() : x.cod_type();
      auto gens = gen_elems(s, budget);
      if (gens.size() > budget.max_index) gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(budget.max_index), gens.end());
      for (const auto& c : gens) {
        auto y = detail::arrow_component(x.value(), s, t, c, x.kind() == K::Graph, cfg);
        if (y) r.triples.push_back({c, c, *y});
      }
      break;
    }
  }
  return r;
}

/// All z with <a, b, z> in x. Numeral-keyed names are indexed directly;
/// ȧ^{στ}, graph names and F_σ at arrow types index by the key pair after
/// deciding (or sampling) key =_σ key'.
inline Lookup lookup_triples(const VName& x, const Value& a, const Value& b, const EnumBudget& budget,
                             const FuelConfig& cfg = {}) {
  Lookup r;
  using K = VName::Kind;
  long long ka = small_numeral(a);
  bool diag_key = a.is_num() && b.is_num() && a.number() == b.number();
  switch (x.kind()) {
    case K::Explicit:
      for (const auto& t : x.triples())
        if (t.a == a && t.b == b) r.matches.push_back(t.y);
      break;
    case K::Nat:
      if (diag_key && a.number() < x.n()) r.matches.push_back(VName::nat(a.number()));
      break;
    case K::Omega:
      if (diag_key) r.matches.push_back(VName::nat(a.number()));
      break;
    case K::Sing:
      if (diag_key && ka == 0) r.matches.push_back(x.left());
      break;
    case K::UPair:
      if (diag_key && ka == 0) r.matches.push_back(x.left());
      if (diag_key && ka == 1) r.matches.push_back(x.right());
      break;
    case K::OPair:
      if (diag_key && ka == 0) r.matches.push_back(VName::sing(x.left()));
      if (diag_key && ka == 1) r.matches.push_back(VName::upair(x.left(), x.right()));
      break;
    case K::TypeName: {
      if (x.type().is_o()) {
        if (diag_key) r.matches.push_back(VName::nat(a.number()));
        break;
      }
      TypeEq e = eq_type(a, b, x.type(), budget, cfg);
      if (e.result == Tri::False) break;
      r.matches.push_back(internalize(a, x.type()));
      if (e.result == Tri::Unknown) r.sampled = true;
      break;
    }
    case K::Internal:
    case K::Graph: {
      const FinType& s = x.kind() == K::Internal ? x.type().dom() : x.type();
      const FinType& t = x.kind() == K::Internal ? x.type().cod() : x.cod_type();
      TypeEq e = eq_type(a, b, s, budget, cfg);
      if (e.result == Tri::False) break;
      auto y = detail::arrow_component(x.value(), s, t, a, x.kind() == K::Graph, cfg);
      if (y) {
        r.matches.push_back(*y);
        if (e.result == Tri::Unknown) r.sampled = true;
      } else {
        r.exhaustive = false;
      }
      break;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Name surface syntax.

using NameTable = std::map<std::string, VName>;

class NameParser {
 public:
  NameParser(Scanner& s, const TermTable* terms = nullptr, const NameTable* names = nullptr, FuelConfig cfg = {})
      : s_(s), terms_(terms), names_(names), cfg_(cfg) {}

  VName parse() {
    if (s_.accept_word("nat")) return VName::nat(s_.natural());
    if (s_.accept_word("sing")) return VName::sing(atom());
    if (s_.accept_word("upair")) {
      VName x = atom();
      return VName::upair(x, atom());
    }
    if (s_.accept_word("opair")) {
      VName x = atom();
      return VName::opair(x, atom());
    }
    if (s_.accept_word("F")) return VName::type_name(parse_type(s_));
    if (s_.accept_word("int")) {
      Value v = value();
      s_.expect(":");
      return VName::internal(v, parse_type(s_));
    }
    if (s_.accept_word("graph")) {
      Value v = value();
      s_.expect(":");
      FinType a = parse_type(s_);
      s_.expect("->");
      return VName::graph(v, a, parse_type(s_));
    }
    return atom();
  }

  VName atom() {
    if (s_.accept("(")) {
      VName x = parse();
      s_.expect(")");
      return x;
    }
    if (s_.accept("{")) {
      std::vector<VName::Triple> ts;
      while (!s_.accept("}")) {
        s_.expect("(");
        Value a = value();
        s_.expect(",");
        Value b = value();
        s_.expect(",");
        VName y = parse();
        s_.expect(")");
        ts.push_back({a, b, y});
        if (!s_.accept(";")) {
          s_.expect("}");
          break;
        }
      }
      return VName::explicit_set(std::move(ts));
    }
    if (s_.accept_word("omega")) return VName::omega();
    std::string id = s_.peek_ident();
    if (id == "nat" || id == "sing" || id == "upair" || id == "opair" || id == "F" || id == "int" || id == "graph")
      return parse();
    if (!id.empty() && names_) {
      auto it = names_->find(id);
      if (it != names_->end()) {
        s_.ident();
        return it->second;
      }
    }
    s_.fail(id.empty() ? "expected a name" : "unknown name '" + id + "'");
  }

 private:
  Value value() {
    Term t = compile(TermParser(s_, terms_).parse());
    auto out = eval(t, {}, cfg_);
    if (!out.defined()) s_.fail("term in name does not evaluate: " + out.describe());
    return out.value();
  }

  Scanner& s_;
  const TermTable* terms_;
  const NameTable* names_;
  FuelConfig cfg_;
};

inline VName parse_name(std::string_view src, const TermTable* terms = nullptr, const NameTable* names = nullptr) {
  Scanner s(src);
  VName x = NameParser(s, terms, names).parse();
  if (!s.at_end()) s.fail("unexpected trailing input after name");
  return x;
}

}  // namespace pca
