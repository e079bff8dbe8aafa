#pragma once

// Canonical elements of the term machine: partially applied primitive
// combinators, numerals and opaque atoms.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <memory>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace pca {

using Natural = boost::multiprecision::cpp_int;

/// Primitive combinators with a delta rule.
enum class Combinator { K, S, D, Succ, Pred, Kbar };

/// Constant keywords of the surface syntax. P, P0 and P1 are defined
/// constants (compiled pairing terms), the rest are primitive.
enum class ConstKind { K, S, D, Succ, Pred, P, P0, P1, Kbar };

constexpr std::size_t arity(Combinator c) {
  switch (c) {
    case Combinator::K:
    case Combinator::Kbar:
      return 2;
    case Combinator::S:
      return 3;
    case Combinator::D:
      return 4;
    case Combinator::Succ:
    case Combinator::Pred:
      return 1;
  }
  return 0;
}

inline const char* keyword(ConstKind k) {
  switch (k) {
    case ConstKind::K: return "K";
    case ConstKind::S: return "S";
    case ConstKind::D: return "D";
    case ConstKind::Succ: return "SUCC";
    case ConstKind::Pred: return "PRED";
    case ConstKind::P: return "P";
    case ConstKind::P0: return "P0";
    case ConstKind::P1: return "P1";
    case ConstKind::Kbar: return "KBAR";
  }
  return "?";
}

inline ConstKind to_const(Combinator c) {
  switch (c) {
    case Combinator::K: return ConstKind::K;
    case Combinator::S: return ConstKind::S;
    case Combinator::D: return ConstKind::D;
    case Combinator::Succ: return ConstKind::Succ;
    case Combinator::Pred: return ConstKind::Pred;
    case Combinator::Kbar: return ConstKind::Kbar;
  }
  return ConstKind::K;
}

/// A weak canonical form: a head applied to fewer arguments than its arity.
/// Numerals and opaque atoms never fire a rule; opaque atoms accumulate
/// arguments, applying a numeral is an error.
///
/// Values are immutable and shared; copying is cheap.
class Value {
 public:
  enum class Kind { Comb, Num, Opaque };

  static Value comb(Combinator c) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Comb;
    n->comb = c;
    return Value(std::move(n));
  }

  static Value num(Natural v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Num;
    n->number = std::move(v);
    return Value(std::move(n));
  }

  /// An inert atom. A generic atom stands for an arbitrary element: any
  /// attempt to inspect it (apply it, case on it) makes evaluation stuck
  /// with a distinguished reason, so a successful evaluation is parametric
  /// in it.
  static Value opaque(std::string id, bool generic = false) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Opaque;
    n->id = std::move(id);
    n->generic = generic;
    n->has_generic = generic;
    return Value(std::move(n));
  }

  Kind kind() const { return node_->kind; }
  bool is_num() const { return node_->kind == Kind::Num; }
  bool is_comb() const { return node_->kind == Kind::Comb; }
  bool is_opaque() const { return node_->kind == Kind::Opaque; }
  bool is_generic() const { return node_->kind == Kind::Opaque && node_->generic; }
  bool contains_generic() const { return node_->has_generic; }

  Combinator combinator() const { return node_->comb; }
  const Natural& number() const { return node_->number; }
  const std::string& opaque_id() const { return node_->id; }
  const std::vector<Value>& args() const { return node_->args; }

  /// Tree size in nodes (head plus all argument subtrees).
  std::size_t size() const { return node_->size; }

  /// Appends an argument without firing any rule. Callers check arity.
  Value with_arg(const Value& a) const {
    auto n = std::make_shared<Node>(*node_);
    n->args.push_back(a);
    n->size = node_->size + a.size();
    n->has_generic = node_->has_generic || a.contains_generic();
    return Value(std::move(n));
  }

  bool same_node(const Value& o) const { return node_ == o.node_; }

  friend bool operator==(const Value& a, const Value& b) {
    if (a.node_ == b.node_) return true;
    const Node& x = *a.node_;
    const Node& y = *b.node_;
    if (x.kind != y.kind || x.size != y.size || x.args.size() != y.args.size()) return false;
    switch (x.kind) {
      case Kind::Comb:
        if (x.comb != y.comb) return false;
        break;
      case Kind::Num:
        if (x.number != y.number) return false;
        break;
      case Kind::Opaque:
        if (x.id != y.id || x.generic != y.generic) return false;
        break;
    }
    for (std::size_t i = 0; i < x.args.size(); ++i)
      if (!(x.args[i] == y.args[i])) return false;
    return true;
  }
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind = Kind::Comb;
    Combinator comb = Combinator::K;
    Natural number;
    std::string id;
    bool generic = false;
    bool has_generic = false;
    std::vector<Value> args;
    std::size_t size = 1;
  };

  explicit Value(std::shared_ptr<Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

inline Value numeral(unsigned long long n) { return Value::num(Natural(n)); }

/// The numeral's value if `v` is a numeral that fits, otherwise -1.
inline long long small_numeral(const Value& v) {
  if (!v.is_num() || v.number() > Natural(1'000'000'000)) return -1;
  return v.number().convert_to<long long>();
}

}  // namespace pca
