#pragma once

// Axiom realizers by identifier, and the witness names their proofs
// construct, for finite inputs.

#include "pca/realizability.hpp"
#include "pca/realizers.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pca {

enum class AxiomId {
  Extensionality,
  Pairing,
  Union,
  Infinity,
  SetInduction,
  BoundedSeparation,
  StrongCollection,
  SubsetCollection,
  Powerset,
};

inline const std::vector<AxiomId>& all_axioms() {
  static const std::vector<AxiomId> ids = {AxiomId::Extensionality,    AxiomId::Pairing,          AxiomId::Union,
                                           AxiomId::Infinity,          AxiomId::SetInduction,     AxiomId::BoundedSeparation,
                                           AxiomId::StrongCollection,  AxiomId::SubsetCollection, AxiomId::Powerset};
  return ids;
}

inline const char* to_string(AxiomId id) {
  switch (id) {
    case AxiomId::Extensionality: return "extensionality";
    case AxiomId::Pairing: return "pairing";
    case AxiomId::Union: return "union";
    case AxiomId::Infinity: return "infinity";
    case AxiomId::SetInduction: return "set-induction";
    case AxiomId::BoundedSeparation: return "bounded-separation";
    case AxiomId::StrongCollection: return "strong-collection";
    case AxiomId::SubsetCollection: return "subset-collection";
    case AxiomId::Powerset: return "powerset";
  }
  return "?";
}

/// Library id of the realizer for an axiom.
inline const char* realizer_id(AxiomId id) {
  switch (id) {
    case AxiomId::Extensionality: return "ax.ext";
    case AxiomId::Pairing: return "ax.pairing";
    case AxiomId::Union: return "ax.union";
    case AxiomId::Infinity: return "ax.inf";
    case AxiomId::SetInduction: return "ax.setind";
    case AxiomId::BoundedSeparation: return "ax.sep";
    case AxiomId::StrongCollection: return "ax.scoll";
    case AxiomId::SubsetCollection: return "ax.sscoll";
    case AxiomId::Powerset: return "ax.power";
  }
  return "?";
}

class WitnessError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The triples of a finite name; throws on schematic-infinite names.
inline std::vector<VName::Triple> finite_triples(const VName& x) {
  if (!is_finite(x)) throw WitnessError("witness builder needs a finite name, got " + to_string(x));
  TripleList ts = enumerate_triples(x, {});
  if (!ts.exhaustive) throw WitnessError("witness builder could not enumerate " + to_string(x));
  std::vector<VName::Triple> out;
  for (auto& t : ts.triples) out.push_back({t.a, t.b, t.y});
  return out;
}

/// z = {⟨0̄,0̄,x⟩, ⟨0̄,0̄,y⟩}.
inline VName pairing_witness(const VName& x, const VName& y) {
  return VName::explicit_set({{numeral(0), numeral(0), x}, {numeral(0), numeral(0), y}});
}

/// y = {⟨c,d,v⟩ : ∃⟨a,b,u⟩∈x (⟨c,d,v⟩∈u)}.
inline VName union_witness(const VName& x) {
  std::vector<VName::Triple> out;
  for (const auto& t : finite_triples(x))
    for (const auto& s : finite_triples(t.y)) out.push_back(s);
  return VName::explicit_set(std::move(out));
}

inline VName infinity_witness() { return VName::omega(); }

/// Supplies a realizer pair for a closed formula, or nullopt if none is known.
using RealizerProvider = std::function<std::optional<RealizerPair>(const Formula&)>;

inline RealizerProvider synthesizing_provider() {
  return [](const Formula& f) { return synthesize(f); };
}

/// y = {⟨p a c, p b d, u⟩ : ⟨a,b,u⟩∈x ∧ c = d ⊩ φ(u)}, with (c, d) taken
/// from `provider` for each u. The default provider synthesizes, so φ(u)
/// must land in the arithmetic fragment.
inline VName separation_witness(const VName& x, const std::string& var, const Formula& phi,
                                const RealizerProvider& provider = synthesizing_provider()) {
  std::vector<VName::Triple> out;
  for (const auto& t : finite_triples(x)) {
    auto r = provider(substitute(phi, var, t.y));
    if (!r) continue;
    out.push_back({detail::pair_value(t.a, r->a), detail::pair_value(t.b, r->b), t.y});
  }
  return VName::explicit_set(std::move(out));
}

/// y = {⟨c,d,v(u)⟩ : ⟨c,d,u⟩∈x} for a hand-chosen v.
inline VName strong_collection_witness(const VName& x, const std::function<VName(const VName&)>& choose) {
  std::vector<VName::Triple> out;
  for (const auto& t : finite_triples(x)) out.push_back({t.a, t.b, choose(t.y)});
  return VName::explicit_set(std::move(out));
}

/// z = {⟨0̄,0̄,q⟩ : q ∈ qs} for hand-supplied candidate sets.
inline VName subset_collection_witness(const std::vector<VName>& qs) {
  std::vector<VName::Triple> out;
  for (const auto& q : qs) out.push_back({numeral(0), numeral(0), q});
  return VName::explicit_set(std::move(out));
}

/// y = {⟨a,b,z⟩ among `candidates` : a = b ⊩ z ⊆ x}.
inline VName powerset_witness(const VName& x, const std::vector<VName::Triple>& candidates, EnumBudget budget = {},
                              FuelConfig cfg = {}) {
  std::vector<VName::Triple> out;
  for (const auto& t : candidates) {
    Formula sub = Formula::all_in("u", t.y, Formula::mem(NameRef(std::string("u")), x));
    if (check({t.a, t.b}, sub, budget, cfg).realized()) out.push_back(t);
  }
  return VName::explicit_set(std::move(out));
}

struct AxiomRealizer {
  AxiomId id;
  std::string library_id;
  Value value;
  Term term;
  /// Builds the asserted set from input names; empty where the witness
  /// needs more than names (see the dedicated builders above).
  std::function<VName(const std::vector<VName>&)> builder;
};

inline AxiomRealizer axiom_realizer(AxiomId id) {
  std::string lid = realizer_id(id);
  AxiomRealizer r{id, lid, realizer(lid), realizer_term(lid), {}};
  auto arity = [](const std::vector<VName>& xs, std::size_t n) {
    if (xs.size() != n) throw WitnessError("witness builder expects " + std::to_string(n) + " names");
  };
  switch (id) {
    case AxiomId::Pairing:
      r.builder = [arity](const std::vector<VName>& xs) {
        arity(xs, 2);
        return pairing_witness(xs[0], xs[1]);
      };
      break;
    case AxiomId::Union:
      r.builder = [arity](const std::vector<VName>& xs) {
        arity(xs, 1);
        return union_witness(xs[0]);
      };
      break;
    case AxiomId::Infinity:
      r.builder = [](const std::vector<VName>&) { return infinity_witness(); };
      break;
    default: break;
  }
  return r;
}

}  // namespace pca
