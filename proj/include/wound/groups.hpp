#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wound/normal_form.hpp"
#include "wound/ppoly.hpp"
#include "wound/zero_decision.hpp"

namespace wound {

/// The kernel {F = 0} of a p-polynomial F inside G_a^n.
struct HypersurfaceGroup {
  std::string name;
  std::vector<std::string> var_names;
  PPoly equation;
  std::size_t pivot = 0;

  /// Validates F != 0, arity, and a unit leading coefficient at the pivot
  /// (default: highest-index variable with unit leading coefficient).
  static HypersurfaceGroup make(std::string name, std::vector<std::string> var_names, PPoly equation,
                                std::optional<std::size_t> pivot = std::nullopt);

  std::size_t nvars() const { return var_names.size(); }
  const FieldPtr& field() const { return equation.field(); }
  /// p^(N_pivot): canonical forms have pivot degree below this.
  std::uint64_t pivot_bound() const;
  /// Largest Frobenius exponent occurring in F.
  std::uint32_t max_exponent() const;

  /// Adds F on variables offset..offset+n-1 of the relation set's space.
  void add_relation(RelationSet& rels, std::size_t offset) const;
  /// The relation set of one copy of the group in its own space.
  RelationSet relations() const;

  /// `group <name> vars=<V1,...> pivot=<Vi> : <p-poly>`
  std::string to_string() const;
};

enum class Connected { Yes, Unknown };

struct ClassificationReport {
  bool smooth = false;
  Connected connected = Connected::Unknown;
  /// A variable occurring in exactly one term; projecting it away is
  /// surjective with infinitesimal kernel.
  std::optional<std::size_t> connected_via;
  ZeroDecision wound;
  std::size_t dimension = 0;
};

ClassificationReport classify(const HypersurfaceGroup& g, const DecisionOptions& opts = {});

/// Whether F_target(map) vanishes modulo the source relations. The map's
/// coordinates live in the relations' variable space.
IdentityCheck lands_in(const std::string& label, std::span<const Poly> map, const RelationSet& source,
                       const HypersurfaceGroup& target);
bool check_lands_in(std::span<const Poly> map, const RelationSet& source, const HypersurfaceGroup& target);

/// The same group with F replaced by its n-fold Frobenius twist.
HypersurfaceGroup twist_group(const HypersurfaceGroup& g, std::uint32_t n);

/// A central extension of V by W with underlying scheme W x V and product
/// (w, v)(w', v') = (w + w' + h(v, v'), v + v'). Each h component is a
/// polynomial in 2 * nV variables: the block v followed by the block v'.
struct CocycleExtension {
  std::string name;
  HypersurfaceGroup center;  // W
  HypersurfaceGroup base;    // V
  std::vector<Poly> h;

  static CocycleExtension make(std::string name, HypersurfaceGroup center, HypersurfaceGroup base, std::vector<Poly> h);

  /// Variable names of the blocks v, v' (second block primed).
  std::vector<std::string> h_names() const;
  std::string to_string() const;
};

/// h(v + v'', v') = h(v, v') + h(v'', v') and the same in the second slot,
/// as identities in the ambient polynomial ring (no relations).
std::vector<IdentityCheck> biadditivity_checks(const CocycleExtension& e);
bool check_biadditive(const CocycleExtension& e);

/// One axiom of the extension, checked component by component.
struct AxiomCheck {
  std::string name;
  std::vector<IdentityCheck> components;

  bool holds() const;
};

/// Checks named "biadditive", "lands-in" (F_W(h) = 0 on V x V),
/// "alternating" (h(v, v) = 0), "associativity" (the cocycle identity),
/// "identity" (h(0, v) = h(v, 0) = 0) and "inverse" (h(v, -v) = h(-v, v) = 0).
struct AxiomReport {
  std::vector<AxiomCheck> axioms;

  const AxiomCheck& at(const std::string& name) const;
  /// Closure, associativity, identity and inverse.
  bool group_axioms_hold() const;
};

AxiomReport check_group_axioms(const CocycleExtension& e);

/// h(v, v') - h(v', v) modulo the V relations on both blocks.
std::vector<IdentityCheck> commutativity_checks(const CocycleExtension& e);
bool is_commutative(const CocycleExtension& e);

}  // namespace wound
