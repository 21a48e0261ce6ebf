#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wound/groups.hpp"

namespace wound {

/// Source or target of a map: a hypersurface group, or the affine line G_a
/// with its single coordinate.
class Endpoint {
 public:
  static Endpoint line(FieldPtr field, std::string var = "T");
  static Endpoint group(HypersurfaceGroup g);

  bool is_line() const { return !group_; }
  const HypersurfaceGroup& group() const;
  const FieldPtr& field() const { return field_; }
  /// "Ga" for the line.
  const std::string& name() const { return name_; }
  const std::vector<std::string>& var_names() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  /// Largest Frobenius exponent of the defining equation (0 for the line).
  std::uint32_t max_exponent() const { return group_ ? group_->max_exponent() : 0; }

  /// Adds the defining relation (none for the line) at `offset`.
  void add_relation(RelationSet& rels, std::size_t offset) const;

 private:
  FieldPtr field_;
  std::string name_;
  std::vector<std::string> vars_;
  std::optional<HypersurfaceGroup> group_;
};

/// Parameter symbols for coefficients, optionally constrained by
/// p-polynomial relations among the parameters (disjoint blocks).
struct ParamRing {
  FieldPtr field;
  std::vector<std::string> names;
  std::vector<std::pair<PPoly, std::size_t>> relations;

  static ParamRing none(FieldPtr field) { return {std::move(field), {}, {}}; }

  std::size_t size() const { return names.size(); }
  /// F(params) = 0 with the given pivot (default rule as for groups).
  void add_relation(PPoly equation, std::optional<std::size_t> pivot = std::nullopt);
  void add_relations(RelationSet& rels, std::size_t offset) const;
  RelationSet relation_set() const;
};

/// A homomorphism candidate given by one p-polynomial per target coordinate
/// in the source coordinates, with coefficients polynomial in parameters.
struct PPolyMap {
  std::string name;
  Endpoint source;
  Endpoint target;
  std::vector<ParamPPoly> coords;

  /// Validates arity, coordinate spaces and fields.
  static PPolyMap make(std::string name, Endpoint source, Endpoint target, std::vector<ParamPPoly> coords);

  std::size_t nparams() const { return coords.empty() ? 0 : coords[0].zero().nvars(); }
  /// `map <name> from=<A> to=<B> : <target var> -> <p-poly> ; ...`
  std::string to_string(std::span<const std::string> param_names = {}) const;
};

PPolyMap identity_map(const Endpoint& e, std::size_t nparams = 0);

/// Every coordinate reduced modulo F_source at the source pivot, so the
/// pivot degree is below p^(N_pivot); parameter coefficients are further
/// reduced modulo the parameter relations when `params` has any.
PPolyMap canonical_form(const PPolyMap& m, const ParamRing* params = nullptr);

/// g o f for f: A -> B and g: B -> C.
PPolyMap compose(const PPolyMap& g, const PPolyMap& f);

/// F_target(m) modulo F_source and the parameter relations. The map is
/// additive by construction, so landing in the target is the whole check.
/// A line target gives the zero polynomial.
IdentityCheck hom_check(const PPolyMap& m, const ParamRing& params);
bool verify_hom(const PPolyMap& m, const ParamRing& params);

/// X_i -> X_i^(p^n) from G to twist_group(G, n).
PPolyMap relative_frobenius_map(const HypersurfaceGroup& g, std::uint32_t n);

struct MutualInverseReport {
  IdentityCheck f_hom;
  IdentityCheck g_hom;
  std::vector<IdentityCheck> g_after_f;  // (g o f)_i - X_i modulo F_A
  std::vector<IdentityCheck> f_after_g;  // (f o g)_i - X_i modulo F_B

  bool holds() const;
  std::vector<const IdentityCheck*> all() const;
};

/// f: A -> B and g: B -> A.
MutualInverseReport verify_mutual_inverse(const PPolyMap& f, const PPolyMap& g, const ParamRing& params);

/// One unknown coefficient of the generic map: coordinate `coord` of the
/// target, term X_var^(p^e) of the source.
struct Unknown {
  std::size_t coord;
  std::size_t var;
  std::uint32_t e;
  std::string name;  // u_<coord>_<var>_<e>
};

/// Conditions on the unknowns for the generic map to be a homomorphism.
struct ConstraintSystem {
  std::vector<Unknown> unknowns;
  /// Constraint i is the coefficient of X_var^(p^e) at positions[i] in the
  /// canonical form of F_target(ansatz), scaled to a monic leading term.
  std::vector<PKey> positions;
  std::vector<Poly> constraints;
  /// The generic map, with the unknowns as parameters.
  PPolyMap ansatz;

  std::vector<std::string> names() const;
  /// One `<position>: <constraint>` line per constraint.
  std::string to_string() const;
};

/// Exponent caps per source variable, inclusive. The pivot cap may not
/// reach N_pivot.
using AnsatzBounds = std::vector<std::uint32_t>;

/// Default caps: N_pivot - 1 at the pivot, elsewhere the target's largest
/// exponent plus the source's.
AnsatzBounds default_bounds(const Endpoint& source, const Endpoint& target);

ConstraintSystem derive_hom_constraints(const Endpoint& source, const Endpoint& target,
                                        std::optional<AnsatzBounds> bounds = std::nullopt);

/// c^-1 * P for the grlex leading coefficient c.
Poly make_monic(const Poly& p);

/// All polynomials in a of degree <= degree over F_q, in a fixed order
/// (degree 0: the elements of F_q).
std::vector<FieldElem> polynomial_domain(const FieldPtr& field, std::uint32_t degree);

struct SolveOptions {
  /// Maximum number of partial assignments visited.
  std::uint64_t max_nodes = 10'000'000;
};

struct SolveResult {
  std::vector<std::vector<FieldElem>> assignments;
  std::vector<PPolyMap> maps;
  /// The whole bounded space was searched; the list is complete within the
  /// ansatz and the domain, not in general.
  bool complete = false;
  std::uint64_t visited = 0;
};

/// Backtracking over unknown values drawn from `domain`, checking each
/// constraint as soon as all its unknowns are assigned.
SolveResult solve_homs_bounded(const ConstraintSystem& cs, const std::vector<FieldElem>& domain,
                               const SolveOptions& opts = {});

/// The map with parameters replaced by values.
PPolyMap instantiate(const PPolyMap& m, std::span<const FieldElem> values);

}  // namespace wound
