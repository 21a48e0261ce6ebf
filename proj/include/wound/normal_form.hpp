#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wound/poly.hpp"
#include "wound/ppoly.hpp"

namespace wound {

/// Explicit points on a relation's hypersurface: T -> (coords[0](T), ...),
/// one p-polynomial in the single variable T per variable of the relation's
/// block (ascending index), with coefficients at `field` (any level of the
/// same tower at least as deep as the relation's).
struct Parametrization {
  FieldPtr field;
  std::vector<PPoly> coords;
};

/// A p-polynomial relation F = 0 solved for its pivot's top power.
struct Relation {
  PPoly equation;
  std::size_t pivot;
  std::optional<Parametrization> parametrization;
};

/// Relations over pairwise disjoint variable blocks of one variable space.
/// Disjointness makes sequential division by each relation confluent.
class RelationSet {
 public:
  RelationSet(FieldPtr field, std::size_t nvars);

  /// Adds F = 0 with the given pivot (default: highest-index variable with
  /// unit leading coefficient). Throws PreconditionError for a non-unit or
  /// absent pivot, a repeated pivot, or overlapping blocks.
  void add(PPoly equation, std::optional<std::size_t> pivot = std::nullopt);
  /// Registers explicit points for relation `index`.
  void set_parametrization(std::size_t index, Parametrization param);

  const FieldPtr& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Relation>& relations() const { return relations_; }

  std::string to_string(std::span<const std::string> names) const;

 private:
  FieldPtr field_;
  std::size_t nvars_;
  std::vector<Relation> relations_;
};

/// Rewrites every monomial whose pivot degree reaches p^(n_pivot) until all
/// pivot degrees are below their bounds. The result is the unique remainder.
Poly normal_form(const Poly& h, const RelationSet& rels);

bool is_identically_zero(const Poly& h, const RelationSet& rels);

/// A symbolic vanishing verdict together with the data that produced it, so
/// the verdict can be re-checked independently.
struct IdentityCheck {
  std::string label;
  Poly poly;
  RelationSet relations;
  bool vanishes = false;
};

/// Runs is_identically_zero and records the verdict.
IdentityCheck make_identity_check(std::string label, Poly poly, RelationSet relations);

struct OracleOptions {
  std::uint64_t seed = 0;
  std::uint32_t trials = 100;
  /// Degree bound of the random polynomials drawn for free coordinates.
  std::uint32_t degree = 3;
};

/// One-sided randomized identity test on the relation variety: returns false
/// as soon as a sampled point gives a nonzero value.
///
/// Free variables are random polynomials in the working generator. Each
/// relation is solved for a variable occurring in a single term c X^(p^e)
/// (the pivot when it qualifies) by extracting a p^e-th root one level
/// deeper in the tower; otherwise its registered parametrization is used.
/// Throws UnsupportedRelation when neither applies.
bool random_point_oracle(const Poly& h, const RelationSet& rels, const OracleOptions& opts = {});

}  // namespace wound
