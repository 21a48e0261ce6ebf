#pragma once

#include <string>
#include <vector>

#include "wound/homs.hpp"

/// The standard worked examples over k = F_p(a): the groups W_a, V_a, U, W,
/// W_2, Gabber's non-commutative extension, and the maps between them. Used
/// by the CLI self-test and the test suites.
namespace wound::corpus {

/// X + X^p + aY^p = 0, pivot Y.
HypersurfaceGroup w_a(const FieldPtr& field);
/// X^(p^2) - X + aY^(p^2) = 0, pivot X. Named `name` (V_a or V).
HypersurfaceGroup v_a(const FieldPtr& field, const std::string& name = "V_a");
/// X^p - X + aY^p = 0, pivot X.
HypersurfaceGroup u(const FieldPtr& field);
/// X^(p^2) - X + aY^p = 0, pivot X.
HypersurfaceGroup w(const FieldPtr& field);
/// X^4 + X + aY^2 + a^2 Z^8 = 0 (p = 2), pivot Z.
HypersurfaceGroup w_2(const FieldPtr& field);

/// U_a: W_a x V_a with h((x,y),(x',y')) = (x x'^p - x^p x', x y'^p - x' y^p).
CocycleExtension gabber(const FieldPtr& field);

/// The parameter ring {d, e} with d^(p^2) - d + a e^p = 0 (a point of W).
ParamRing w_point_params(const FieldPtr& field);
/// (X, Y) -> (d^p X + d X^p, e X + d Y^p) from V to U, parameters d, e.
PPolyMap phi_b(const FieldPtr& field);

/// The parameter ring {X', Y', Z'} subject to the W_2 equation (p = 2).
ParamRing w2_point_params(const FieldPtr& field);
/// (X, Y) -> b_2((X', Y', Z'), (X, Y)) from V to U (p = 2).
PPolyMap b2_map(const FieldPtr& field);

/// (X, Y) -> X + a^(1/p) Y and T -> (-T^p, a^(-1/p)(T + T^p)); needs depth >= 1.
PPolyMap w_a_to_line(const FieldPtr& field);
PPolyMap line_to_w_a(const FieldPtr& field);

/// The Frobenius twist W_a^(p) splits over k: (X, Y) -> X + aY and
/// T -> (-T^p, (T + T^p)/a).
PPolyMap twisted_to_line(const FieldPtr& field);
PPolyMap line_to_twisted(const FieldPtr& field);

/// The expected Hom(V, U) constraints written directly from the coefficient
/// comparison, in the unknowns of derive_hom_constraints(V, U) with default
/// bounds: c = u_0_0_0, d = u_0_0_1, F_j = u_0_1_j, e = u_1_0_0, f = u_1_0_1,
/// G_j = u_1_1_j. Each is monic.
std::vector<Poly> expected_v_to_u_constraints(const FieldPtr& field, const ConstraintSystem& cs);

struct Item {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Run {
  std::uint32_t p = 3;
  std::vector<Item> items;
  /// Every symbolic vanishing verdict issued along the way.
  std::vector<IdentityCheck> identities;

  bool passed() const;
};

/// The example suite for p in {2, 3, 5}: p = 2 runs the W_2 / b_2 items,
/// odd p everything else.
Run run(std::uint32_t p, const DecisionOptions& opts = {});

}  // namespace wound::corpus
