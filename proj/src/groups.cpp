#include "wound/groups.hpp"

#include <algorithm>

namespace wound {

HypersurfaceGroup HypersurfaceGroup::make(std::string name, std::vector<std::string> var_names, PPoly equation,
                                          std::optional<std::size_t> pivot) {
  if (equation.is_zero()) throw InputError("group " + name + ": defining p-polynomial is zero");
  if (equation.nvars() != var_names.size()) throw InputError("group " + name + ": arity mismatch");
  const std::size_t piv = pivot ? *pivot : default_pivot(equation);
  if (piv >= var_names.size()) throw InputError("group " + name + ": pivot out of range");
  if (!equation.top_exponent(piv)) throw PreconditionError("group " + name + ": pivot does not occur");
  if (equation.leading_coefficient(piv).is_zero()) throw PreconditionError("group " + name + ": non-unit pivot");
  return {std::move(name), std::move(var_names), std::move(equation), piv};
}

std::uint64_t HypersurfaceGroup::pivot_bound() const { return field()->p_power(*equation.top_exponent(pivot)); }

std::uint32_t HypersurfaceGroup::max_exponent() const {
  std::uint32_t m = 0;
  for (const auto& [k, c] : equation.terms()) m = std::max(m, k.e);
  return m;
}

void HypersurfaceGroup::add_relation(RelationSet& rels, std::size_t offset) const {
  rels.add(equation.embed_vars(rels.nvars(), offset), offset + pivot);
}

RelationSet HypersurfaceGroup::relations() const {
  RelationSet r(field(), nvars());
  add_relation(r, 0);
  return r;
}

std::string HypersurfaceGroup::to_string() const {
  std::string vars;
  for (const auto& v : var_names) vars += (vars.empty() ? "" : ",") + v;
  return "group " + name + " vars=" + vars + " pivot=" + var_names[pivot] + " : " + equation.to_string(var_names);
}

ClassificationReport classify(const HypersurfaceGroup& g, const DecisionOptions& opts) {
  ClassificationReport r;
  r.smooth = g.equation.is_smooth();
  for (auto v : g.equation.variables()) {
    if (g.equation.occurrences(v) == 1) {
      r.connected = Connected::Yes;
      r.connected_via = v;
      break;
    }
  }
  r.wound = decide_no_nontrivial_zero(g.equation.principal_part(), opts);
  r.dimension = g.nvars() - 1;
  return r;
}

IdentityCheck lands_in(const std::string& label, std::span<const Poly> map, const RelationSet& source,
                       const HypersurfaceGroup& target) {
  if (map.size() != target.nvars()) throw InputError("lands_in: map has wrong number of coordinates");
  for (const auto& c : map)
    if (c.nvars() != source.nvars()) throw InputError("lands_in: coordinates and relations use different spaces");
  return make_identity_check(label, evaluate(target.equation, map), source);
}

bool check_lands_in(std::span<const Poly> map, const RelationSet& source, const HypersurfaceGroup& target) {
  return lands_in("lands-in", map, source, target).vanishes;
}

HypersurfaceGroup twist_group(const HypersurfaceGroup& g, std::uint32_t n) {
  if (n == 0) return g;
  std::string name = g.name + "^(p^" + std::to_string(n) + ")";
  return {std::move(name), g.var_names, g.equation.twist(n), g.pivot};
}

CocycleExtension CocycleExtension::make(std::string name, HypersurfaceGroup center, HypersurfaceGroup base,
                                        std::vector<Poly> h) {
  if (h.size() != center.nvars())
    throw InputError("extension " + name + ": h needs one component per coordinate of " + center.name);
  if (!same_field(center.field(), base.field())) throw InputError("extension " + name + ": groups over different fields");
  for (const auto& c : h) {
    if (c.nvars() != 2 * base.nvars())
      throw InputError("extension " + name + ": h components must use two copies of " + base.name + "'s variables");
    if (!same_field(c.field(), base.field())) throw InputError("extension " + name + ": h over a different field");
  }
  return {std::move(name), std::move(center), std::move(base), std::move(h)};
}

std::vector<std::string> CocycleExtension::h_names() const {
  std::vector<std::string> names = base.var_names;
  for (const auto& v : base.var_names) names.push_back(v + "'");
  return names;
}

std::string CocycleExtension::to_string() const {
  std::string out = "extension " + name + " center=" + center.name + " base=" + base.name + " :";
  const auto names = h_names();
  for (std::size_t i = 0; i < h.size(); ++i)
    out += (i ? " ; h" : " h") + std::to_string(i + 1) + " = " + h[i].to_string(names);
  return out;
}

namespace {

// Coordinates of `blocks` copies of V in one space of blocks * n variables.
class Blocks {
 public:
  Blocks(const CocycleExtension& e, std::size_t blocks)
      : field_(e.base.field()), n_(e.base.nvars()), total_(blocks * n_) {}

  std::vector<Poly> block(std::size_t b) const {
    std::vector<Poly> v;
    for (std::size_t i = 0; i < n_; ++i) v.push_back(Poly::variable(field_, total_, b * n_ + i));
    return v;
  }
  std::vector<Poly> zero() const { return std::vector<Poly>(n_, Poly(field_, total_)); }

  RelationSet relations(const HypersurfaceGroup& base, bool with_relations) const {
    RelationSet r(field_, total_);
    if (with_relations)
      for (std::size_t off = 0; off < total_; off += n_) base.add_relation(r, off);
    return r;
  }

 private:
  FieldPtr field_;
  std::size_t n_;
  std::size_t total_;
};

std::vector<Poly> add(std::vector<Poly> a, const std::vector<Poly>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

std::vector<Poly> neg(std::vector<Poly> a) {
  for (auto& x : a) x = -x;
  return a;
}

// h(first, second) componentwise.
std::vector<Poly> apply_h(const CocycleExtension& e, const std::vector<Poly>& first, const std::vector<Poly>& second) {
  std::vector<Poly> images = first;
  images.insert(images.end(), second.begin(), second.end());
  std::vector<Poly> out;
  for (const auto& c : e.h) out.push_back(c.substitute(images));
  return out;
}

std::vector<IdentityCheck> componentwise(const std::string& label, const std::vector<Poly>& value,
                                         const RelationSet& rels) {
  std::vector<IdentityCheck> out;
  for (std::size_t i = 0; i < value.size(); ++i)
    out.push_back(make_identity_check(label + " h" + std::to_string(i + 1), value[i], rels));
  return out;
}

std::vector<Poly> difference(const std::vector<Poly>& a, const std::vector<Poly>& b) { return add(a, neg(b)); }

}  // namespace

std::vector<IdentityCheck> biadditivity_checks(const CocycleExtension& e) {
  Blocks sp(e, 3);
  const auto v = sp.block(0), v1 = sp.block(1), v2 = sp.block(2);
  const auto rels = sp.relations(e.base, false);
  auto first = difference(apply_h(e, add(v, v2), v1), add(apply_h(e, v, v1), apply_h(e, v2, v1)));
  auto second = difference(apply_h(e, v, add(v1, v2)), add(apply_h(e, v, v1), apply_h(e, v, v2)));
  auto out = componentwise("additive in first slot", first, rels);
  auto more = componentwise("additive in second slot", second, rels);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

bool check_biadditive(const CocycleExtension& e) {
  auto checks = biadditivity_checks(e);
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.vanishes; });
}

bool AxiomCheck::holds() const {
  return std::all_of(components.begin(), components.end(), [](const IdentityCheck& c) { return c.vanishes; });
}

const AxiomCheck& AxiomReport::at(const std::string& name) const {
  for (const auto& a : axioms)
    if (a.name == name) return a;
  throw InputError("no axiom named " + name);
}

bool AxiomReport::group_axioms_hold() const {
  for (const char* n : {"lands-in", "associativity", "identity", "inverse"})
    if (!at(n).holds()) return false;
  return true;
}

AxiomReport check_group_axioms(const CocycleExtension& e) {
  AxiomReport r;
  r.axioms.push_back({"biadditive", biadditivity_checks(e)});

  Blocks two(e, 2);
  const auto rels2 = two.relations(e.base, true);
  const auto v = two.block(0), v1 = two.block(1);
  {
    const auto hv = apply_h(e, v, v1);
    r.axioms.push_back({"lands-in", {lands_in("h lands in " + e.center.name, hv, rels2, e.center)}});
  }
  r.axioms.push_back({"alternating", componentwise("h(v,v)", apply_h(e, v, v), rels2)});
  {
    Blocks three(e, 3);
    const auto rels3 = three.relations(e.base, true);
    const auto x = three.block(0), y = three.block(1), z = three.block(2);
    auto lhs = add(apply_h(e, x, y), apply_h(e, add(x, y), z));
    auto rhs = add(apply_h(e, x, add(y, z)), apply_h(e, y, z));
    r.axioms.push_back({"associativity", componentwise("cocycle identity", difference(lhs, rhs), rels3)});
  }
  {
    auto left = componentwise("h(0,v)", apply_h(e, two.zero(), v1), rels2);
    auto right = componentwise("h(v,0)", apply_h(e, v, two.zero()), rels2);
    left.insert(left.end(), right.begin(), right.end());
    r.axioms.push_back({"identity", std::move(left)});
  }
  {
    auto right = componentwise("h(v,-v)", apply_h(e, v, neg(v)), rels2);
    auto left = componentwise("h(-v,v)", apply_h(e, neg(v), v), rels2);
    right.insert(right.end(), left.begin(), left.end());
    r.axioms.push_back({"inverse", std::move(right)});
  }
  return r;
}

std::vector<IdentityCheck> commutativity_checks(const CocycleExtension& e) {
  Blocks two(e, 2);
  const auto v = two.block(0), v1 = two.block(1);
  return componentwise("h(v,v')-h(v',v)", difference(apply_h(e, v, v1), apply_h(e, v1, v)),
                       two.relations(e.base, true));
}

bool is_commutative(const CocycleExtension& e) {
  auto checks = commutativity_checks(e);
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.vanishes; });
}

}  // namespace wound
