#include "wound/homs.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace wound {

Endpoint Endpoint::line(FieldPtr field, std::string var) {
  Endpoint e;
  e.field_ = std::move(field);
  e.name_ = "Ga";
  e.vars_ = {std::move(var)};
  return e;
}

Endpoint Endpoint::group(HypersurfaceGroup g) {
  Endpoint e;
  e.field_ = g.field();
  e.name_ = g.name;
  e.vars_ = g.var_names;
  e.group_ = std::move(g);
  return e;
}

const HypersurfaceGroup& Endpoint::group() const {
  if (!group_) throw PreconditionError("the affine line has no defining equation");
  return *group_;
}

void Endpoint::add_relation(RelationSet& rels, std::size_t offset) const {
  if (group_) group_->add_relation(rels, offset);
}

void ParamRing::add_relation(PPoly equation, std::optional<std::size_t> pivot) {
  if (equation.nvars() != names.size()) throw InputError("parameter relation lives in a different space");
  const std::size_t piv = pivot ? *pivot : default_pivot(equation);
  relations.emplace_back(std::move(equation), piv);
  try {
    relation_set();
  } catch (...) {
    relations.pop_back();
    throw;
  }
}

void ParamRing::add_relations(RelationSet& rels, std::size_t offset) const {
  for (const auto& [eq, piv] : relations) rels.add(eq.embed_vars(rels.nvars(), offset), offset + piv);
}

RelationSet ParamRing::relation_set() const {
  RelationSet r(field, names.size());
  add_relations(r, 0);
  return r;
}

PPolyMap PPolyMap::make(std::string name, Endpoint source, Endpoint target, std::vector<ParamPPoly> coords) {
  if (coords.size() != target.nvars())
    throw InputError("map " + name + ": expected " + std::to_string(target.nvars()) + " coordinates");
  if (!same_field(source.field(), target.field())) throw InputError("map " + name + ": endpoints over different fields");
  for (const auto& c : coords) {
    if (c.nvars() != source.nvars()) throw InputError("map " + name + ": coordinate in the wrong number of variables");
    if (c.zero().nvars() != coords[0].zero().nvars()) throw InputError("map " + name + ": inconsistent parameters");
    if (!same_field(c.field(), source.field())) throw InputError("map " + name + ": coordinate over a different field");
  }
  return {std::move(name), std::move(source), std::move(target), std::move(coords)};
}

std::string PPolyMap::to_string(std::span<const std::string> param_names) const {
  std::string out = "map " + name + " from=" + source.name() + " to=" + target.name() + " :";
  for (std::size_t t = 0; t < coords.size(); ++t) {
    std::string rhs = coords[t].is_zero() ? "0" : coords[t].to_string(source.var_names(), param_names);
    out += (t ? " ; " : " ") + target.var_names()[t] + " -> " + rhs;
  }
  return out;
}

PPolyMap identity_map(const Endpoint& e, std::size_t nparams) {
  std::vector<ParamPPoly> coords;
  for (std::size_t i = 0; i < e.nvars(); ++i)
    coords.push_back(ParamPPoly::term(Poly::constant(FieldElem::constant(e.field(), 1), nparams), e.nvars(),
                                      static_cast<std::uint32_t>(i), 0));
  return PPolyMap::make("id", e, e, std::move(coords));
}

PPolyMap canonical_form(const PPolyMap& m, const ParamRing* params) {
  PPolyMap out = m;
  const std::size_t np = m.nparams();
  std::optional<RelationSet> prels;
  if (params && !params->relations.empty()) {
    if (params->size() != np) throw InputError("canonical_form: parameter count mismatch");
    prels = params->relation_set();
  }
  for (auto& c : out.coords) {
    if (!m.source.is_line()) {
      const auto& g = m.source.group();
      c = reduce_mod(c, lift(g.equation, np), g.pivot).remainder;
    }
    if (prels) {
      ParamPPoly r = make_param_ppoly(c.field(), c.nvars(), np);
      for (const auto& [k, v] : c.terms()) r.add_term(k.var, k.e, normal_form(v, *prels));
      c = std::move(r);
    }
  }
  return out;
}

PPolyMap compose(const PPolyMap& g, const PPolyMap& f) {
  if (g.source.nvars() != f.target.nvars() || g.source.name() != f.target.name())
    throw InputError("compose: " + g.name + " does not start where " + f.name + " ends");
  if (g.nparams() != f.nparams()) throw InputError("compose: parameter count mismatch");
  std::vector<ParamPPoly> coords;
  for (const auto& c : g.coords) coords.push_back(c.compose(f.coords));
  return PPolyMap::make(g.name + "*" + f.name, f.source, g.target, std::move(coords));
}

namespace {

RelationSet map_relations(const Endpoint& source, const ParamRing& params, std::size_t np) {
  if (params.size() != np) throw InputError("parameter ring does not match the map's parameters");
  RelationSet rels(source.field(), source.nvars() + np);
  source.add_relation(rels, 0);
  params.add_relations(rels, source.nvars());
  return rels;
}

}  // namespace

IdentityCheck hom_check(const PPolyMap& m, const ParamRing& params) {
  const std::size_t np = m.nparams();
  RelationSet rels = map_relations(m.source, params, np);
  const std::string label = m.name + " lands in " + m.target.name();
  if (m.target.is_line()) return make_identity_check(label, Poly(m.source.field(), rels.nvars()), std::move(rels));
  ParamPPoly composed = lift(m.target.group().equation, np).compose(m.coords);
  return make_identity_check(label, to_poly(composed), std::move(rels));
}

bool verify_hom(const PPolyMap& m, const ParamRing& params) { return hom_check(m, params).vanishes; }

PPolyMap relative_frobenius_map(const HypersurfaceGroup& g, std::uint32_t n) {
  std::vector<ParamPPoly> coords;
  for (std::size_t i = 0; i < g.nvars(); ++i)
    coords.push_back(ParamPPoly::term(Poly::constant(FieldElem::constant(g.field(), 1), 0), g.nvars(),
                                      static_cast<std::uint32_t>(i), n));
  return PPolyMap::make("frob" + std::to_string(n), Endpoint::group(g), Endpoint::group(twist_group(g, n)),
                        std::move(coords));
}

bool MutualInverseReport::holds() const {
  for (const auto* c : all())
    if (!c->vanishes) return false;
  return true;
}

std::vector<const IdentityCheck*> MutualInverseReport::all() const {
  std::vector<const IdentityCheck*> out{&f_hom, &g_hom};
  for (const auto& c : g_after_f) out.push_back(&c);
  for (const auto& c : f_after_g) out.push_back(&c);
  return out;
}

namespace {

std::vector<IdentityCheck> identity_checks(const PPolyMap& loop, const ParamRing& params) {
  const std::size_t np = loop.nparams();
  const PPolyMap id = identity_map(loop.source, np);
  std::vector<IdentityCheck> out;
  for (std::size_t i = 0; i < loop.coords.size(); ++i) {
    out.push_back(make_identity_check(loop.name + " coordinate " + loop.target.var_names()[i] + " is identity",
                                      to_poly(loop.coords[i] - id.coords[i]), map_relations(loop.source, params, np)));
  }
  return out;
}

}  // namespace

MutualInverseReport verify_mutual_inverse(const PPolyMap& f, const PPolyMap& g, const ParamRing& params) {
  if (f.source.name() != g.target.name() || f.target.name() != g.source.name())
    throw InputError("verify_mutual_inverse: " + f.name + " and " + g.name + " are not opposite");
  return {hom_check(f, params), hom_check(g, params), identity_checks(compose(g, f), params),
          identity_checks(compose(f, g), params)};
}

std::vector<std::string> ConstraintSystem::names() const {
  std::vector<std::string> out;
  for (const auto& u : unknowns) out.push_back(u.name);
  return out;
}

std::string ConstraintSystem::to_string() const {
  const auto n = names();
  std::string out;
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    out += ansatz.source.var_names()[positions[i].var] + "^(p^" + std::to_string(positions[i].e) + "): ";
    out += constraints[i].to_string(n) + "\n";
  }
  return out;
}

AnsatzBounds default_bounds(const Endpoint& source, const Endpoint& target) {
  AnsatzBounds b(source.nvars(), source.max_exponent() + target.max_exponent());
  if (!source.is_line()) {
    const auto& g = source.group();
    const std::uint32_t top = *g.equation.top_exponent(g.pivot);
    b[g.pivot] = top ? top - 1 : 0;
  }
  return b;
}

ConstraintSystem derive_hom_constraints(const Endpoint& source, const Endpoint& target,
                                        std::optional<AnsatzBounds> bounds) {
  if (!same_field(source.field(), target.field())) throw InputError("derive: endpoints over different fields");
  const AnsatzBounds caps = bounds ? *bounds : default_bounds(source, target);
  if (caps.size() != source.nvars()) throw InputError("derive: one exponent cap per source variable is required");
  // exponents allowed per variable; a pivot of top exponent 0 allows none
  std::vector<std::uint32_t> slots(caps.size());
  for (std::size_t i = 0; i < caps.size(); ++i) slots[i] = caps[i] + 1;
  if (!source.is_line()) {
    const auto& g = source.group();
    const std::uint32_t top = *g.equation.top_exponent(g.pivot);
    if (top == 0)
      slots[g.pivot] = 0;
    else if (caps[g.pivot] >= top)
      throw InputError("derive: pivot cap must stay below the pivot exponent " + std::to_string(top));
  }

  ConstraintSystem cs{{}, {}, {}, identity_map(source)};
  for (std::size_t t = 0; t < target.nvars(); ++t)
    for (std::size_t i = 0; i < source.nvars(); ++i)
      for (std::uint32_t e = 0; e < slots[i]; ++e)
        cs.unknowns.push_back(
            {t, i, e, "u_" + std::to_string(t) + "_" + std::to_string(i) + "_" + std::to_string(e)});

  const std::size_t nu = cs.unknowns.size();
  const FieldPtr& field = source.field();
  std::vector<ParamPPoly> coords(target.nvars(), make_param_ppoly(field, source.nvars(), nu));
  for (std::size_t j = 0; j < nu; ++j) {
    const auto& u = cs.unknowns[j];
    coords[u.coord].add_term(static_cast<std::uint32_t>(u.var), u.e, Poly::variable(field, nu, j));
  }
  cs.ansatz = PPolyMap::make("ansatz", source, target, std::move(coords));
  if (target.is_line()) return cs;

  ParamPPoly composed = lift(target.group().equation, nu).compose(cs.ansatz.coords);
  if (!source.is_line()) {
    const auto& g = source.group();
    composed = reduce_mod(composed, lift(g.equation, nu), g.pivot).remainder;
  }
  for (const auto& [k, c] : composed.terms()) {
    cs.positions.push_back(k);
    cs.constraints.push_back(make_monic(c));
  }
  return cs;
}

Poly make_monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * p.leading_term().second.inverse();
}

std::vector<FieldElem> polynomial_domain(const FieldPtr& field, std::uint32_t degree) {
  const std::uint64_t q = field->fq().q();
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i <= degree; ++i) {
    count *= q;
    if (count > 10'000'000) throw InputError("coefficient domain too large");
  }
  const FieldElem a = FieldElem::gen_root(field, 0);
  std::vector<FieldElem> out;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    FieldElem x(field);
    FieldElem power = FieldElem::constant(field, 1);
    for (std::uint64_t r = k; r > 0; r /= q) {
      x += FieldElem::from_fq(field, static_cast<FiniteField::Elem>(r % q)) * power;
      power *= a;
    }
    out.push_back(std::move(x));
  }
  return out;
}

SolveResult solve_homs_bounded(const ConstraintSystem& cs, const std::vector<FieldElem>& domain,
                               const SolveOptions& opts) {
  const std::size_t nu = cs.unknowns.size();
  const FieldPtr& field = cs.ansatz.source.field();
  SolveResult res;

  std::vector<std::vector<std::size_t>> uses;
  for (const auto& c : cs.constraints) {
    std::set<std::size_t> vs;
    for (const auto& [e, coef] : c.terms())
      for (std::size_t j = 0; j < nu; ++j)
        if (e[j]) vs.insert(j);
    if (vs.empty() && !c.is_zero()) {
      res.complete = true;  // a nonzero constant constraint has no solutions
      return res;
    }
    uses.emplace_back(vs.begin(), vs.end());
  }

  // Order unknowns so that constraints close as early as possible.
  std::vector<std::size_t> order;
  std::vector<bool> placed(nu, false);
  std::vector<bool> closed(uses.size(), false);
  while (true) {
    std::optional<std::size_t> best;
    std::size_t best_open = 0;
    for (std::size_t c = 0; c < uses.size(); ++c) {
      if (closed[c]) continue;
      std::size_t open = 0;
      for (auto j : uses[c]) open += !placed[j];
      if (!best || open < best_open) {
        best = c;
        best_open = open;
      }
    }
    if (!best) break;
    closed[*best] = true;
    for (auto j : uses[*best])
      if (!placed[j]) {
        placed[j] = true;
        order.push_back(j);
      }
  }
  for (std::size_t j = 0; j < nu; ++j)
    if (!placed[j]) order.push_back(j);

  std::vector<std::size_t> position(nu);
  for (std::size_t k = 0; k < nu; ++k) position[order[k]] = k;
  std::vector<std::vector<std::size_t>> checks_at(nu);
  for (std::size_t c = 0; c < uses.size(); ++c) {
    std::size_t last = 0;
    for (auto j : uses[c]) last = std::max(last, position[j]);
    checks_at[last].push_back(c);
  }

  std::vector<FieldElem> values(nu, FieldElem(field));
  bool aborted = false;
  std::function<void(std::size_t)> dfs = [&](std::size_t pos) {
    if (pos == nu) {
      res.assignments.push_back(values);
      return;
    }
    for (const auto& v : domain) {
      if (++res.visited > opts.max_nodes) {
        aborted = true;
        return;
      }
      values[order[pos]] = v;
      bool ok = true;
      for (auto c : checks_at[pos]) {
        if (!cs.constraints[c].evaluate(values).is_zero()) {
          ok = false;
          break;
        }
      }
      if (ok) dfs(pos + 1);
      if (aborted) return;
    }
    values[order[pos]] = FieldElem(field);
  };
  dfs(0);
  res.complete = !aborted;
  for (std::size_t s = 0; s < res.assignments.size(); ++s) {
    PPolyMap m = instantiate(cs.ansatz, res.assignments[s]);
    m.name = "hom" + std::to_string(s + 1);
    res.maps.push_back(std::move(m));
  }
  return res;
}

PPolyMap instantiate(const PPolyMap& m, std::span<const FieldElem> values) {
  if (values.size() != m.nparams()) throw InputError("instantiate: expected " + std::to_string(m.nparams()) + " values");
  std::vector<ParamPPoly> coords;
  for (const auto& c : m.coords) {
    ParamPPoly r = make_param_ppoly(c.field(), c.nvars(), 0);
    for (const auto& [k, v] : c.terms()) r.add_term(k.var, k.e, Poly::constant(v.evaluate(values), 0));
    coords.push_back(std::move(r));
  }
  return PPolyMap::make(m.name, m.source, m.target, std::move(coords));
}

}  // namespace wound
