#include "wound/corpus.hpp"

#include <algorithm>

namespace wound::corpus {

namespace {

FieldElem num(const FieldPtr& f, std::int64_t v) { return FieldElem::constant(f, v); }
FieldElem gen(const FieldPtr& f) { return FieldElem::gen_root(f, 0); }

PPoly term(const FieldElem& c, std::size_t n, std::uint32_t var, std::uint32_t e) { return PPoly::term(c, n, var, e); }

ParamPPoly pterm(const Poly& c, std::size_t n, std::uint32_t var, std::uint32_t e) {
  return ParamPPoly::term(c, n, var, e);
}

std::uint32_t pp(const FieldPtr& f) { return f->p(); }

}  // namespace

HypersurfaceGroup w_a(const FieldPtr& f) {
  PPoly eq = term(num(f, 1), 2, 0, 0) + term(num(f, 1), 2, 0, 1) + term(gen(f), 2, 1, 1);
  return HypersurfaceGroup::make("W_a", {"X", "Y"}, std::move(eq), 1);
}

HypersurfaceGroup v_a(const FieldPtr& f, const std::string& name) {
  PPoly eq = term(num(f, 1), 2, 0, 2) - term(num(f, 1), 2, 0, 0) + term(gen(f), 2, 1, 2);
  return HypersurfaceGroup::make(name, {"X", "Y"}, std::move(eq), 0);
}

HypersurfaceGroup u(const FieldPtr& f) {
  PPoly eq = term(num(f, 1), 2, 0, 1) - term(num(f, 1), 2, 0, 0) + term(gen(f), 2, 1, 1);
  return HypersurfaceGroup::make("U", {"X", "Y"}, std::move(eq), 0);
}

HypersurfaceGroup w(const FieldPtr& f) {
  PPoly eq = term(num(f, 1), 2, 0, 2) - term(num(f, 1), 2, 0, 0) + term(gen(f), 2, 1, 1);
  return HypersurfaceGroup::make("W", {"X", "Y"}, std::move(eq), 0);
}

HypersurfaceGroup w_2(const FieldPtr& f) {
  const FieldElem a = gen(f);
  PPoly eq = term(num(f, 1), 3, 0, 2) + term(num(f, 1), 3, 0, 0) + term(a, 3, 1, 1) + term(a * a, 3, 2, 3);
  return HypersurfaceGroup::make("W_2", {"X", "Y", "Z"}, std::move(eq), 2);
}

CocycleExtension gabber(const FieldPtr& f) {
  const std::uint32_t p = pp(f);
  auto var = [&](std::size_t i, std::uint32_t k = 1) { return Poly::variable(f, 4, i, k); };
  // variables x, y, x', y'
  Poly h1 = var(0) * var(2, p) - var(0, p) * var(2);
  Poly h2 = var(0) * var(3, p) - var(2) * var(1, p);
  return CocycleExtension::make("U_a", w_a(f), v_a(f), {std::move(h1), std::move(h2)});
}

ParamRing w_point_params(const FieldPtr& f) {
  ParamRing r{f, {"d", "e"}, {}};
  r.add_relation(term(num(f, 1), 2, 0, 2) - term(num(f, 1), 2, 0, 0) + term(gen(f), 2, 1, 1), 0);
  return r;
}

PPolyMap phi_b(const FieldPtr& f) {
  const std::uint32_t p = pp(f);
  const Poly d = Poly::variable(f, 2, 0), e = Poly::variable(f, 2, 1);
  ParamPPoly c1 = pterm(d.pow(p), 2, 0, 0) + pterm(d, 2, 0, 1);
  ParamPPoly c2 = pterm(e, 2, 0, 0) + pterm(d, 2, 1, 1);
  return PPolyMap::make("phi_b", Endpoint::group(v_a(f, "V")), Endpoint::group(u(f)), {std::move(c1), std::move(c2)});
}

ParamRing w2_point_params(const FieldPtr& f) {
  ParamRing r{f, {"X'", "Y'", "Z'"}, {}};
  r.add_relation(w_2(f).equation, 2);
  return r;
}

PPolyMap b2_map(const FieldPtr& f) {
  const FieldElem a = gen(f);
  auto prm = [&](std::size_t i, std::uint32_t k = 1) { return Poly::variable(f, 3, i, k); };
  // b_2((X', Y', Z'), (X, Y)) regrouped by the terms X, X^2, Y, Y^2
  ParamPPoly c1 = pterm(prm(0, 2) + prm(2, 4) * a, 2, 0, 0) + pterm(prm(0), 2, 0, 1) + pterm(prm(2, 2) * a, 2, 1, 1);
  ParamPPoly c2 = pterm(prm(1), 2, 0, 0) + pterm(prm(2, 2), 2, 0, 1) + pterm(prm(2), 2, 1, 0) + pterm(prm(0), 2, 1, 1);
  return PPolyMap::make("b_2", Endpoint::group(v_a(f, "V")), Endpoint::group(u(f)), {std::move(c1), std::move(c2)});
}

PPolyMap w_a_to_line(const FieldPtr& f) {
  if (f->depth() < 1) throw PreconditionError("the splitting of W_a needs a^(1/p)");
  const Poly one = Poly::constant(num(f, 1), 0);
  const FieldElem r = FieldElem::gen_root(f, 1);
  return PPolyMap::make("f", Endpoint::group(w_a(f)), Endpoint::line(f), {pterm(one, 2, 0, 0) + pterm(one * r, 2, 1, 0)});
}

PPolyMap line_to_w_a(const FieldPtr& f) {
  if (f->depth() < 1) throw PreconditionError("the splitting of W_a needs a^(1/p)");
  const Poly one = Poly::constant(num(f, 1), 0);
  const FieldElem ri = FieldElem::gen_root(f, 1).inverse();
  return PPolyMap::make("g", Endpoint::line(f), Endpoint::group(w_a(f)),
                        {-pterm(one, 1, 0, 1), pterm(one * ri, 1, 0, 0) + pterm(one * ri, 1, 0, 1)});
}

PPolyMap twisted_to_line(const FieldPtr& f) {
  const Poly one = Poly::constant(num(f, 1), 0);
  return PPolyMap::make("f1", Endpoint::group(twist_group(w_a(f), 1)), Endpoint::line(f),
                        {pterm(one, 2, 0, 0) + pterm(one * gen(f), 2, 1, 0)});
}

PPolyMap line_to_twisted(const FieldPtr& f) {
  const Poly one = Poly::constant(num(f, 1), 0);
  const FieldElem ai = gen(f).inverse();
  return PPolyMap::make("g1", Endpoint::line(f), Endpoint::group(twist_group(w_a(f), 1)),
                        {-pterm(one, 1, 0, 1), pterm(one * ai, 1, 0, 0) + pterm(one * ai, 1, 0, 1)});
}

std::vector<Poly> expected_v_to_u_constraints(const FieldPtr& f, const ConstraintSystem& cs) {
  const std::size_t nu = cs.unknowns.size();
  const std::uint32_t p = pp(f);
  auto sym = [&](const std::string& name) {
    for (std::size_t j = 0; j < nu; ++j)
      if (cs.unknowns[j].name == name) return Poly::variable(f, nu, j);
    return Poly(f, nu);
  };
  const FieldElem a = gen(f);
  const Poly c = sym("u_0_0_0"), d = sym("u_0_0_1"), e = sym("u_1_0_0"), ff = sym("u_1_0_1");
  std::vector<Poly> out;
  out.push_back(c - d.pow(p) - ff.pow(p) * a);
  out.push_back(d - c.pow(p) - e.pow(p) * a);
  // coefficient of Y^(p^j) in F(Y)^p - F(Y) + aG(Y)^p - (a d^p + a^2 f^p) Y^(p^2)
  std::uint32_t top = 0;
  for (const auto& un : cs.unknowns)
    if (un.var == 1) top = std::max(top, un.e + 1);
  for (std::uint32_t j = 0; j <= top; ++j) {
    Poly coef = sym("u_0_1_" + std::to_string(j)) * num(f, -1);
    if (j > 0) {
      coef += sym("u_0_1_" + std::to_string(j - 1)).pow(p);
      coef += sym("u_1_1_" + std::to_string(j - 1)).pow(p) * a;
    }
    if (j == 2) coef -= d.pow(p) * a + ff.pow(p) * (a * a);
    out.push_back(coef);
  }
  std::vector<Poly> monic;
  for (auto& x : out)
    if (!x.is_zero()) monic.push_back(make_monic(x));
  return monic;
}

bool Run::passed() const {
  return std::all_of(items.begin(), items.end(), [](const Item& i) { return i.passed; });
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

class Runner {
 public:
  Runner(std::uint32_t p, const DecisionOptions& opts) : opts_(opts) { run_.p = p; }

  Run finish() { return std::move(run_); }

  void item(std::string name, bool ok, std::string detail) { run_.items.push_back({std::move(name), ok, std::move(detail)}); }

  const IdentityCheck& record(const IdentityCheck& c) {
    run_.identities.push_back(c);
    return c;
  }

  bool record_all(const std::vector<IdentityCheck>& cs) {
    bool all = true;
    for (const auto& c : cs) all = record(c).vanishes && all;
    return all;
  }

  void classify_wound(const HypersurfaceGroup& g) {
    const auto r = classify(g, opts_);
    const bool certified = r.wound.verdict == Verdict::NoZero && check_decision(g.equation.principal_part(), r.wound);
    const bool ok = r.smooth && r.connected == Connected::Yes && certified && r.dimension == g.nvars() - 1;
    item("classify " + g.name, ok,
         "smooth=" + yes_no(r.smooth) + " connected=" + yes_no(r.connected == Connected::Yes) +
             " wound=" + to_string(r.wound.verdict) + " (" + to_string(r.wound.stage) + ") dimension=" +
             std::to_string(r.dimension));
  }

  void hom(const std::string& name, const PPolyMap& m, const ParamRing& params, bool expect = true) {
    const bool v = record(hom_check(m, params)).vanishes;
    item(name, v == expect, std::string("lands in ") + m.target.name() + ": " + yes_no(v));
  }

  void mutual_inverse(const std::string& name, const PPolyMap& f, const PPolyMap& g) {
    const auto rep = verify_mutual_inverse(f, g, ParamRing::none(f.source.field()));
    for (const auto* c : rep.all()) record(*c);
    item(name, rep.holds(),
         "f hom=" + yes_no(rep.f_hom.vanishes) + " g hom=" + yes_no(rep.g_hom.vanishes) +
             " inverse=" + yes_no(rep.holds()));
  }

  const DecisionOptions& opts() const { return opts_; }

 private:
  DecisionOptions opts_;
  Run run_;
};

void run_odd(Runner& r, std::uint32_t p) {
  const FieldPtr k = Field::make({p, 1, "a", 0});
  const FieldPtr k1 = extend_depth(k, 1);

  r.classify_wound(w_a(k));
  r.classify_wound(v_a(k));
  r.classify_wound(u(k));
  r.classify_wound(w(k));

  r.mutual_inverse("W_a ~ Ga over k(a^(1/p))", w_a_to_line(k1), line_to_w_a(k1));

  const CocycleExtension ext = gabber(k);
  const AxiomReport ax = check_group_axioms(ext);
  for (const auto& axiom : ax.axioms) {
    const bool ok = r.record_all(axiom.components);
    r.item("U_a " + axiom.name, ok, axiom.name + ": " + yes_no(ok));
  }
  {
    const bool comm = r.record_all(commutativity_checks(ext));
    r.item("U_a non-commutative", !comm, "commutative: " + std::string(comm ? "true" : "false"));
  }

  {
    const auto cs = derive_hom_constraints(Endpoint::group(v_a(k, "V")), Endpoint::group(u(k)));
    auto key = [&](const Poly& x) { return x.to_string(cs.names()); };
    std::vector<std::string> got, want;
    for (const auto& c : cs.constraints) got.push_back(key(c));
    for (const auto& c : expected_v_to_u_constraints(k, cs)) want.push_back(key(c));
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    r.item("Hom(V,U) constraints", got == want,
           std::to_string(got.size()) + " constraints, " + std::to_string(cs.unknowns.size()) + " unknowns");
  }
  r.hom("phi_b lands in U on W-points", phi_b(k), w_point_params(k));
  r.hom("phi_b needs the W relation", phi_b(k), ParamRing{k, {"d", "e"}, {}}, false);

  {
    const auto tw = twist_group(w_a(k), 1);
    const auto c = classify(tw, r.opts());
    const std::vector<FieldElem> expect{-gen(k), num(k, 1)};
    const bool ok = c.wound.verdict == Verdict::Zero && c.wound.witness == expect;
    std::string wit;
    for (const auto& x : c.wound.witness) wit += (wit.empty() ? "" : ",") + x.to_string();
    r.item("W_a^(p) not wound", ok, "wound=" + to_string(c.wound.verdict) + " witness=(" + wit + ")");
  }
  r.mutual_inverse("W_a^(p) ~ Ga over k", twisted_to_line(k), line_to_twisted(k));
  r.hom("relative Frobenius W_a -> W_a^(p)", relative_frobenius_map(w_a(k), 1), ParamRing::none(k));
  r.hom("relative Frobenius V_a -> V_a^(p^2)", relative_frobenius_map(v_a(k), 2), ParamRing::none(k));
}

void run_two(Runner& r) {
  const FieldPtr k = Field::make({2, 1, "a", 0});
  r.classify_wound(w_2(k));
  r.hom("b_2 lands in U on W_2-points", b2_map(k), w2_point_params(k));
  r.hom("b_2 needs the W_2 relation", b2_map(k), ParamRing{k, {"X'", "Y'", "Z'"}, {}}, false);
}

}  // namespace

Run run(std::uint32_t p, const DecisionOptions& opts) {
  if (p != 2 && p != 3 && p != 5) throw InputError("the example suite runs for p = 2, 3 or 5");
  Runner r(p, opts);
  if (p == 2)
    run_two(r);
  else
    run_odd(r, p);
  return r.finish();
}

}  // namespace wound::corpus
