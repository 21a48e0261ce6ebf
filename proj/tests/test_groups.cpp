#include <doctest.h>

#include "support.hpp"
#include "wound/corpus.hpp"
#include "wound/errors.hpp"
#include "wound/groups.hpp"
#include "wound/homs.hpp"

using namespace wound;
using namespace wound::test;

namespace {

const auto XY = names({"X", "Y"});
const auto V2 = names({"x", "y", "x'", "y'"});

HypersurfaceGroup group(const FieldPtr& k, const std::string& name, const std::string& eq,
                        std::optional<std::size_t> pivot = std::nullopt) {
  const auto vars = names({"x", "y"});
  return HypersurfaceGroup::make(name, vars, pp(k, eq, vars), pivot);
}

CocycleExtension extension(const FieldPtr& k, const std::string& h1, const std::string& h2 = "0") {
  return CocycleExtension::make("E", group(k, "W", "x + x^3 + a*y^3", 1), group(k, "V", "x^9 - x + a*y^9", 0),
                                {poly(k, h1, V2), poly(k, h2, V2)});
}

}  // namespace

TEST_CASE("classification of the standard groups") {
  const auto k = k3();
  for (const auto& g : {corpus::w_a(k), corpus::v_a(k), corpus::u(k)}) {
    CAPTURE(g.name);
    const auto r = classify(g);
    CHECK(r.smooth);
    CHECK(r.connected == Connected::Yes);
    CHECK(r.wound.verdict == Verdict::NoZero);
    CHECK(r.dimension == 1);
  }
  const auto wa = classify(corpus::w_a(k));
  REQUIRE(wa.connected_via.has_value());
  CHECK(*wa.connected_via == 1);
  const auto line = classify(group(k, "L", "y"));
  CHECK(line.wound.verdict == Verdict::Zero);
  CHECK(line.wound.witness == std::vector<FieldElem>{el(k, "1"), el(k, "0")});
  CHECK_FALSE(classify(group(k, "N", "x^3 + a*y^3")).smooth);
}

TEST_CASE("group construction errors") {
  const auto k = k3();
  CHECK_THROWS_AS(group(k, "Z", "0"), InputError);
  CHECK_THROWS_AS(group(k, "P", "x + y^3", 5), InputError);
  CHECK_THROWS_AS(group(k, "Q", "x^3", 1), PreconditionError);
}

TEST_CASE("maps landing in a group") {
  const auto k = k3();
  const auto g = corpus::gabber(k);
  RelationSet src(k, 4);
  g.base.add_relation(src, 0);
  g.base.add_relation(src, 2);
  CHECK(check_lands_in(g.h, src, g.center));
  const std::vector<Poly> zero{Poly(k, 4), Poly(k, 4)};
  CHECK(check_lands_in(zero, src, corpus::u(k)));
  const std::vector<Poly> bad{poly(k, "x", V2), Poly(k, 4)};
  CHECK_FALSE(check_lands_in(bad, src, g.center));
  // b((X', Y'), (X, Y)) = (X X'^p + X^p X', X Y' + X' Y^p) from W x V into U
  const auto W4 = names({"X'", "Y'", "X", "Y"});
  RelationSet wv(k, 4);
  corpus::w(k).add_relation(wv, 0);
  corpus::v_a(k, "V").add_relation(wv, 2);
  const std::vector<Poly> b{poly(k, "X*X'^3 + X^3*X'", W4), poly(k, "X*Y' + X'*Y^3", W4)};
  CHECK(check_lands_in(b, wv, corpus::u(k)));
}

TEST_CASE("bi-additivity") {
  const auto k = k3();
  CHECK(check_biadditive(corpus::gabber(k)));
  CHECK(check_biadditive(extension(k, "x*x'")));
  CHECK_FALSE(check_biadditive(extension(k, "x^2*x'")));
}

TEST_CASE("group axioms") {
  const auto k = k3();
  const auto ga = check_group_axioms(corpus::gabber(k));
  CHECK(ga.group_axioms_hold());
  for (const auto& a : ga.axioms) {
    CAPTURE(a.name);
    CHECK(a.holds());
  }
  CHECK(check_group_axioms(extension(k, "0")).group_axioms_hold());
  const auto bad = check_group_axioms(extension(k, "x + x'"));
  CHECK_FALSE(bad.at("identity").holds());
  CHECK_FALSE(bad.group_axioms_hold());
  CHECK_THROWS_AS(bad.at("no such axiom"), InputError);
}

TEST_CASE("commutativity") {
  const auto k = k3();
  CHECK_FALSE(is_commutative(corpus::gabber(k)));
  CHECK(is_commutative(extension(k, "0")));
  CHECK(is_commutative(extension(k, "x*x'^3 + x^3*x'")));
  CHECK(is_commutative(corpus::gabber(Field::make({2, 1, "a", 0}))));
}

TEST_CASE("twists") {
  const auto k = k3();
  const auto t = twist_group(corpus::w_a(k), 1);
  CHECK(t.equation == pp(k, "X + X^3 + a^3*Y^3", XY));
  const auto r = classify(t);
  CHECK(r.wound.verdict == Verdict::Zero);
  CHECK(r.wound.witness == std::vector<FieldElem>{el(k, "-a"), el(k, "1")});
  CHECK(twist_group(corpus::w_a(k), 0).equation == corpus::w_a(k).equation);
  CHECK(twist_group(corpus::v_a(k), 2).equation == pp(k, "X^9 - X + a^9*Y^9", XY));
  CHECK(verify_hom(relative_frobenius_map(corpus::v_a(k), 2), ParamRing::none(k)));
}

TEST_CASE("twist invariants on random groups") {
  const auto k = k3();
  Gen g(8);
  for (int i = 0; i < 30; ++i) {
    PPoly f = g.ppoly(k, 2, 2, 2, 3);
    f.add_term(0, 0, el(k, "1"));
    f.add_term(1, 2, g.nonzero_polynomial(k, 2));
    if (f.coefficient(0, 0).is_zero() || f.coefficient(1, 2).is_zero()) continue;
    const auto grp = HypersurfaceGroup::make("G", XY, f, 1);
    for (std::uint32_t n = 0; n <= 3; ++n) {
      const auto tw = twist_group(grp, n);
      CHECK(tw.equation == f.twist(n));
      CHECK(tw.pivot == grp.pivot);
      CHECK(classify(tw).smooth == classify(grp).smooth);
      CHECK(verify_hom(relative_frobenius_map(grp, n), ParamRing::none(k)));
    }
  }
}

TEST_CASE("printing") {
  const auto k = k3();
  CHECK(corpus::w_a(k).to_string() == "group W_a vars=X,Y pivot=Y : 1*X^(p^0) + 1*X^(p^1) + a*Y^(p^1)");
}
