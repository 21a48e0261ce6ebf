#include <doctest.h>

#include "support.hpp"
#include "wound/errors.hpp"

using namespace wound;
using namespace wound::test;

namespace {

const auto XY = names({"X", "Y"});
const auto XYZ = names({"X", "Y", "Z"});

}  // namespace

TEST_CASE("evaluate") {
  const auto k = k3();
  const auto fw = pp(k, "X + X^3 + a*Y^3", XY);
  const std::vector<FieldElem> zero{el(k, "0"), el(k, "0")};
  CHECK(evaluate(fw, zero).is_zero());
  const auto fu = pp(k, "X^3 - X + a*Y^3", XY);
  const std::vector<FieldElem> one{el(k, "1"), el(k, "0")};
  CHECK(evaluate(fu, one).is_zero());
  const std::vector<FieldElem> pt{el(k, "a"), el(k, "1")};
  CHECK(evaluate(fw, pt) == el(k, "a^3 + 2*a"));
  CHECK_THROWS_AS(evaluate(fw, std::span<const FieldElem>(one.data(), 1)), InputError);
}

TEST_CASE("W_a is parametrized by the line over the depth-1 tower") {
  const auto k1 = k3(1);
  const auto fw = pp(k1, "X + X^3 + a*Y^3", XY);
  const auto T = names({"T"});
  const std::vector<Poly> g{poly(k1, "-T^3", T), poly(k1, "a^(-1/p^1)*(T + T^3)", T)};
  CHECK(evaluate(fw, g).is_zero());
}

TEST_CASE("compose") {
  const auto k = k3();
  const auto T = names({"T"});
  const auto t = pp(k, "T", T), t3 = pp(k, "T^3", T);
  const std::vector<PPoly> id{t};
  CHECK(t3.compose(id) == t3);
  const std::vector<PPoly> frob{t3};
  CHECK(t3.compose(frob) == pp(k, "T^9", T));
  const auto f = pp(k, "a*T + T^3", T);
  const std::vector<PPoly> inner{pp(k, "T + a*T^3", T)};
  // (T + aT^3) a + (T + aT^3)^3
  CHECK(f.compose(inner) == pp(k, "a*T + (a^2 + 1)*T^3 + a^3*T^9", T));
  CHECK_THROWS_AS(f.compose(std::span<const PPoly>{}), InputError);
}

TEST_CASE("principal and linear parts") {
  const auto k = k3();
  const auto fw = pp(k, "X + X^3 + a*Y^3", XY);
  CHECK(fw.principal_part() == pp(k, "X^3 + a*Y^3", XY));
  CHECK(fw.linear_part() == pp(k, "X", XY));
  CHECK(fw.is_smooth());
  const auto x = pp(k, "X", XY);
  CHECK(x.principal_part() == x);
  CHECK_FALSE(pp(k, "X^3", XY).is_smooth());
  const auto fv = pp(k, "X^9 - X + a*Y^9", XY);
  CHECK(fv.linear_part() == pp(k, "-X", XY));
  CHECK(fv.is_smooth());
  const auto k2f = k2();
  CHECK(pp(k2f, "X^4 + X + a*Y^2 + a^2*Z^8", XYZ).principal_part() == pp(k2f, "X^4 + a*Y^2 + a^2*Z^8", XYZ));
}

TEST_CASE("twist") {
  const auto k = k3();
  const auto fw = pp(k, "X + X^3 + a*Y^3", XY);
  CHECK(fw.twist(1) == pp(k, "X + X^3 + a^3*Y^3", XY));
  CHECK(fw.twist(0) == fw);
  CHECK(pp(k, "X^9 - X + a*Y^9", XY).twist(2) == pp(k, "X^9 - X + a^9*Y^9", XY));
}

TEST_CASE("reduce_mod examples") {
  const auto k = k3();
  const auto fv = pp(k, "X^9 - X + a*Y^9", XY);
  CHECK(reduce_mod(pp(k, "X^9", XY), fv, 0).remainder == pp(k, "X - a*Y^9", XY));
  const auto r3 = reduce_mod(pp(k, "X^27", XY), fv, 0);
  CHECK(r3.remainder == pp(k, "X^3 - a^3*Y^27", XY));
  CHECK(r3.steps.size() == 1);
  CHECK(reduce_mod(fv, fv, 0).remainder.is_zero());
  CHECK_THROWS_AS(reduce_mod(pp(k, "X", XY), pp(k, "Y^3", XY), 0), PreconditionError);
  CHECK(default_pivot(fv) == 1);
  CHECK(default_pivot(pp(k, "X^9 - X", XY)) == 0);
}

TEST_CASE("reduce_mod of a general polynomial") {
  const auto k = k3();
  const auto fv = pp(k, "X^9 - X + a*Y^9", XY);
  const auto h = poly(k, "X^10*Y + X^18 + a*X*Y", XY);
  const auto r = reduce_mod(h, fv, 0);
  CHECK(r.replay(fv) == h);
  CHECK(r.remainder.degree_in(0) < 9);
  CHECK(r.remainder == reduce_mod(r.remainder, fv, 0).remainder);
}

TEST_CASE("parameter coefficients") {
  const auto k = k3();
  const auto pr = names({"d", "e"});
  const auto m = parse_param_ppoly("d^3*X + d*X^3", k, names({"X"}), pr);
  CHECK(m.nvars() == 1);
  CHECK(m.coefficient(0, 1) == poly(k, "d", pr));
  CHECK(to_poly(m) == poly(k, "d^3*X + d*X^3", names({"X", "d", "e"})));
  CHECK_THROWS_AS(parse_param_ppoly("X^2", k, names({"X"}), pr), InputError);
}

TEST_CASE("division properties on random pairs") {
  const auto k = k3();
  Gen g(2024);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + g.below(3);
    PPoly f = g.ppoly(k, n, 3, 2, 1 + g.below(4));
    if (f.is_zero()) continue;
    const std::size_t pivot = f.variables()[g.below(f.variables().size())];
    const PPoly h = g.ppoly(k, n, 3, 2, g.below(6));
    const auto r = reduce_mod(h, f, pivot);
    CHECK(r.replay(f) == h);
    if (auto top = r.remainder.top_exponent(pivot)) CHECK(*top < *f.top_exponent(pivot));
    CHECK(reduce_mod(r.remainder, f, pivot).remainder == r.remainder);
    const auto s = static_cast<std::uint32_t>(g.below(3));
    const PPoly shifted = h + g.nonzero_polynomial(k, 2) * f.raised(s);
    CHECK(reduce_mod(shifted, f, pivot).remainder == r.remainder);
  }
}

TEST_CASE("evaluation is additive") {
  const auto k = k3();
  Gen g(77);
  for (int i = 0; i < 100; ++i) {
    const PPoly f = g.ppoly(k, 2, 2, 2, 4);
    const std::vector<FieldElem> x{g.rational(k, 2), g.rational(k, 2)}, y{g.rational(k, 2), g.rational(k, 2)};
    const std::vector<FieldElem> s{x[0] + y[0], x[1] + y[1]};
    CHECK(evaluate(f, s) == evaluate(f, x) + evaluate(f, y));
  }
}

TEST_CASE("relative Frobenius identity") {
  const auto k = k3();
  Gen g(9);
  for (int i = 0; i < 100; ++i) {
    const PPoly f = g.ppoly(k, 2, 2, 2, 4);
    const auto n = static_cast<std::uint32_t>(g.below(3));
    const std::vector<FieldElem> x{g.rational(k, 2), g.rational(k, 2)};
    const std::vector<FieldElem> fx{frobenius(x[0], n), frobenius(x[1], n)};
    CHECK(evaluate(f.twist(n), fx) == frobenius(evaluate(f, x), n));
  }
}

TEST_CASE("printing and round trip") {
  const auto k = k3();
  const auto fv = pp(k, "X^9 - X + a*Y^9", XY);
  const auto text = fv.to_string(XY);
  CHECK(pp(k, text, XY) == fv);
  Gen g(31);
  for (int i = 0; i < 100; ++i) {
    const PPoly f = g.ppoly(k, 3, 3, 2, 5);
    CHECK(pp(k, f.to_string(XYZ), XYZ) == f);
  }
}
