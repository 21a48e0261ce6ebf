// Acceptance run: one pass/fail line per criterion, exit status 0 iff all
// pass. Expected values come from the session texts below and from small
// dense F_p oracles written here, not from the library's corpus.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wound/corpus.hpp"
#include "wound/groups.hpp"
#include "wound/homs.hpp"
#include "wound/parse.hpp"
#include "wound/session.hpp"
#include "wound/zero_decision.hpp"

using namespace wound;

namespace {

// ---------------------------------------------------------------------------
// Dense polynomials over F_p in a, coefficients low to high.

using Dense = std::vector<int>;

void dense_trim(Dense& x) {
  while (!x.empty() && x.back() == 0) x.pop_back();
}

Dense dense_mul(const Dense& x, const Dense& y, int p) {
  if (x.empty() || y.empty()) return {};
  Dense r(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p;
  dense_trim(r);
  return r;
}

void dense_add_into(Dense& acc, const Dense& x, int p) {
  if (acc.size() < x.size()) acc.resize(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) acc[i] = (acc[i] + x[i]) % p;
}

// x(a)^(p^n) over F_p: exponents scale, prime-field coefficients stay.
Dense dense_frobenius(const Dense& x, std::uint64_t pn) {
  if (x.empty()) return {};
  Dense r((x.size() - 1) * pn + 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) r[i * pn] = x[i];
  return r;
}

Dense dense_of(const UPoly& u) {
  Dense d(u.begin(), u.end());
  dense_trim(d);
  return d;
}

bool dense_zero(const Dense& x) {
  return std::all_of(x.begin(), x.end(), [](int c) { return c == 0; });
}

// ---------------------------------------------------------------------------

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int number;
  double limit_seconds;
  std::function<Outcome()> body;
};

// Collected for criterion 7.
std::vector<IdentityCheck> g_identities;

void record(const IdentityCheck& c) { g_identities.push_back(c); }
void record(const std::vector<IdentityCheck>& cs) { g_identities.insert(g_identities.end(), cs.begin(), cs.end()); }
void record(const MutualInverseReport& r) {
  for (const auto* c : r.all()) record(*c);
}

class Failures {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok) failed_.push_back(what);
  }
  Outcome outcome(std::string detail) const {
    if (failed_.empty()) return {true, std::move(detail)};
    std::string s = "failed:";
    for (const auto& f : failed_) s += " [" + f + "]";
    return {false, s};
  }

 private:
  std::vector<std::string> failed_;
};

const char* kGroupsP3 = R"(
field p=3 gen=a
group W_a vars=X,Y pivot=Y : X + X^3 + a*Y^3
group V_a vars=x,y pivot=x : x^9 - x + a*y^9
group U vars=X,Y pivot=X : X^3 - X + a*Y^3
extension U_a center=W_a base=V_a : h1 = x*x'^3 - x^3*x' ; h2 = x*y'^3 - x'*y^3
)";

const char* kSplitDepth1 = R"(
field p=3 gen=a depth=1
group W_a vars=X,Y pivot=Y : X + X^3 + a*Y^3
map f from=W_a to=Ga : T -> X + a^(1/p^1)*Y
map g from=Ga to=W_a : X -> -T^3 ; Y -> a^(-1/p^1)*T + a^(-1/p^1)*T^3
)";

const char* kHomVU = R"(
field p=3 gen=a
params d e
relation pivot=d : d^9 - d + a*e^3
group V vars=X,Y pivot=X : X^9 - X + a*Y^9
group U vars=X,Y pivot=X : X^3 - X + a*Y^3
map phi_b from=V to=U : X -> d^3*X + d*X^3 ; Y -> e*X + d*Y^3
)";

const char* kB2 = R"(
field p=2 gen=a
params Xp Yp Zp
relation pivot=Zp : Xp^4 + Xp + a*Yp^2 + a^2*Zp^8
group V vars=X,Y pivot=X : X^4 - X + a*Y^4
group U vars=X,Y pivot=X : X^2 - X + a*Y^2
map b_2 from=V to=U : X -> (Xp^2 + a*Zp^4)*X + Xp*X^2 + a*Zp^2*Y^2 ; Y -> Yp*X + Zp^2*X^2 + Zp*Y + Xp*Y^2
)";

const char* kTwisted = R"(
field p=3 gen=a
group W_a vars=X,Y pivot=Y : X + X^3 + a*Y^3
group W_a_p vars=X,Y pivot=Y : X + X^3 + a^3*Y^3
map f from=W_a_p to=Ga : T -> X + a*Y
map g from=Ga to=W_a_p : X -> -T^3 ; Y -> T/a + T^3/a
)";

// 1. Worked examples at p = 3.
Outcome criterion1() {
  Failures f;
  const auto run = corpus::run(3);
  f.check(run.passed(), "selftest-paper 3");
  record(run.identities);

  const auto s = parse_session(kGroupsP3);
  for (const char* g : {"W_a", "V_a", "U"}) {
    const auto r = classify(s.group(g));
    f.check(r.smooth && r.connected == Connected::Yes && r.wound.verdict == Verdict::NoZero, std::string(g) + " wound");
    f.check(check_decision(s.group(g).equation.principal_part(), r.wound), std::string(g) + " certificate");
  }
  const auto split = parse_session(kSplitDepth1);
  const auto iso = verify_mutual_inverse(split.map("f"), split.map("g"), split.params);
  record(iso);
  f.check(iso.holds(), "W_a ~ Ga over depth 1");

  const auto& ua = s.extension("U_a");
  const auto bi = biadditivity_checks(ua);
  record(bi);
  f.check(std::all_of(bi.begin(), bi.end(), [](const IdentityCheck& c) { return c.vanishes; }), "h bi-additive");
  const auto ax = check_group_axioms(ua);
  for (const auto& a : ax.axioms) record(a.components);
  f.check(ax.at("alternating").holds(), "h alternating");
  f.check(ax.at("lands-in").holds(), "h lands in W_a");
  f.check(ax.group_axioms_hold(), "U_a group axioms");
  const auto comm = commutativity_checks(ua);
  record(comm);
  f.check(!is_commutative(ua), "U_a not commutative");
  return f.outcome(std::to_string(run.items.size()) + " selftest items, U_a axioms hold, commutative: false");
}

// The coefficient equations for Hom(V, U), written out in the unknown names of the
// ansatz: c = u_0_0_0, d = u_0_0_1, F_j = u_0_1_j, e = u_1_0_0, f = u_1_0_1,
// G_j = u_1_1_j. Y^(p^j) coefficient of F^p - F + aG^p - (ad^p + a^2 f^p)Y^(p^2).
std::vector<std::string> expected_hom_equations() {
  return {
      "u_0_0_1^3 - u_0_0_0 + a*u_1_0_1^3",
      "u_0_0_0^3 - u_0_0_1 + a*u_1_0_0^3",
      "-u_0_1_0",
      "u_0_1_0^3 - u_0_1_1 + a*u_1_1_0^3",
      "u_0_1_1^3 - u_0_1_2 + a*u_1_1_1^3 - a*u_0_0_1^3 - a^2*u_1_0_1^3",
      "u_0_1_2^3 - u_0_1_3 + a*u_1_1_2^3",
      "u_0_1_3^3 + a*u_1_1_3^3",
  };
}

std::string derive_report(const Session& s) {
  const auto cs = derive_hom_constraints(s.endpoint("V"), s.endpoint("U"));
  const auto chk = hom_check(s.map("phi_b"), s.params);
  std::ostringstream os;
  os << cs.to_string() << "\n" << canonical_form(s.map("phi_b"), &s.params).to_string(s.params.names) << "\n"
     << chk.vanishes << "\n";
  return os.str();
}

// 2. Hom(V, U) constraints and phi_b.
Outcome criterion2() {
  Failures f;
  const auto s = parse_session(kHomVU);
  const auto cs = derive_hom_constraints(s.endpoint("V"), s.endpoint("U"));
  const auto nm = cs.names();
  std::set<std::string> got, want;
  for (const auto& c : cs.constraints) got.insert(make_monic(c).to_string(nm));
  for (const auto& t : expected_hom_equations()) want.insert(make_monic(parse_poly(t, s.field, nm)).to_string(nm));
  f.check(got == want, "constraint set equals the expected coefficient equations");
  const auto chk = hom_check(s.map("phi_b"), s.params);
  record(chk);
  f.check(chk.vanishes, "phi_b is a homomorphism on W-points");
  ParamRing free{s.field, s.params.names, {}};
  const auto unrestricted = hom_check(s.map("phi_b"), free);
  record(unrestricted);
  f.check(!unrestricted.vanishes, "phi_b needs the W relation");
  const auto first = derive_report(s), second = derive_report(parse_session(kHomVU));
  f.check(first == second, "byte-stable output");
  return f.outcome(std::to_string(got.size()) + " constraints in " + std::to_string(nm.size()) +
                   " unknowns match, phi_b verified, output stable");
}

// 3. b_2 at p = 2.
Outcome criterion3() {
  Failures f;
  const auto s = parse_session(kB2);
  const auto chk = hom_check(s.map("b_2"), s.params);
  record(chk);
  f.check(chk.vanishes, "b_2 is a homomorphism on W_2-points");
  const auto free = hom_check(s.map("b_2"), ParamRing{s.field, s.params.names, {}});
  record(free);
  f.check(!free.vanishes, "b_2 needs the W_2 relation");
  return f.outcome("b_2 verified under the W_2 relation");
}

// 4. Frobenius twist of W_a.
Outcome criterion4() {
  Failures f;
  const auto s = parse_session(kTwisted);
  const auto& k = s.field;
  const auto tw = twist_group(s.group("W_a"), 1);
  f.check(tw.equation == s.group("W_a_p").equation, "twist equation");
  const auto r = classify(tw);
  const std::vector<FieldElem> expect{parse_field_elem("-a", k), parse_field_elem("1", k)};
  f.check(r.wound.verdict == Verdict::Zero && r.wound.witness == expect, "witness (-a, 1)");
  f.check(evaluate(tw.equation.principal_part(), r.wound.witness).is_zero(), "witness is a zero");
  const auto iso = verify_mutual_inverse(s.map("f"), s.map("g"), s.params);
  record(iso);
  f.check(iso.holds(), "twisted group splits over k");
  const auto frob = hom_check(relative_frobenius_map(s.group("W_a"), 1), s.params);
  record(frob);
  f.check(frob.vanishes, "relative Frobenius is a homomorphism");
  return f.outcome("witness=(-a,1), splitting maps inverse, relative Frobenius verified");
}

// 5. Division algorithm on random pairs.
Outcome criterion5() {
  Failures f;
  const auto k = Field::make({3, 1, "a", 0});
  std::mt19937_64 rng(5);
  auto below = [&](std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng); };
  auto coef = [&]() {
    UPoly u(3);
    for (auto& c : u) c = static_cast<FiniteField::Elem>(below(3));
    upoly::trim(u);
    return FieldElem::fraction(k, u, {1});
  };
  auto random_ppoly = [&](std::size_t n, std::size_t terms) {
    PPoly p = make_ppoly(k, n);
    for (std::size_t t = 0; t < terms; ++t)
      p.add_term(static_cast<std::uint32_t>(below(n)), static_cast<std::uint32_t>(below(4)), coef());
    return p;
  };
  int failures = 0, pairs = 0;
  while (pairs < 1000) {
    const std::size_t n = 1 + below(3);
    const PPoly F = random_ppoly(n, 1 + below(5));
    if (F.is_zero()) continue;
    const auto vars = F.variables();
    const std::size_t pivot = vars[below(vars.size())];
    const PPoly H = random_ppoly(n, below(8));
    ++pairs;
    bool ok = true;
    const auto r = reduce_mod(H, F, pivot);
    // exactness, recomputed on the expanded polynomials
    Poly rebuilt = to_poly(r.remainder);
    for (const auto& st : r.steps) rebuilt += st.coefficient * to_poly(F).frobenius(st.frobenius);
    ok = ok && rebuilt == to_poly(H) && r.replay(F) == H;
    // exactness at a random point
    std::vector<FieldElem> pt;
    for (std::size_t i = 0; i < n; ++i) pt.push_back(coef() + coef() * FieldElem::generator(k).pow(3));
    FieldElem rhs = evaluate(r.remainder, pt);
    const FieldElem fx = evaluate(F, pt);
    for (const auto& st : r.steps) rhs += st.coefficient * frobenius(fx, st.frobenius);
    ok = ok && rhs == evaluate(H, pt);
    // degree bound
    const auto top = r.remainder.top_exponent(pivot);
    ok = ok && (!top || *top < *F.top_exponent(pivot));
    // p-polynomial closure
    const auto back = ppoly_from_poly(to_poly(r.remainder));
    ok = ok && back && *back == r.remainder;
    // idempotence
    ok = ok && reduce_mod(r.remainder, F, pivot).remainder == r.remainder;
    // uniqueness under multiples c F^(p^s)
    for (int t = 0; t < 2; ++t) {
      const PPoly shifted = H + coef() * F.raised(static_cast<std::uint32_t>(below(4)));
      ok = ok && reduce_mod(shifted, F, pivot).remainder == r.remainder;
    }
    if (!ok) ++failures;
  }
  f.check(failures == 0, std::to_string(failures) + " failing pairs");
  return f.outcome(std::to_string(pairs) + " pairs, 0 failures");
}

// Exhaustive search over vectors of polynomials of degree <= 3 over F_3
// for a nonzero zero of sum c_i x_i^(3^N), all coefficients polynomial.
// x^(3^N) is F_3-linear in x, so each odometer step adds one image vector.
bool brute_force_has_zero(const std::vector<Dense>& c, std::uint32_t N) {
  const int p = 3;
  const std::uint64_t pn = static_cast<std::uint64_t>(std::pow(3, N));
  std::vector<Dense> images;
  std::size_t width = 0;
  for (const auto& ci : c)
    for (std::size_t j = 0; j <= 3; ++j) {
      Dense mono(j + 1, 0);
      mono[j] = 1;
      images.push_back(dense_mul(ci, dense_frobenius(mono, pn), p));
      width = std::max(width, images.back().size());
    }
  for (auto& v : images) v.resize(width, 0);
  std::vector<int> digits(images.size(), 0);
  Dense acc(width, 0);
  while (true) {
    std::size_t j = 0;
    while (j < digits.size()) {
      for (std::size_t t = 0; t < width; ++t) acc[t] = (acc[t] + images[j][t]) % p;
      if (++digits[j] < p) break;
      digits[j++] = 0;
    }
    if (j == digits.size()) return false;  // wrapped to the zero vector
    if (dense_zero(acc)) return true;
  }
}

// Independent check of a witness: clear denominators by their product, then
// evaluate with dense arithmetic.
bool dense_witness_check(const std::vector<Dense>& c, std::uint32_t N, const std::vector<FieldElem>& w) {
  const int p = 3;
  const std::uint64_t pn = static_cast<std::uint64_t>(std::pow(3, N));
  bool nonzero = false;
  Dense sum;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Dense xi = dense_of(w[i].numerator());
    nonzero = nonzero || !xi.empty();
    for (std::size_t j = 0; j < w.size(); ++j)
      if (j != i) xi = dense_mul(xi, dense_of(w[j].denominator()), p);
    dense_add_into(sum, dense_mul(c[i], dense_frobenius(xi, pn), p), p);
  }
  return nonzero && dense_zero(sum);
}

// 6. Decision against exhaustive search.
Outcome criterion6() {
  Failures f;
  const auto k = Field::make({3, 1, "a", 0});
  std::mt19937_64 rng(6);
  auto below = [&](std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng); };
  int nozero = 0, zero = 0, unknown = 0, bad = 0;
  for (int inst = 0; inst < 200; ++inst) {
    const std::size_t n = 1 + below(3);
    const auto N = static_cast<std::uint32_t>(below(3));
    std::vector<Dense> c;
    PPoly P = make_ppoly(k, n);
    for (std::size_t i = 0; i < n; ++i) {
      Dense ci;
      while (ci.empty()) {
        ci = {static_cast<int>(below(3)), static_cast<int>(below(3)), static_cast<int>(below(3))};
        dense_trim(ci);
      }
      c.push_back(ci);
      P.add_term(static_cast<std::uint32_t>(i), N, FieldElem::fraction(k, UPoly(ci.begin(), ci.end()), {1}));
    }
    const auto d = decide_no_nontrivial_zero(P);
    const bool found = brute_force_has_zero(c, N);
    switch (d.verdict) {
      case Verdict::NoZero:
        ++nozero;
        if (found || !check_decision(P, d)) ++bad;
        break;
      case Verdict::Zero:
        ++zero;
        if (!dense_witness_check(c, N, d.witness) || !evaluate(P, d.witness).is_zero()) ++bad;
        break;
      case Verdict::Unknown:
        ++unknown;
        break;
    }
  }
  f.check(bad == 0, std::to_string(bad) + " disagreements");
  f.check(unknown == 0, std::to_string(unknown) + " Unknown verdicts");
  f.check(nozero > 0 && zero > 0, "both verdicts exercised");
  return f.outcome("200 instances: " + std::to_string(nozero) + " NoZero confirmed by search, " +
                   std::to_string(zero) + " Zero witnesses checked, 0 Unknown");
}

// 7. Every symbolic verdict from 1-4 against the random-point oracle.
Outcome criterion7() {
  Failures f;
  int agree = 0, vanish = 0;
  for (const auto& c : g_identities) {
    const bool oracle = random_point_oracle(c.poly, c.relations, {0, 100, 3});
    if (oracle == c.vanishes)
      ++agree;
    else
      f.check(false, c.label);
    if (c.vanishes) ++vanish;
  }
  f.check(!g_identities.empty(), "no verdicts collected");
  return f.outcome(std::to_string(agree) + " verdicts (" + std::to_string(vanish) + " vanishing) agree over 100 trials");
}

// 8. Bounded Hom enumeration.
Outcome criterion8() {
  Failures f;
  // Hom(Ga, Ga) over F_3 with T^(p^1) as top power: c_0 T + c_1 T^3
  {
    const auto s = parse_session("field p=3 gen=a");
    const auto cs = derive_hom_constraints(s.endpoint("Ga"), s.endpoint("Ga"), AnsatzBounds{1});
    const auto r = solve_homs_bounded(cs, polynomial_domain(s.field, 0));
    std::set<std::string> got, want;
    const std::vector<std::string> T{"T"};
    for (const auto& m : r.maps) got.insert(drop_params(canonical_form(m).coords[0]).to_string(T));
    for (int c0 = 0; c0 < 3; ++c0)
      for (int c1 = 0; c1 < 3; ++c1) {
        const auto text = std::to_string(c0) + "*T + " + std::to_string(c1) + "*T^3";
        want.insert(parse_ppoly(text, s.field, T).to_string(T));
      }
    f.check(r.complete && r.maps.size() == 9 && got == want, "Hom(Ga, Ga) has exactly the 9 maps");
  }
  std::size_t points = 0, solutions = 0;
  {
    const auto s = parse_session(kHomVU);
    const auto& k = s.field;
    const auto cs = derive_hom_constraints(s.endpoint("V"), s.endpoint("U"));
    const auto r = solve_homs_bounded(cs, polynomial_domain(k, 1));
    f.check(r.complete, "Hom(V, U) search complete within bound");
    solutions = r.maps.size();
    std::set<std::string> got;
    for (const auto& m : r.maps) got.insert(canonical_form(m).to_string());
    // W-points (d, e) with d, e of degree <= 1: d^9 - d + a e^3 = 0
    std::set<std::string> want;
    const std::vector<std::string> XY{"X", "Y"};
    for (int d0 = 0; d0 < 3; ++d0)
      for (int d1 = 0; d1 < 3; ++d1)
        for (int e0 = 0; e0 < 3; ++e0)
          for (int e1 = 0; e1 < 3; ++e1) {
            const Dense d{d0, d1}, e{e0, e1};
            Dense lhs = dense_frobenius(d, 9);
            Dense negd{(3 - d0) % 3, (3 - d1) % 3};
            dense_add_into(lhs, negd, 3);
            dense_add_into(lhs, dense_mul({0, 1}, dense_frobenius(e, 3), 3), 3);
            if (!dense_zero(lhs)) continue;
            ++points;
            const std::string ds = "(" + std::to_string(d0) + " + " + std::to_string(d1) + "*a)";
            const std::string es = "(" + std::to_string(e0) + " + " + std::to_string(e1) + "*a)";
            std::vector<ParamPPoly> coords{lift(parse_ppoly(ds + "^3*X + " + ds + "*X^3", k, XY), 0),
                                           lift(parse_ppoly(es + "*X + " + ds + "*Y^3", k, XY), 0)};
            // every coefficient must lie in the degree <= 1 domain
            bool fits = true;
            for (const auto& c : coords)
              for (const auto& [key, v] : c.terms()) fits = fits && v.constant_term().numerator().size() <= 2;
            f.check(fits, "phi_b(" + ds + "," + es + ") has coefficients outside the domain");
            auto m = canonical_form(PPolyMap::make("m", s.endpoint("V"), s.endpoint("U"), coords));
            want.insert(m.to_string());
          }
    // compare ignoring the generated names
    auto strip = [](std::set<std::string> in) {
      std::set<std::string> out;
      for (auto t : in) out.insert(t.substr(t.find(" from=")));
      return out;
    };
    f.check(strip(got) == strip(want), "solutions equal phi_b of the W-points");
  }
  return f.outcome("Hom(Ga,Ga): 9 maps; Hom(V,U): " + std::to_string(solutions) + " solutions = phi_b of " +
                   std::to_string(points) + " W-points");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, 5, criterion1}, {2, 5, criterion2},  {3, 5, criterion3},  {4, 2, criterion4},
      {5, 30, criterion5}, {6, 60, criterion6}, {7, 30, criterion7}, {8, 120, criterion8},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_seconds) {
      o.pass = false;
      o.detail += " (over the time limit)";
    }
    all = all && o.pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << c.number << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail << " [" << secs
         << " s, limit " << c.limit_seconds << " s]";
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
