#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wound/errors.hpp"
#include "wound/field.hpp"
#include "wound/poly.hpp"

namespace wound {

// Coefficient-ring hooks used by BasicPPoly. A coefficient is either a field
// element or a polynomial in parameter symbols; in the latter case only
// nonzero constants are units.
namespace coeff {

inline bool is_unit(const FieldElem& c) { return !c.is_zero(); }
inline FieldElem unit_inverse(const FieldElem& c) { return c.inverse(); }
inline FieldElem frob(const FieldElem& c, std::uint32_t n) { return frobenius(c, n); }
inline const FieldPtr& field_of(const FieldElem& c) { return c.field(); }
inline FieldElem from_scalar(const FieldElem&, const FieldElem& s) { return s; }
inline std::string text(const FieldElem& c, std::span<const std::string>) { return c.to_string(); }

inline bool is_unit(const Poly& c) { return c.is_constant() && !c.is_zero(); }
inline Poly unit_inverse(const Poly& c) { return Poly::constant(c.constant_term().inverse(), c.nvars()); }
inline Poly frob(const Poly& c, std::uint32_t n) { return c.frobenius(n); }
inline const FieldPtr& field_of(const Poly& c) { return c.field(); }
inline Poly from_scalar(const Poly& zero, const FieldElem& s) { return Poly::constant(s, zero.nvars()); }
inline std::string text(const Poly& c, std::span<const std::string> names) { return c.to_string(names); }

}  // namespace coeff

/// Position of a p-polynomial term c * X_var^(p^e).
struct PKey {
  std::uint32_t var;
  std::uint32_t e;
  auto operator<=>(const PKey&) const = default;
};

/// A multivariate p-polynomial sum c_{i,e} X_i^(p^e). Terms are kept in
/// ascending (i, e) order, which is also the serialization order.
template <class R>
class BasicPPoly {
 public:
  using TermMap = std::map<PKey, R>;

  /// `zero` fixes the coefficient ring (field level, parameter count).
  BasicPPoly(R zero, std::size_t nvars) : zero_(std::move(zero)), nvars_(nvars) {}

  static BasicPPoly term(const R& c, std::size_t nvars, std::uint32_t var, std::uint32_t e) {
    BasicPPoly r(c - c, nvars);
    r.add_term(var, e, c);
    return r;
  }

  const R& zero() const { return zero_; }
  const FieldPtr& field() const { return coeff::field_of(zero_); }
  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  R coefficient(std::uint32_t var, std::uint32_t e) const {
    auto it = terms_.find({var, e});
    return it == terms_.end() ? zero_ : it->second;
  }

  void add_term(std::uint32_t var, std::uint32_t e, const R& c) {
    if (var >= nvars_) throw InputError("p-polynomial variable index out of range");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(PKey{var, e}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Largest Frobenius exponent of `var`, if it occurs.
  std::optional<std::uint32_t> top_exponent(std::size_t var) const {
    std::optional<std::uint32_t> top;
    for (const auto& [k, c] : terms_)
      if (k.var == var) top = k.e;
    return top;
  }

  const R& leading_coefficient(std::size_t var) const {
    auto top = top_exponent(var);
    if (!top) throw PreconditionError("variable does not occur in p-polynomial");
    return terms_.at({static_cast<std::uint32_t>(var), *top});
  }

  /// Indices of the variables that occur, ascending.
  std::vector<std::size_t> variables() const {
    std::vector<std::size_t> r;
    for (const auto& [k, c] : terms_)
      if (r.empty() || r.back() != k.var) r.push_back(k.var);
    return r;
  }

  /// Number of terms in which `var` occurs.
  std::size_t occurrences(std::size_t var) const {
    std::size_t n = 0;
    for (const auto& [k, c] : terms_) n += (k.var == var);
    return n;
  }

  BasicPPoly operator-() const {
    BasicPPoly r(zero_, nvars_);
    for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k, -c);
    return r;
  }
  BasicPPoly& operator+=(const BasicPPoly& o) {
    check_arity(o);
    for (const auto& [k, c] : o.terms_) add_term(k.var, k.e, c);
    return *this;
  }
  BasicPPoly& operator-=(const BasicPPoly& o) {
    check_arity(o);
    for (const auto& [k, c] : o.terms_) add_term(k.var, k.e, -c);
    return *this;
  }
  friend BasicPPoly operator+(BasicPPoly a, const BasicPPoly& b) { return a += b; }
  friend BasicPPoly operator-(BasicPPoly a, const BasicPPoly& b) { return a -= b; }
  /// Scalar multiple c * P (c acts on coefficients).
  friend BasicPPoly operator*(const R& c, const BasicPPoly& a) {
    BasicPPoly r(a.zero_, a.nvars_);
    for (const auto& [k, v] : a.terms_) r.add_term(k.var, k.e, c * v);
    return r;
  }

  /// P^(p^s): coefficients raised to p^s and every Frobenius exponent + s.
  BasicPPoly raised(std::uint32_t s) const {
    if (s == 0) return *this;
    BasicPPoly r(zero_, nvars_);
    for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), PKey{k.var, k.e + s}, coeff::frob(c, s));
    return r;
  }

  /// The n-fold Frobenius twist: coefficients raised to p^n, exponents kept.
  BasicPPoly twist(std::uint32_t n) const {
    if (n == 0) return *this;
    BasicPPoly r(zero_, nvars_);
    for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k, coeff::frob(c, n));
    return r;
  }

  /// For each occurring variable, its term of largest Frobenius exponent.
  BasicPPoly principal_part() const {
    BasicPPoly r(zero_, nvars_);
    for (auto v : variables()) {
      auto top = *top_exponent(v);
      r.add_term(static_cast<std::uint32_t>(v), top, terms_.at({static_cast<std::uint32_t>(v), top}));
    }
    return r;
  }

  BasicPPoly linear_part() const {
    BasicPPoly r(zero_, nvars_);
    for (const auto& [k, c] : terms_)
      if (k.e == 0) r.add_term(k.var, 0, c);
    return r;
  }

  bool is_smooth() const { return !linear_part().is_zero(); }

  /// P(maps_0, ..., maps_{m-1}) for a tuple of p-polynomials in a common space.
  BasicPPoly compose(std::span<const BasicPPoly> maps) const {
    if (maps.size() != nvars_) throw InputError("compose: expected " + std::to_string(nvars_) + " coordinate maps");
    const std::size_t n = maps.empty() ? 0 : maps[0].nvars();
    for (const auto& m : maps)
      if (m.nvars() != n) throw InputError("compose: coordinate maps live in different spaces");
    BasicPPoly r(zero_, n);
    for (const auto& [k, c] : terms_) {
      for (const auto& [mk, mc] : maps[k.var].raised(k.e).terms_) r.add_term(mk.var, mk.e, c * mc);
    }
    return r;
  }

  /// Re-home into a space of new_nvars variables, variable i -> offset + i.
  BasicPPoly embed_vars(std::size_t new_nvars, std::size_t offset) const {
    if (offset + nvars_ > new_nvars) throw InputError("embed_vars: target space too small");
    BasicPPoly r(zero_, new_nvars);
    for (const auto& [k, c] : terms_) r.terms_.emplace(PKey{static_cast<std::uint32_t>(k.var + offset), k.e}, c);
    return r;
  }

  bool operator==(const BasicPPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const BasicPPoly& o) const { return !(*this == o); }

  /// Serialization in the grammar `coef*VAR^(p^e) + ...`, ascending (i, e).
  std::string to_string(std::span<const std::string> names, std::span<const std::string> coef_names = {}) const {
    if (names.size() < nvars_) throw InputError("to_string: not enough variable names");
    std::vector<std::pair<std::string, bool>> parts;
    for (const auto& [k, c] : terms_) {
      auto [text, negative] = wrap_coefficient(coeff::text(c, coef_names));
      parts.emplace_back(text + "*" + names[k.var] + "^(p^" + std::to_string(k.e) + ")", negative);
    }
    return join_terms(parts);
  }

  /// Splits a leading minus off a coefficient and parenthesizes compound text.
  static std::pair<std::string, bool> wrap_coefficient(std::string s) {
    bool compound = s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos ||
                    s.find('/') != std::string::npos;
    if (compound) return {"(" + s + ")", false};
    if (!s.empty() && s[0] == '-') return {s.substr(1), true};
    return {s, false};
  }

 private:
  void check_arity(const BasicPPoly& o) const {
    if (o.nvars_ != nvars_) throw InputError("p-polynomial arity mismatch");
  }

  R zero_;
  std::size_t nvars_;
  TermMap terms_;
};

/// p-polynomial over a tower level.
using PPoly = BasicPPoly<FieldElem>;
/// p-polynomial whose coefficients are polynomials in parameter symbols.
using ParamPPoly = BasicPPoly<Poly>;

PPoly make_ppoly(const FieldPtr& field, std::size_t nvars);
/// X_var^(p^e) with coefficient 1.
PPoly ppoly_var(const FieldPtr& field, std::size_t nvars, std::uint32_t var, std::uint32_t e = 0);
ParamPPoly make_param_ppoly(const FieldPtr& field, std::size_t nvars, std::size_t nparams);

/// Sum c X^(p^e) evaluated at a point of field elements.
FieldElem evaluate(const PPoly& p, std::span<const FieldElem> point);
/// Evaluation at a point whose coordinates are polynomials (e.g. in a
/// parameter T); the result is a polynomial in the same space.
Poly evaluate(const PPoly& p, std::span<const Poly> point);

/// Constant-coefficient lift into the parameter-coefficient ring.
ParamPPoly lift(const PPoly& p, std::size_t nparams);
/// Coefficients as field elements; throws PreconditionError if any
/// coefficient involves a parameter.
PPoly drop_params(const ParamPPoly& p);

/// The ordinary polynomial with the same terms (p-powers expanded).
Poly to_poly(const PPoly& p);
/// Variables 0..nvars-1 are the p-polynomial's, followed by the parameters.
Poly to_poly(const ParamPPoly& p);
/// Inverse of to_poly when every monomial has the shape X_i^(p^e).
std::optional<PPoly> ppoly_from_poly(const Poly& h);
/// Inverse of to_poly(ParamPPoly): the first `nvars` variables of h are
/// p-polynomial variables, the rest are parameters.
std::optional<ParamPPoly> param_ppoly_from_poly(const Poly& h, std::size_t nvars);

/// Highest-index variable whose leading coefficient is a unit.
template <class R>
std::size_t default_pivot(const BasicPPoly<R>& f) {
  auto vars = f.variables();
  for (auto it = vars.rbegin(); it != vars.rend(); ++it)
    if (coeff::is_unit(f.leading_coefficient(*it))) return *it;
  throw PreconditionError("no variable has a unit leading coefficient");
}

/// Division of a p-polynomial by a p-polynomial with unit leading coefficient
/// u X_pivot^(p^n): each step subtracts c (u^-1 F)^(p^s).
template <class R>
struct PReduction {
  struct Step {
    R coefficient;        // multiplier of F^(p^frobenius)
    std::uint32_t frobenius;
  };
  std::vector<Step> steps;
  BasicPPoly<R> remainder;

  /// remainder + sum coefficient * F^(p^frobenius).
  BasicPPoly<R> replay(const BasicPPoly<R>& f) const {
    BasicPPoly<R> h = remainder;
    for (const auto& s : steps) h += s.coefficient * f.raised(s.frobenius);
    return h;
  }
};

template <class R>
PReduction<R> reduce_mod(const BasicPPoly<R>& h, const BasicPPoly<R>& f, std::size_t pivot) {
  if (h.nvars() != f.nvars()) throw InputError("reduce_mod: arity mismatch");
  auto n = f.top_exponent(pivot);
  if (!n) throw PreconditionError("reduce_mod: pivot does not occur in F");
  const R& u = f.leading_coefficient(pivot);
  if (!coeff::is_unit(u)) throw PreconditionError("reduce_mod: pivot leading coefficient is not a unit");
  const R u_inv = coeff::unit_inverse(u);
  PReduction<R> out{{}, h};
  while (true) {
    auto top = out.remainder.top_exponent(pivot);
    if (!top || *top < *n) break;
    const std::uint32_t s = *top - *n;
    R c = out.remainder.coefficient(static_cast<std::uint32_t>(pivot), *top) * coeff::frob(u_inv, s);
    out.remainder -= c * f.raised(s);
    out.steps.push_back({std::move(c), s});
  }
  return out;
}

/// Division of an arbitrary polynomial by F in the pivot variable.
struct PolyReduction {
  std::vector<Poly> multipliers;  // H = remainder + sum multiplier * F
  Poly remainder;

  Poly replay(const PPoly& f) const;
};

PolyReduction reduce_mod(const Poly& h, const PPoly& f, std::size_t pivot);

}  // namespace wound
