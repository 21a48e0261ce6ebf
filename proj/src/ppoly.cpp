#include "wound/ppoly.hpp"

namespace wound {

PPoly make_ppoly(const FieldPtr& field, std::size_t nvars) { return PPoly(FieldElem(field), nvars); }

PPoly ppoly_var(const FieldPtr& field, std::size_t nvars, std::uint32_t var, std::uint32_t e) {
  return PPoly::term(FieldElem::constant(field, 1), nvars, var, e);
}

ParamPPoly make_param_ppoly(const FieldPtr& field, std::size_t nvars, std::size_t nparams) {
  return ParamPPoly(Poly(field, nparams), nvars);
}

FieldElem evaluate(const PPoly& p, std::span<const FieldElem> point) {
  if (point.size() != p.nvars()) throw InputError("evaluate: point has wrong length");
  FieldElem r(p.field());
  for (const auto& [k, c] : p.terms()) r += c * frobenius(point[k.var], k.e);
  return r;
}

Poly evaluate(const PPoly& p, std::span<const Poly> point) {
  if (point.size() != p.nvars()) throw InputError("evaluate: point has wrong length");
  if (point.empty()) return Poly(p.field(), 0);
  Poly r(p.field(), point[0].nvars());
  for (const auto& [k, c] : p.terms()) r += point[k.var].frobenius(k.e) * c;
  return r;
}

ParamPPoly lift(const PPoly& p, std::size_t nparams) {
  ParamPPoly r = make_param_ppoly(p.field(), p.nvars(), nparams);
  for (const auto& [k, c] : p.terms()) r.add_term(k.var, k.e, Poly::constant(c, nparams));
  return r;
}

PPoly drop_params(const ParamPPoly& p) {
  PPoly r = make_ppoly(p.field(), p.nvars());
  for (const auto& [k, c] : p.terms()) {
    if (!c.is_constant()) throw PreconditionError("p-polynomial has parameter-dependent coefficients");
    r.add_term(k.var, k.e, c.constant_term());
  }
  return r;
}

Poly to_poly(const PPoly& p) {
  Poly r(p.field(), p.nvars());
  for (const auto& [k, c] : p.terms()) {
    Exponents e(p.nvars(), 0);
    e[k.var] = static_cast<std::uint32_t>(p.field()->p_power(k.e));
    r.add_term(e, c);
  }
  return r;
}

Poly to_poly(const ParamPPoly& p) {
  const std::size_t nparams = p.zero().nvars();
  const std::size_t total = p.nvars() + nparams;
  Poly r(p.field(), total);
  for (const auto& [k, c] : p.terms()) {
    for (const auto& [pe, pc] : c.terms()) {
      Exponents e(total, 0);
      e[k.var] = static_cast<std::uint32_t>(p.field()->p_power(k.e));
      std::copy(pe.begin(), pe.end(), e.begin() + static_cast<std::ptrdiff_t>(p.nvars()));
      r.add_term(e, pc);
    }
  }
  return r;
}

namespace {

// log_p(x) if x is a power of p.
std::optional<std::uint32_t> p_log(std::uint64_t x, std::uint64_t p) {
  std::uint32_t k = 0;
  while (x > 1) {
    if (x % p != 0) return std::nullopt;
    x /= p;
    ++k;
  }
  return x == 1 ? std::optional<std::uint32_t>(k) : std::nullopt;
}

}  // namespace

std::optional<PPoly> ppoly_from_poly(const Poly& h) {
  PPoly r = make_ppoly(h.field(), h.nvars());
  for (const auto& [e, c] : h.terms()) {
    std::optional<std::size_t> var;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (var) return std::nullopt;
      var = i;
    }
    if (!var) return std::nullopt;
    auto k = p_log(e[*var], h.field()->p());
    if (!k) return std::nullopt;
    r.add_term(static_cast<std::uint32_t>(*var), *k, c);
  }
  return r;
}

std::optional<ParamPPoly> param_ppoly_from_poly(const Poly& h, std::size_t nvars) {
  if (nvars > h.nvars()) throw InputError("param_ppoly_from_poly: too many p-polynomial variables");
  const std::size_t nparams = h.nvars() - nvars;
  ParamPPoly r = make_param_ppoly(h.field(), nvars, nparams);
  for (const auto& [e, c] : h.terms()) {
    std::optional<std::size_t> var;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (e[i] == 0) continue;
      if (var) return std::nullopt;
      var = i;
    }
    if (!var) return std::nullopt;
    auto k = p_log(e[*var], h.field()->p());
    if (!k) return std::nullopt;
    Exponents pe(e.begin() + static_cast<std::ptrdiff_t>(nvars), e.end());
    r.add_term(static_cast<std::uint32_t>(*var), *k, Poly::monomial(c, std::move(pe)));
  }
  return r;
}

Poly PolyReduction::replay(const PPoly& f) const {
  Poly fp = to_poly(f);
  Poly h = remainder;
  for (const auto& m : multipliers) h += m * fp;
  return h;
}

PolyReduction reduce_mod(const Poly& h, const PPoly& f, std::size_t pivot) {
  if (h.nvars() != f.nvars()) throw InputError("reduce_mod: arity mismatch");
  auto n = f.top_exponent(pivot);
  if (!n) throw PreconditionError("reduce_mod: pivot does not occur in F");
  const FieldElem u_inv = f.leading_coefficient(pivot).inverse();
  const auto bound = static_cast<std::uint32_t>(f.field()->p_power(*n));
  const Poly fp = to_poly(f);
  PolyReduction out{{}, h};
  while (true) {
    // the term with the largest pivot degree, ties broken by grlex
    const std::pair<const Exponents, FieldElem>* best = nullptr;
    for (auto it = out.remainder.terms().rbegin(); it != out.remainder.terms().rend(); ++it)
      if (!best || it->first[pivot] > best->first[pivot]) best = &*it;
    if (!best || best->first[pivot] < bound) break;
    Exponents e = best->first;
    e[pivot] -= bound;
    Poly m = Poly::monomial(best->second * u_inv, std::move(e));
    out.remainder -= m * fp;
    out.multipliers.push_back(std::move(m));
  }
  return out;
}

}  // namespace wound
