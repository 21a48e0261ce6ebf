#include "wound/poly.hpp"

#include <numeric>

#include "wound/errors.hpp"

namespace wound {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da < db;
  return a < b;
}

Poly::Poly(FieldPtr field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

Poly Poly::constant(const FieldElem& c, std::size_t nvars) {
  Poly r(c.field(), nvars);
  if (!c.is_zero()) r.terms_.emplace(Exponents(nvars, 0), c);
  return r;
}

Poly Poly::variable(const FieldPtr& field, std::size_t nvars, std::size_t i, std::uint32_t power) {
  if (i >= nvars) throw InputError("variable index out of range");
  Exponents e(nvars, 0);
  e[i] = power;
  return monomial(FieldElem::constant(field, 1), std::move(e));
}

Poly Poly::monomial(const FieldElem& c, Exponents exps) {
  Poly r(c.field(), exps.size());
  if (!c.is_zero()) r.terms_.emplace(std::move(exps), c);
  return r;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

FieldElem Poly::constant_term() const { return coefficient(Exponents(nvars_, 0)); }

FieldElem Poly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? FieldElem(field_) : it->second;
}

std::uint32_t Poly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

std::uint32_t Poly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), std::uint32_t{0}));
  return d;
}

const std::pair<const Exponents, FieldElem>& Poly::leading_term() const {
  if (terms_.empty()) throw PreconditionError("leading term of zero polynomial");
  return *terms_.rbegin();
}

void Poly::add_term(const Exponents& e, const FieldElem& c) {
  if (c.is_zero()) return;
  if (e.size() != nvars_) throw InputError("monomial arity mismatch");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(field_, nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.nvars_ != nvars_) throw InputError("polynomial arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.nvars_ != nvars_) throw InputError("polynomial arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw InputError("polynomial arity mismatch");
  Poly r(a.field_, a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly operator*(Poly a, const FieldElem& c) {
  if (c.is_zero()) return Poly(a.field_, a.nvars_);
  for (auto& [e, v] : a.terms_) v *= c;
  return a;
}

Poly Poly::frobenius(std::uint32_t n) const {
  if (n == 0) return *this;
  const auto m = static_cast<std::uint32_t>(field_->p_power(n));
  Poly r(field_, nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents s = e;
    for (auto& x : s) x *= m;
    r.terms_.emplace(std::move(s), wound::frobenius(c, n));
  }
  return r;
}

Poly Poly::pow(std::uint64_t n) const {
  Poly result = constant(FieldElem::constant(field_, 1), nvars_);
  Poly base = *this;
  const std::uint64_t p = field_->p();
  while (n) {
    std::uint64_t d = n % p;
    for (std::uint64_t i = 0; i < d; ++i) result = result * base;
    n /= p;
    if (n) base = base.frobenius(1);
  }
  return result;
}

Poly Poly::substitute(std::span<const Poly> images) const {
  if (images.size() != nvars_) throw InputError("substitute: expected " + std::to_string(nvars_) + " images");
  if (images.empty()) return *this;
  const std::size_t target = images[0].nvars();
  for (const auto& im : images)
    if (im.nvars() != target) throw InputError("substitute: images live in different spaces");
  std::vector<std::map<std::uint32_t, Poly>> cache(nvars_);
  auto power = [&](std::size_t i, std::uint32_t k) -> const Poly& {
    auto it = cache[i].find(k);
    if (it == cache[i].end()) it = cache[i].emplace(k, images[i].pow(k)).first;
    return it->second;
  };
  Poly r(field_, target);
  for (const auto& [e, c] : terms_) {
    Poly term = constant(c, target);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] != 0) term = term * power(i, e[i]);
    r += term;
  }
  return r;
}

FieldElem Poly::evaluate(std::span<const FieldElem> point) const {
  if (point.size() != nvars_) throw InputError("evaluate: point has wrong length");
  std::vector<std::map<std::uint32_t, FieldElem>> cache(nvars_);
  auto power = [&](std::size_t i, std::uint32_t k) -> const FieldElem& {
    auto it = cache[i].find(k);
    if (it == cache[i].end()) it = cache[i].emplace(k, point[i].pow(k)).first;
    return it->second;
  };
  FieldElem r(field_);
  for (const auto& [e, c] : terms_) {
    FieldElem t = c;
    for (std::size_t i = 0; i < nvars_ && !t.is_zero(); ++i)
      if (e[i] != 0) t *= power(i, e[i]);
    r += t;
  }
  return r;
}

Poly Poly::embed_vars(std::size_t new_nvars, std::size_t offset) const {
  if (offset + nvars_ > new_nvars) throw InputError("embed_vars: target space too small");
  Poly r(field_, new_nvars);
  for (const auto& [e, c] : terms_) {
    Exponents s(new_nvars, 0);
    std::copy(e.begin(), e.end(), s.begin() + static_cast<std::ptrdiff_t>(offset));
    r.terms_.emplace(std::move(s), c);
  }
  return r;
}

Poly Poly::embed_field(const FieldPtr& deeper) const {
  Poly r(deeper, nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, embed(c, deeper));
  return r;
}

bool Poly::operator==(const Poly& o) const {
  return nvars_ == o.nvars_ && same_field(field_, o.field_) && terms_ == o.terms_;
}

std::vector<std::string> default_names(std::size_t n, const std::string& stem) {
  std::vector<std::string> r;
  r.reserve(n);
  for (std::size_t i = 0; i < n; ++i) r.push_back(stem + std::to_string(i));
  return r;
}

std::pair<std::string, bool> render_term(const FieldElem& c, const std::string& monomial) {
  std::string s = c.to_string();
  std::size_t nonzero = 0;
  for (auto x : c.numerator()) nonzero += (x != 0);
  const bool simple = nonzero == 1 && c.is_polynomial();
  bool negative = false;
  if (simple && !s.empty() && s[0] == '-') {
    negative = true;
    s.erase(0, 1);
  }
  if (monomial.empty()) return {s, negative};
  if (s == "1") return {monomial, negative};
  if (simple) return {s + "*" + monomial, negative};
  return {"(" + s + ")*" + monomial, negative};
}

std::string join_terms(const std::vector<std::pair<std::string, bool>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [t, neg] = terms[i];
    if (i == 0)
      out += neg ? "-" + t : t;
    else
      out += (neg ? " - " : " + ") + t;
  }
  return out;
}

std::string Poly::to_string(std::span<const std::string> names) const {
  if (names.size() < nvars_) throw InputError("to_string: not enough variable names");
  std::vector<std::pair<std::string, bool>> parts;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (it->first[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (it->first[i] != 1) mono += "^" + std::to_string(it->first[i]);
    }
    parts.push_back(render_term(it->second, mono));
  }
  return join_terms(parts);
}

}  // namespace wound
