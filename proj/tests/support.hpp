#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "wound/parse.hpp"
#include "wound/ppoly.hpp"

namespace wound {

inline std::ostream& operator<<(std::ostream& os, const FieldElem& x) { return os << x.to_string(); }

}  // namespace wound

namespace wound::test {

inline FieldPtr k3(std::uint32_t depth = 0) { return Field::make({3, 1, "a", depth}); }
inline FieldPtr k2(std::uint32_t depth = 0) { return Field::make({2, 1, "a", depth}); }

inline FieldElem el(const FieldPtr& k, const std::string& text) { return parse_field_elem(text, k); }

inline std::vector<std::string> names(std::initializer_list<const char*> xs) { return {xs.begin(), xs.end()}; }

inline PPoly pp(const FieldPtr& k, const std::string& text, const std::vector<std::string>& vars) {
  return parse_ppoly(text, k, vars);
}

inline Poly poly(const FieldPtr& k, const std::string& text, const std::vector<std::string>& vars) {
  return parse_poly(text, k, vars);
}

/// Seeded generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }
  bool coin() { return below(2) == 1; }

  /// Polynomial in the working generator with degree <= deg.
  UPoly upoly(const FieldPtr& k, std::uint32_t deg) {
    UPoly u(deg + 1);
    for (auto& c : u) c = static_cast<FiniteField::Elem>(below(k->fq().q()));
    upoly::trim(u);
    return u;
  }

  FieldElem polynomial(const FieldPtr& k, std::uint32_t deg) { return FieldElem::fraction(k, upoly(k, deg), {1}); }

  FieldElem nonzero_polynomial(const FieldPtr& k, std::uint32_t deg) {
    while (true) {
      auto x = polynomial(k, deg);
      if (!x.is_zero()) return x;
    }
  }

  /// A rational function with numerator and denominator of degree <= deg.
  FieldElem rational(const FieldPtr& k, std::uint32_t deg) {
    UPoly den;
    while (den.empty()) den = upoly(k, deg);
    return FieldElem::fraction(k, upoly(k, deg), den);
  }

  /// Random p-polynomial with up to `terms` terms, exponents <= max_e.
  PPoly ppoly(const FieldPtr& k, std::size_t nvars, std::uint32_t max_e, std::uint32_t deg, std::size_t terms) {
    PPoly f = make_ppoly(k, nvars);
    for (std::size_t t = 0; t < terms; ++t)
      f.add_term(static_cast<std::uint32_t>(below(nvars)), static_cast<std::uint32_t>(below(max_e + 1)),
                 polynomial(k, deg));
    return f;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace wound::test
