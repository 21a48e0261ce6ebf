#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "wound/field.hpp"

namespace wound {

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then lexicographic with
/// variable 0 most significant.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// A multivariate polynomial over a tower level, with no zero coefficients
/// stored. Variables are positional; names live with whoever owns the
/// variable space.
class Poly {
 public:
  using TermMap = std::map<Exponents, FieldElem, GrlexLess>;

  Poly(FieldPtr field, std::size_t nvars);

  static Poly constant(const FieldElem& c, std::size_t nvars);
  static Poly variable(const FieldPtr& field, std::size_t nvars, std::size_t i, std::uint32_t power = 1);
  static Poly monomial(const FieldElem& c, Exponents exps);

  const FieldPtr& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The constant term (zero if absent).
  FieldElem constant_term() const;
  FieldElem coefficient(const Exponents& e) const;
  std::uint32_t degree_in(std::size_t var) const;
  std::uint32_t total_degree() const;
  /// Leading term under grlex; the polynomial must be nonzero.
  const std::pair<const Exponents, FieldElem>& leading_term() const;

  /// Adds c * x^e in place.
  void add_term(const Exponents& e, const FieldElem& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const FieldElem& c);
  friend Poly operator*(const FieldElem& c, Poly a) { return std::move(a) * c; }

  Poly pow(std::uint64_t n) const;
  /// this^(p^n): coefficients Frobenius-raised, exponents scaled by p^n.
  Poly frobenius(std::uint32_t n) const;

  /// Replace variable i by images[i]; all images share one variable space.
  Poly substitute(std::span<const Poly> images) const;
  FieldElem evaluate(std::span<const FieldElem> point) const;

  /// Re-home into a space of new_nvars variables, variable i -> offset + i.
  Poly embed_vars(std::size_t new_nvars, std::size_t offset) const;
  /// Move the coefficients to a deeper tower level.
  Poly embed_field(const FieldPtr& deeper) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Canonical text: terms in descending grlex order, e.g. "x^3*y - a*x + 1".
  std::string to_string(std::span<const std::string> names) const;

 private:
  FieldPtr field_;
  std::size_t nvars_;
  TermMap terms_;
};

/// Default variable names x0, x1, ...
std::vector<std::string> default_names(std::size_t n, const std::string& stem = "x");

/// Renders a coefficient times a monomial string, folding signs and units.
/// Returns the term text and whether it should be joined with " - ".
std::pair<std::string, bool> render_term(const FieldElem& c, const std::string& monomial);

/// Joins rendered terms with " + " / " - ".
std::string join_terms(const std::vector<std::pair<std::string, bool>>& terms);

}  // namespace wound
