#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wound {

/// Arithmetic in F_q with q = p^e.
///
/// Elements are encoded as integers in [0, q). For e > 1 the base-p digits of
/// the code are the coefficients (low to high) in the power basis of z, a root
/// of the smallest primitive monic polynomial of degree e over F_p. The prime
/// subfield is therefore encoded by the integers 0..p-1 for every e.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  FiniteField(std::uint32_t p, std::uint32_t e);

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  bool is_prime_field() const { return e_ == 1; }

  Elem from_int(std::int64_t v) const;

  Elem add(Elem x, Elem y) const;
  Elem sub(Elem x, Elem y) const;
  Elem neg(Elem x) const;
  Elem mul(Elem x, Elem y) const;
  Elem inv(Elem x) const;
  Elem pow(Elem x, std::uint64_t n) const;

  /// x^(p^n).
  Elem frobenius(Elem x, std::uint64_t n) const;
  /// The unique y with y^(p^n) = x.
  Elem inverse_frobenius(Elem x, std::uint64_t n) const;

  /// z for e > 1; for e == 1 the smallest primitive root mod p.
  Elem primitive() const { return primitive_; }
  /// Discrete log base primitive(); x must be nonzero. Only for e > 1.
  std::uint32_t log(Elem x) const { return log_[x]; }

  /// Monic primitive modulus, low to high, e + 1 entries (e > 1 only).
  const std::vector<Elem>& modulus() const { return modulus_; }

  /// Symmetric representative in (-p/2, p/2] for prime-field elements.
  std::int64_t signed_value(Elem x) const;

  bool operator==(const FiniteField& o) const { return p_ == o.p_ && e_ == o.e_; }

 private:
  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t q_;
  Elem primitive_ = 1;
  std::vector<Elem> modulus_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;

  void build_extension_tables();
};

bool is_prime(std::uint64_t n);

/// Dense univariate polynomials over F_q, coefficients low to high, with no
/// trailing zeros (the zero polynomial is empty).
using UPoly = std::vector<FiniteField::Elem>;

namespace upoly {

void trim(UPoly& a);
inline long degree(const UPoly& a) { return static_cast<long>(a.size()) - 1; }
inline bool is_zero(const UPoly& a) { return a.empty(); }
bool is_one(const UPoly& a);
UPoly constant(FiniteField::Elem c);
UPoly monomial(FiniteField::Elem c, std::size_t deg);

UPoly add(const FiniteField& f, const UPoly& a, const UPoly& b);
UPoly sub(const FiniteField& f, const UPoly& a, const UPoly& b);
UPoly neg(const FiniteField& f, const UPoly& a);
UPoly mul(const FiniteField& f, const UPoly& a, const UPoly& b);
UPoly scale(const FiniteField& f, const UPoly& a, FiniteField::Elem c);
/// Quotient and remainder; b must be nonzero.
void divmod(const FiniteField& f, const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem);
UPoly div_exact(const FiniteField& f, const UPoly& a, const UPoly& b);
/// Monic gcd (zero if both are zero).
UPoly gcd(const FiniteField& f, UPoly a, UPoly b);
UPoly make_monic(const FiniteField& f, const UPoly& a);
UPoly derivative(const FiniteField& f, const UPoly& a);

/// a(t)^(p^n): coefficients raised to p^n, exponents multiplied by p^n.
UPoly frobenius(const FiniteField& f, const UPoly& a, std::uint32_t n);
/// a(t^m) with coefficients untouched.
UPoly spread(const UPoly& a, std::uint64_t m);
/// Inverse of frobenius; requires every exponent to be divisible by p^n.
UPoly inverse_frobenius(const FiniteField& f, const UPoly& a, std::uint32_t n);

}  // namespace upoly

}  // namespace wound
