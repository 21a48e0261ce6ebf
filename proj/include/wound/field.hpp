#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "wound/finite_field.hpp"

namespace wound {

/// A level of the purely inseparable tower k(a^(1/p^depth)) over k = F_q(a).
/// The working generator b satisfies b^(p^depth) = a, so every element of
/// the level is a rational function of b over F_q.
struct FieldSpec {
  std::uint32_t p = 3;
  std::uint32_t e = 1;
  std::string gen = "a";
  std::uint32_t depth = 0;
  /// Symbol for the primitive element of F_q when e > 1.
  std::string fq_symbol = "z";

  bool operator==(const FieldSpec& o) const {
    return p == o.p && e == o.e && gen == o.gen && depth == o.depth && fq_symbol == o.fq_symbol;
  }
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  static FieldPtr make(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  const FiniteField& fq() const { return fq_; }
  std::uint32_t p() const { return spec_.p; }
  std::uint32_t depth() const { return spec_.depth; }
  /// p^n as an integer.
  std::uint64_t p_power(std::uint32_t n) const;

  std::string header() const;

  explicit Field(FieldSpec spec);

 private:
  FieldSpec spec_;
  FiniteField fq_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

/// The tower level of depth m >= spec.depth over the same base.
FieldPtr extend_depth(const FieldPtr& field, std::uint32_t m);

/// An exact element of a tower level, stored as num/den in the working
/// generator with den monic and gcd(num, den) = 1. Zero is 0/1.
class FieldElem {
 public:
  explicit FieldElem(FieldPtr field);

  static FieldElem constant(const FieldPtr& field, std::int64_t v);
  static FieldElem from_fq(const FieldPtr& field, FiniteField::Elem c);
  /// The working generator b = a^(1/p^depth).
  static FieldElem generator(const FieldPtr& field);
  /// a^(1/p^j) for j <= depth.
  static FieldElem gen_root(const FieldPtr& field, std::uint32_t j);
  /// num/den, normalized. Throws on zero denominator.
  static FieldElem fraction(const FieldPtr& field, UPoly num, UPoly den);

  const FieldPtr& field() const { return field_; }
  const UPoly& numerator() const { return num_; }
  const UPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.empty(); }
  bool is_one() const { return upoly::is_one(num_) && upoly::is_one(den_); }
  /// True for elements of F_q.
  bool is_constant() const { return num_.size() <= 1 && den_.size() == 1; }
  bool is_polynomial() const { return den_.size() == 1; }

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);
  friend FieldElem operator+(FieldElem x, const FieldElem& y) { return x += y; }
  friend FieldElem operator-(FieldElem x, const FieldElem& y) { return x -= y; }
  friend FieldElem operator*(FieldElem x, const FieldElem& y) { return x *= y; }
  friend FieldElem operator/(FieldElem x, const FieldElem& y) { return x /= y; }

  FieldElem inverse() const;
  FieldElem pow(std::int64_t n) const;
  /// d/db of the rational function.
  FieldElem derivative() const;

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }
  /// Arbitrary but fixed total order, for deterministic containers.
  bool operator<(const FieldElem& o) const;

  /// Canonical text, e.g. "a^2 - 1", "(a + 1)/(a^2)", "a^(1/p^1)^2".
  std::string to_string() const;

 private:
  FieldElem(FieldPtr field, UPoly num, UPoly den) : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  void check_same_field(const FieldElem& o) const;

  FieldPtr field_;
  UPoly num_;
  UPoly den_;
};

/// x^(p^n).
FieldElem frobenius(const FieldElem& x, std::uint32_t n);

/// y with y^p = x when x is a p-th power at its own depth, else nullopt.
/// Membership is decided by the vanishing of the formal derivative.
std::optional<FieldElem> pth_root(const FieldElem& x);

/// The image of x in the deeper level `target` (same base, depth >= x's).
FieldElem embed(const FieldElem& x, const FieldPtr& target);

/// The p^n-th root of x, which always exists n levels deeper.
FieldElem root_in_extension(const FieldElem& x, std::uint32_t n, const FieldPtr& deeper);

}  // namespace wound
