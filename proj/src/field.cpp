#include "wound/field.hpp"

#include <sstream>

#include "wound/errors.hpp"

namespace wound {

Field::Field(FieldSpec spec) : spec_(std::move(spec)), fq_(spec_.p, spec_.e) {}

FieldPtr Field::make(FieldSpec spec) {
  if (spec.gen.empty()) throw InputError("generator name must be nonempty");
  return std::make_shared<const Field>(std::move(spec));
}

std::uint64_t Field::p_power(std::uint32_t n) const {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < n; ++i) r *= spec_.p;
  return r;
}

std::string Field::header() const {
  std::ostringstream os;
  os << "field p=" << spec_.p << " e=" << spec_.e << " gen=" << spec_.gen << " depth=" << spec_.depth;
  if (spec_.e > 1) os << " fq=" << spec_.fq_symbol;
  return os.str();
}

bool same_field(const FieldPtr& a, const FieldPtr& b) { return a == b || (a && b && a->spec() == b->spec()); }

FieldPtr extend_depth(const FieldPtr& field, std::uint32_t m) {
  if (m < field->depth()) throw PreconditionError("extend_depth: target depth below current depth");
  if (m == field->depth()) return field;
  FieldSpec s = field->spec();
  s.depth = m;
  return Field::make(std::move(s));
}

FieldElem::FieldElem(FieldPtr field) : field_(std::move(field)), den_{1} {}

FieldElem FieldElem::constant(const FieldPtr& field, std::int64_t v) {
  return FieldElem(field, upoly::constant(field->fq().from_int(v)), UPoly{1});
}

FieldElem FieldElem::from_fq(const FieldPtr& field, FiniteField::Elem c) {
  return FieldElem(field, upoly::constant(c), UPoly{1});
}

FieldElem FieldElem::generator(const FieldPtr& field) { return FieldElem(field, upoly::monomial(1, 1), UPoly{1}); }

FieldElem FieldElem::gen_root(const FieldPtr& field, std::uint32_t j) {
  if (j > field->depth())
    throw InputError(field->spec().gen + "^(1/p^" + std::to_string(j) + ") needs depth >= " + std::to_string(j));
  return FieldElem(field, upoly::monomial(1, field->p_power(field->depth() - j)), UPoly{1});
}

FieldElem FieldElem::fraction(const FieldPtr& field, UPoly num, UPoly den) {
  upoly::trim(num);
  upoly::trim(den);
  if (den.empty()) throw std::domain_error("zero denominator");
  FieldElem r(field, std::move(num), std::move(den));
  r.normalize();
  return r;
}

void FieldElem::normalize() {
  const auto& fq = field_->fq();
  if (num_.empty()) {
    den_ = UPoly{1};
    return;
  }
  if (den_.size() == 1) {
    if (den_[0] != 1) {
      num_ = upoly::scale(fq, num_, fq.inv(den_[0]));
      den_ = UPoly{1};
    }
    return;
  }
  UPoly g = upoly::gcd(fq, num_, den_);
  if (!upoly::is_one(g)) {
    num_ = upoly::div_exact(fq, num_, g);
    den_ = upoly::div_exact(fq, den_, g);
  }
  if (den_.back() != 1) {
    auto inv = fq.inv(den_.back());
    num_ = upoly::scale(fq, num_, inv);
    den_ = upoly::scale(fq, den_, inv);
  }
}

void FieldElem::check_same_field(const FieldElem& o) const {
  if (!same_field(field_, o.field_)) throw PreconditionError("field elements from different tower levels");
}

FieldElem FieldElem::operator-() const { return FieldElem(field_, upoly::neg(field_->fq(), num_), den_); }

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  check_same_field(o);
  const auto& fq = field_->fq();
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ = upoly::add(fq, num_, o.num_);
    normalize();
    return *this;
  }
  num_ = upoly::add(fq, upoly::mul(fq, num_, o.den_), upoly::mul(fq, o.num_, den_));
  den_ = upoly::mul(fq, den_, o.den_);
  normalize();
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this += -o; }

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  check_same_field(o);
  const auto& fq = field_->fq();
  if (is_zero() || o.is_zero()) {
    num_.clear();
    den_ = UPoly{1};
    return *this;
  }
  if (den_.size() == 1 && o.den_.size() == 1) {
    num_ = upoly::mul(fq, num_, o.num_);
    return *this;
  }
  // cross-cancel so the result stays reduced
  UPoly g1 = upoly::gcd(fq, num_, o.den_);
  UPoly g2 = upoly::gcd(fq, o.num_, den_);
  UPoly n1 = upoly::div_exact(fq, num_, g1);
  UPoly d2 = upoly::div_exact(fq, o.den_, g1);
  UPoly n2 = upoly::div_exact(fq, o.num_, g2);
  UPoly d1 = upoly::div_exact(fq, den_, g2);
  num_ = upoly::mul(fq, n1, n2);
  den_ = upoly::mul(fq, d1, d2);
  if (den_.back() != 1) {
    auto inv = fq.inv(den_.back());
    num_ = upoly::scale(fq, num_, inv);
    den_ = upoly::scale(fq, den_, inv);
  }
  return *this;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero field element");
  FieldElem r(field_, den_, num_);
  r.normalize();
  return r;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this *= o.inverse(); }

FieldElem FieldElem::pow(std::int64_t n) const {
  if (n < 0) return inverse().pow(-n);
  FieldElem result = constant(field_, 1);
  FieldElem base = *this;
  const std::uint64_t p = field_->p();
  auto un = static_cast<std::uint64_t>(n);
  while (un) {
    std::uint64_t d = un % p;
    for (std::uint64_t i = 0; i < d; ++i) result *= base;
    un /= p;
    if (un) base = frobenius(base, 1);
  }
  return result;
}

FieldElem FieldElem::derivative() const {
  const auto& fq = field_->fq();
  UPoly top = upoly::sub(fq, upoly::mul(fq, upoly::derivative(fq, num_), den_),
                         upoly::mul(fq, num_, upoly::derivative(fq, den_)));
  return fraction(field_, std::move(top), upoly::mul(fq, den_, den_));
}

bool FieldElem::operator==(const FieldElem& o) const {
  return same_field(field_, o.field_) && num_ == o.num_ && den_ == o.den_;
}

bool FieldElem::operator<(const FieldElem& o) const {
  if (num_.size() != o.num_.size()) return num_.size() < o.num_.size();
  if (num_ != o.num_) return num_ < o.num_;
  if (den_.size() != o.den_.size()) return den_.size() < o.den_.size();
  return den_ < o.den_;
}

namespace {

std::string fq_coefficient(const Field& field, FiniteField::Elem c) {
  const auto& fq = field.fq();
  if (fq.is_prime_field()) return std::to_string(fq.signed_value(c));
  if (c == 1) return "1";
  std::uint32_t k = fq.log(c);
  const auto& z = field.spec().fq_symbol;
  return k == 1 ? z : z + "^" + std::to_string(k);
}

std::string gen_power(const Field& field, std::uint64_t k) {
  const auto& gen = field.spec().gen;
  const std::uint64_t p = field.p();
  std::uint32_t j = field.depth();
  while (j > 0 && k % p == 0) {
    k /= p;
    --j;
  }
  if (j == 0) return k == 1 ? gen : gen + "^" + std::to_string(k);
  std::string root = gen + "^(1/p^" + std::to_string(j) + ")";
  return k == 1 ? root : root + "^" + std::to_string(k);
}

std::string poly_to_string(const Field& field, const UPoly& u) {
  if (u.empty()) return "0";
  const auto& fq = field.fq();
  std::string out;
  bool first = true;
  for (std::size_t i = u.size(); i-- > 0;) {
    if (u[i] == 0) continue;
    std::string coef;
    bool negative = false;
    if (fq.is_prime_field()) {
      std::int64_t v = fq.signed_value(u[i]);
      negative = v < 0;
      coef = std::to_string(negative ? -v : v);
    } else {
      coef = fq_coefficient(field, u[i]);
    }
    std::string term;
    if (i == 0) {
      term = coef;
    } else {
      term = coef == "1" ? gen_power(field, i) : coef + "*" + gen_power(field, i);
    }
    if (first) {
      out += negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
    first = false;
  }
  return out;
}

std::size_t nonzero_terms(const UPoly& u) {
  std::size_t n = 0;
  for (auto c : u) n += (c != 0);
  return n;
}

}  // namespace

std::string FieldElem::to_string() const {
  std::string num = poly_to_string(*field_, num_);
  if (upoly::is_one(den_)) return num;
  std::string den = poly_to_string(*field_, den_);
  if (nonzero_terms(num_) > 1) num = "(" + num + ")";
  if (nonzero_terms(den_) > 1) den = "(" + den + ")";
  return num + "/" + den;
}

FieldElem frobenius(const FieldElem& x, std::uint32_t n) {
  if (n == 0 || x.is_zero()) return x;
  const auto& fq = x.field()->fq();
  return FieldElem::fraction(x.field(), upoly::frobenius(fq, x.numerator(), n), upoly::frobenius(fq, x.denominator(), n));
}

std::optional<FieldElem> pth_root(const FieldElem& x) {
  if (!x.derivative().is_zero()) return std::nullopt;
  const auto& fq = x.field()->fq();
  return FieldElem::fraction(x.field(), upoly::inverse_frobenius(fq, x.numerator(), 1),
                             upoly::inverse_frobenius(fq, x.denominator(), 1));
}

FieldElem embed(const FieldElem& x, const FieldPtr& target) {
  const auto& src = x.field()->spec();
  const auto& dst = target->spec();
  if (src.p != dst.p || src.e != dst.e || src.gen != dst.gen || dst.depth < src.depth)
    throw PreconditionError("embed: target is not a deeper level of the same tower");
  const std::uint64_t m = target->p_power(dst.depth - src.depth);
  return FieldElem::fraction(target, upoly::spread(x.numerator(), m), upoly::spread(x.denominator(), m));
}

FieldElem root_in_extension(const FieldElem& x, std::uint32_t n, const FieldPtr& deeper) {
  if (deeper->depth() < x.field()->depth() + n) throw PreconditionError("root_in_extension: target level too shallow");
  FieldPtr level = extend_depth(x.field(), x.field()->depth() + n);
  const auto& fq = x.field()->fq();
  UPoly num = x.numerator(), den = x.denominator();
  for (auto& c : num) c = fq.inverse_frobenius(c, n);
  for (auto& c : den) c = fq.inverse_frobenius(c, n);
  return embed(FieldElem::fraction(level, std::move(num), std::move(den)), deeper);
}

}  // namespace wound
