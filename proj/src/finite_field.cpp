#include "wound/finite_field.hpp"

#include <stdexcept>

#include "wound/errors.hpp"

namespace wound {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t e) : p_(p), e_(e) {
  if (!is_prime(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw InputError("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > (e == 1 ? (1ull << 31) : (1ull << 16)))
      throw InputError("field size p^e too large");
  }
  q_ = static_cast<std::uint32_t>(q);
  if (e_ > 1) {
    build_extension_tables();
  } else if (p_ > 2) {
    // smallest primitive root: g^((p-1)/r) != 1 for every prime r | p-1
    std::vector<std::uint64_t> factors;
    std::uint64_t m = p_ - 1;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
      if (m % d == 0) {
        factors.push_back(d);
        while (m % d == 0) m /= d;
      }
    }
    if (m > 1) factors.push_back(m);
    for (Elem g = 2; g < p_; ++g) {
      bool ok = true;
      for (auto r : factors)
        if (pow(g, (p_ - 1) / r) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        primitive_ = g;
        break;
      }
    }
  }
}

void FiniteField::build_extension_tables() {
  // Digits of a code, low to high.
  auto digits = [&](std::uint32_t code) {
    std::vector<Elem> d(e_);
    for (std::uint32_t i = 0; i < e_; ++i) {
      d[i] = code % p_;
      code /= p_;
    }
    return d;
  };
  auto encode = [&](const std::vector<Elem>& d) {
    std::uint32_t code = 0;
    for (std::uint32_t i = e_; i-- > 0;) code = code * p_ + d[i];
    return code;
  };
  // Candidate moduli x^e + sum c_t x^t enumerated by the code of (c_0..c_{e-1}).
  for (std::uint32_t cand = 1; cand < q_; ++cand) {
    auto c = digits(cand);
    if (c[0] == 0) continue;
    std::vector<Elem> cur(e_, 0);
    cur[0] = 1;
    std::vector<Elem> table;
    table.reserve(q_ - 1);
    bool primitive = true;
    for (std::uint32_t k = 0; k < q_ - 1; ++k) {
      std::uint32_t code = encode(cur);
      if (k > 0 && code == 1) {
        primitive = false;
        break;
      }
      table.push_back(code);
      // multiply by x and reduce with x^e = -sum c_t x^t
      Elem top = cur[e_ - 1];
      for (std::uint32_t i = e_ - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      for (std::uint32_t i = 0; i < e_; ++i)
        cur[i] = static_cast<Elem>((cur[i] + static_cast<std::uint64_t>(p_ - c[i]) * top) % p_);
    }
    if (!primitive || encode(cur) != 1) continue;
    exp_ = std::move(table);
    log_.assign(q_, 0);
    for (std::uint32_t k = 0; k < q_ - 1; ++k) log_[exp_[k]] = k;
    modulus_.assign(c.begin(), c.end());
    modulus_.push_back(1);
    primitive_ = p_;  // the code of z is the digit vector (0, 1, 0, ...)
    return;
  }
  throw std::logic_error("no primitive polynomial found");
}

FiniteField::Elem FiniteField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

FiniteField::Elem FiniteField::add(Elem x, Elem y) const {
  if (e_ == 1) {
    std::uint64_t s = static_cast<std::uint64_t>(x) + y;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  Elem r = 0, scale = 1;
  while (x || y) {
    Elem d = (x % p_ + y % p_) % p_;
    r += d * scale;
    scale *= p_;
    x /= p_;
    y /= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::neg(Elem x) const {
  if (e_ == 1) return x == 0 ? 0 : p_ - x;
  Elem r = 0, scale = 1;
  while (x) {
    Elem d = x % p_;
    r += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    x /= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::sub(Elem x, Elem y) const { return add(x, neg(y)); }

FiniteField::Elem FiniteField::mul(Elem x, Elem y) const {
  if (x == 0 || y == 0) return 0;
  if (e_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(x) * y % p_);
  return exp_[(static_cast<std::uint64_t>(log_[x]) + log_[y]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::pow(Elem x, std::uint64_t n) const {
  if (n == 0) return 1;
  if (x == 0) return 0;
  if (e_ > 1) return exp_[static_cast<std::uint64_t>(log_[x]) * (n % (q_ - 1)) % (q_ - 1)];
  Elem r = 1;
  Elem b = x;
  while (n) {
    if (n & 1) r = mul(r, b);
    b = mul(b, b);
    n >>= 1;
  }
  return r;
}

FiniteField::Elem FiniteField::inv(Elem x) const {
  if (x == 0) throw std::domain_error("inverse of zero in F_q");
  return pow(x, q_ - 2);
}

FiniteField::Elem FiniteField::frobenius(Elem x, std::uint64_t n) const {
  if (e_ == 1 || x == 0) return x;
  n %= e_;
  std::uint64_t k = 1;
  for (std::uint64_t i = 0; i < n; ++i) k *= p_;
  return pow(x, k);
}

FiniteField::Elem FiniteField::inverse_frobenius(Elem x, std::uint64_t n) const {
  if (e_ == 1) return x;
  return frobenius(x, e_ - n % e_);
}

std::int64_t FiniteField::signed_value(Elem x) const {
  std::int64_t v = x;
  if (2 * v > static_cast<std::int64_t>(p_)) v -= p_;
  return v;
}

namespace upoly {

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

bool is_one(const UPoly& a) { return a.size() == 1 && a[0] == 1; }

UPoly constant(FiniteField::Elem c) { return c == 0 ? UPoly{} : UPoly{c}; }

UPoly monomial(FiniteField::Elem c, std::size_t deg) {
  if (c == 0) return {};
  UPoly r(deg + 1, 0);
  r[deg] = c;
  return r;
}

UPoly add(const FiniteField& f, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

UPoly neg(const FiniteField& f, const UPoly& a) {
  UPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.neg(a[i]);
  return r;
}

UPoly sub(const FiniteField& f, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

UPoly mul(const FiniteField& f, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  if (f.is_prime_field()) {
    // accumulate in 64 bits and reduce lazily
    const std::uint64_t p = f.p();
    const std::uint64_t limit = ~0ull - (p - 1) * (p - 1);
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::uint64_t& slot = acc[i + j];
        slot += static_cast<std::uint64_t>(a[i]) * b[j];
        if (slot >= limit) slot %= p;
      }
    }
    UPoly r(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<FiniteField::Elem>(acc[i] % p);
    trim(r);
    return r;
  }
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

UPoly scale(const FiniteField& f, const UPoly& a, FiniteField::Elem c) {
  if (c == 0) return {};
  UPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
  return r;
}

void divmod(const FiniteField& f, const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  rem = a;
  quot.clear();
  if (a.size() < b.size()) return;
  quot.assign(a.size() - b.size() + 1, 0);
  const FiniteField::Elem lead_inv = f.inv(b.back());
  for (std::size_t k = rem.size(); k-- >= b.size();) {
    FiniteField::Elem c = rem[k];
    if (c != 0) {
      c = f.mul(c, lead_inv);
      const std::size_t shift = k - (b.size() - 1);
      quot[shift] = c;
      for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] = f.sub(rem[shift + j], f.mul(c, b[j]));
    }
    if (k == 0) break;
  }
  trim(quot);
  trim(rem);
}

UPoly div_exact(const FiniteField& f, const UPoly& a, const UPoly& b) {
  if (is_one(b)) return a;
  UPoly q, r;
  divmod(f, a, b, q, r);
  return q;
}

UPoly make_monic(const FiniteField& f, const UPoly& a) {
  if (a.empty() || a.back() == 1) return a;
  return scale(f, a, f.inv(a.back()));
}

UPoly gcd(const FiniteField& f, UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly q, r;
    divmod(f, a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(f, a);
}

UPoly derivative(const FiniteField& f, const UPoly& a) {
  if (a.size() <= 1) return {};
  UPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = f.mul(a[i], f.from_int(static_cast<std::int64_t>(i % f.p())));
  trim(r);
  return r;
}

UPoly spread(const UPoly& a, std::uint64_t m) {
  if (a.empty() || m == 1) return a;
  UPoly r((a.size() - 1) * m + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i * m] = a[i];
  return r;
}

UPoly frobenius(const FiniteField& f, const UPoly& a, std::uint32_t n) {
  if (n == 0 || a.empty()) return a;
  std::uint64_t m = 1;
  for (std::uint32_t i = 0; i < n; ++i) m *= f.p();
  UPoly r((a.size() - 1) * m + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i * m] = f.frobenius(a[i], n);
  return r;
}

UPoly inverse_frobenius(const FiniteField& f, const UPoly& a, std::uint32_t n) {
  if (n == 0 || a.empty()) return a;
  std::uint64_t m = 1;
  for (std::uint32_t i = 0; i < n; ++i) m *= f.p();
  UPoly r((a.size() - 1) / m + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (i % m != 0) throw std::domain_error("inverse_frobenius: not a p^n-th power");
    r[i / m] = f.inverse_frobenius(a[i], n);
  }
  return r;
}

}  // namespace upoly

}  // namespace wound
