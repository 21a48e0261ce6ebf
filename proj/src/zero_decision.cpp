#include "wound/zero_decision.hpp"

#include <algorithm>

namespace wound {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NoZero: return "NoZero";
    case Verdict::Zero: return "Zero";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(DecisionStage s) {
  switch (s) {
    case DecisionStage::Trivial: return "trivial";
    case DecisionStage::EqualExponent: return "equal-exponent";
    case DecisionStage::Relaxation: return "relaxation";
    case DecisionStage::Expansion: return "expansion";
    case DecisionStage::Search: return "search";
  }
  return "?";
}

std::vector<FieldElem> semilinear_decomposition(const FieldElem& c, std::uint32_t n) {
  if (!c.is_polynomial()) throw PreconditionError("semilinear_decomposition: coefficient must be a polynomial");
  const auto& field = c.field();
  const auto& fq = field->fq();
  const std::uint64_t m = field->p_power(n);
  std::vector<UPoly> parts(m);
  const UPoly& num = c.numerator();
  for (std::size_t k = 0; k < num.size(); ++k) {
    if (num[k] == 0) continue;
    UPoly& u = parts[k % m];
    const std::size_t q = k / m;
    if (u.size() <= q) u.resize(q + 1, 0);
    u[q] = fq.inverse_frobenius(num[k], n);
  }
  std::vector<FieldElem> out;
  out.reserve(m);
  for (auto& u : parts) out.push_back(FieldElem::fraction(field, std::move(u), UPoly{1}));
  return out;
}

namespace {

struct EqualExponentResult {
  SemilinearCertificate certificate;
  std::optional<std::vector<FieldElem>> kernel_vector;  // set iff rank < rows
};

// Zero set of sum_r coeffs[r] S_r^(p^n) over the working level.
EqualExponentResult equal_exponent_core(const FieldPtr& field, const std::vector<FieldElem>& coeffs, std::uint32_t n,
                                        std::vector<std::pair<std::size_t, std::size_t>> rows) {
  const auto& fq = field->fq();
  // clear denominators with the lcm of all denominators
  UPoly lcm{1};
  for (const auto& c : coeffs) {
    const UPoly& d = c.denominator();
    UPoly g = upoly::gcd(fq, lcm, d);
    lcm = upoly::mul(fq, lcm, upoly::div_exact(fq, d, g));
  }
  const FieldElem scale = FieldElem::fraction(field, lcm, UPoly{1});
  const std::size_t cols = field->p_power(n);
  Matrix m;
  m.reserve(coeffs.size());
  for (const auto& c : coeffs) m.push_back(semilinear_decomposition(c * scale, n));
  RowEchelon re = row_reduce(m, field, cols);
  EqualExponentResult out{SemilinearCertificate{n, scale, std::move(rows), m, re.pivot_columns, re.rank()}, std::nullopt};
  if (re.rank() < coeffs.size()) {
    auto ker = kernel(transpose(m, field, cols), field, coeffs.size());
    out.kernel_vector = ker.front();
  }
  return out;
}

ZeroDecision from_core(EqualExponentResult core, DecisionStage stage, std::vector<FieldElem> witness) {
  ZeroDecision d;
  d.stage = stage;
  if (core.kernel_vector) {
    d.verdict = Verdict::Zero;
    d.witness = std::move(witness);
  } else {
    d.verdict = Verdict::NoZero;
    d.certificate = std::move(core.certificate);
  }
  return d;
}

}  // namespace

SearchResult search_zero(const PPoly& p, std::uint32_t bound, std::uint64_t budget) {
  const auto& field = p.field();
  const auto& fq = field->fq();
  const std::size_t n = p.nvars();
  SearchResult out;
  if (n == 0) {
    out.exhausted = true;
    return out;
  }
  std::vector<std::uint32_t> exps(n, 0);
  bool equal = true;
  for (const auto& [k, c] : p.terms()) exps[k.var] = k.e;
  {
    auto vars = p.variables();
    for (auto v : vars)
      if (exps[v] != exps[vars.front()]) equal = false;
  }
  // Basis vector (var, k, t) is z^t b^k / delta in coordinate var.
  const std::size_t per_var = static_cast<std::size_t>(bound + 1) * fq.e();
  const std::size_t digits_total = n * per_var;

  // Monic denominators of degree <= bound in lexicographic order; with equal
  // exponents P(y / delta) = P(y) / delta^(p^N), so delta = 1 suffices.
  std::vector<UPoly> denominators{UPoly{1}};
  if (!equal) {
    for (std::uint32_t deg = 1; deg <= bound; ++deg) {
      std::uint64_t count = 1;
      for (std::uint32_t i = 0; i < deg; ++i) count *= fq.q();
      for (std::uint64_t code = 0; code < count; ++code) {
        UPoly d(deg + 1, 0);
        d[deg] = 1;
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < deg; ++i) {
          d[i] = static_cast<FiniteField::Elem>(c % fq.q());
          c /= fq.q();
        }
        denominators.push_back(std::move(d));
      }
    }
  }

  for (const auto& delta : denominators) {
    const FieldElem delta_inv = FieldElem::fraction(field, UPoly{1}, delta);
    std::vector<FieldElem> images;
    images.reserve(digits_total);
    for (std::size_t v = 0; v < n; ++v) {
      const FieldElem cv = p.coefficient(static_cast<std::uint32_t>(v), exps[v]);
      for (std::uint32_t k = 0; k <= bound; ++k) {
        for (std::uint32_t t = 0; t < fq.e(); ++t) {
          FiniteField::Elem basis = 1;
          for (std::uint32_t i = 0; i < t; ++i) basis *= fq.p();
          FieldElem beta = FieldElem::fraction(field, upoly::monomial(basis, k), UPoly{1}) * delta_inv;
          images.push_back(cv * frobenius(beta, exps[v]));
        }
      }
    }
    UPoly lcm{1};
    for (const auto& im : images) {
      UPoly g = upoly::gcd(fq, lcm, im.denominator());
      lcm = upoly::mul(fq, lcm, upoly::div_exact(fq, im.denominator(), g));
    }
    std::vector<UPoly> dense;
    std::size_t len = 1;
    for (const auto& im : images) {
      UPoly num = upoly::mul(fq, im.numerator(), upoly::div_exact(fq, lcm, im.denominator()));
      len = std::max(len, num.size());
      dense.push_back(std::move(num));
    }
    for (auto& d : dense) d.resize(len, 0);

    std::vector<std::uint32_t> digits(digits_total, 0);
    std::vector<FiniteField::Elem> sum(len, 0);
    std::size_t nonzero = 0;
    while (true) {
      std::size_t i = 0;
      for (; i < digits_total; ++i) {
        const UPoly& v = dense[i];
        for (std::size_t j = 0; j < len; ++j) {
          if (v[j] == 0) continue;
          const bool was = sum[j] != 0;
          sum[j] = fq.add(sum[j], v[j]);
          const bool now = sum[j] != 0;
          if (was != now) nonzero += now ? 1 : std::size_t(-1);
        }
        if (++digits[i] < fq.p()) break;
        digits[i] = 0;
      }
      if (i == digits_total) break;  // wrapped: this denominator is exhausted
      ++out.visited;
      if (nonzero == 0) {
        std::vector<FieldElem> w;
        w.reserve(n);
        for (std::size_t v = 0; v < n; ++v) {
          UPoly y(bound + 1, 0);
          for (std::uint32_t k = 0; k <= bound; ++k) {
            FiniteField::Elem coef = 0, basis = 1;
            for (std::uint32_t t = 0; t < fq.e(); ++t) {
              coef = fq.add(coef, fq.mul(fq.from_int(digits[v * per_var + k * fq.e() + t]), basis));
              basis *= fq.p();
            }
            y[k] = coef;
          }
          w.push_back(FieldElem::fraction(field, std::move(y), delta));
        }
        out.witness = std::move(w);
        return out;
      }
      if (out.visited >= budget) return out;
    }
  }
  out.exhausted = true;
  return out;
}

ZeroDecision decide_no_nontrivial_zero(const PPoly& principal, const DecisionOptions& opts) {
  if (principal.principal_part() != principal)
    throw PreconditionError("decide_no_nontrivial_zero: argument is not a principal part");
  const auto& field = principal.field();
  const std::size_t n = principal.nvars();
  ZeroDecision d;
  if (n == 0) {
    d.verdict = Verdict::NoZero;
    d.stage = DecisionStage::Trivial;
    d.certificate = SemilinearCertificate{0, FieldElem::constant(field, 1), {}, {}, {}, 0};
    return d;
  }
  const auto vars = principal.variables();
  // an absent variable is a free direction
  for (std::size_t v = 0; v < n; ++v) {
    if (std::find(vars.begin(), vars.end(), v) != vars.end()) continue;
    d.verdict = Verdict::Zero;
    d.stage = DecisionStage::Trivial;
    d.witness.assign(n, FieldElem(field));
    d.witness[v] = FieldElem::constant(field, 1);
    return d;
  }
  std::vector<std::uint32_t> exps(n);
  std::vector<FieldElem> coeffs;
  for (const auto& [k, c] : principal.terms()) {
    exps[k.var] = k.e;
    coeffs.push_back(c);
  }
  std::vector<std::pair<std::size_t, std::size_t>> rows;
  for (std::size_t v = 0; v < n; ++v) rows.emplace_back(v, 0);
  const auto [min_it, max_it] = std::minmax_element(exps.begin(), exps.end());
  const std::uint32_t n_min = *min_it, n_max = *max_it;

  if (n_min == n_max) {
    auto core = equal_exponent_core(field, coeffs, n_min, rows);
    std::vector<FieldElem> w;
    if (core.kernel_vector) w = *core.kernel_vector;
    return from_core(std::move(core), DecisionStage::EqualExponent, std::move(w));
  }

  // relaxation: a zero x of P gives the zero w_i = x_i^(p^(N_i - N_min)) of Q
  auto relaxed = equal_exponent_core(field, coeffs, n_min, rows);
  if (!relaxed.kernel_vector) return from_core(std::move(relaxed), DecisionStage::Relaxation, {});

  // expansion: x_i = sum_{l < p^M_i} S_{i,l}^(p^M_i) b^l with M_i = N_max - N_i
  std::size_t expanded_rows = 0;
  for (auto e : exps) expanded_rows += field->p_power(n_max - e);
  if (opts.use_expansion && expanded_rows * field->p_power(n_max) <= opts.expansion_limit) {
    std::vector<FieldElem> ex_coeffs;
    std::vector<std::pair<std::size_t, std::size_t>> ex_rows;
    const FieldElem b = FieldElem::generator(field);
    for (std::size_t v = 0; v < n; ++v) {
      const std::uint64_t parts = field->p_power(n_max - exps[v]);
      const auto shift = static_cast<std::int64_t>(field->p_power(exps[v]));
      for (std::uint64_t l = 0; l < parts; ++l) {
        ex_coeffs.push_back(coeffs[v] * b.pow(static_cast<std::int64_t>(l) * shift));
        ex_rows.emplace_back(v, l);
      }
    }
    auto core = equal_exponent_core(field, ex_coeffs, n_max, ex_rows);
    std::vector<FieldElem> w;
    if (core.kernel_vector) {
      w.assign(n, FieldElem(field));
      for (std::size_t r = 0; r < ex_rows.size(); ++r) {
        const auto [v, l] = ex_rows[r];
        w[v] += frobenius((*core.kernel_vector)[r], n_max - exps[v]) * b.pow(static_cast<std::int64_t>(l));
      }
    }
    return from_core(std::move(core), DecisionStage::Expansion, std::move(w));
  }

  SearchResult s = search_zero(principal, opts.search_bound, opts.search_budget);
  d.stage = DecisionStage::Search;
  d.search_bound = opts.search_bound;
  d.searched = s.visited;
  if (s.witness) {
    d.verdict = Verdict::Zero;
    d.witness = std::move(*s.witness);
  } else {
    d.verdict = Verdict::Unknown;
  }
  return d;
}

ZeroDecision decide_no_nontrivial_zero(const ParamPPoly& principal, const DecisionOptions& opts) {
  return decide_no_nontrivial_zero(drop_params(principal), opts);
}

bool check_decision(const PPoly& principal, const ZeroDecision& d) {
  const auto& field = principal.field();
  if (d.verdict == Verdict::Zero) {
    if (d.witness.size() != principal.nvars()) return false;
    bool any = std::any_of(d.witness.begin(), d.witness.end(), [](const FieldElem& x) { return !x.is_zero(); });
    return any && evaluate(principal, d.witness).is_zero();
  }
  if (d.verdict == Verdict::Unknown) return true;
  if (!d.certificate) return false;
  const auto& cert = *d.certificate;
  if (principal.nvars() == 0) return cert.rows.empty();
  if (cert.scale.is_zero()) return false;
  // every variable must be covered by the rows
  std::vector<bool> covered(principal.nvars(), false);
  const FieldElem b = FieldElem::generator(field);
  const std::uint64_t cols = field->p_power(cert.exponent);
  for (std::size_t r = 0; r < cert.rows.size(); ++r) {
    const auto [v, l] = cert.rows[r];
    if (v >= principal.nvars() || cert.matrix[r].size() != cols) return false;
    covered[v] = true;
    auto top = principal.top_exponent(v);
    if (!top) return false;
    FieldElem c = principal.coefficient(static_cast<std::uint32_t>(v), *top);
    if (d.stage == DecisionStage::Expansion) {
      if (*top > cert.exponent || l >= field->p_power(cert.exponent - *top)) return false;
      c *= b.pow(static_cast<std::int64_t>(l * field->p_power(*top)));
    } else if (*top < cert.exponent) {
      return false;
    }
    FieldElem recombined(field);
    for (std::uint64_t j = 0; j < cols; ++j)
      recombined += frobenius(cert.matrix[r][j], cert.exponent) * b.pow(static_cast<std::int64_t>(j));
    if (recombined != c * cert.scale) return false;
  }
  if (!std::all_of(covered.begin(), covered.end(), [](bool x) { return x; })) return false;
  if (cert.pivot_columns.size() != cert.rows.size()) return false;
  Matrix minor;
  for (const auto& row : cert.matrix) {
    std::vector<FieldElem> r;
    for (auto c : cert.pivot_columns) r.push_back(row.at(c));
    minor.push_back(std::move(r));
  }
  return rank(minor, field, cert.pivot_columns.size()) == cert.rows.size();
}

}  // namespace wound
