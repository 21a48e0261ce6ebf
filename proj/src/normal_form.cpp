#include "wound/normal_form.hpp"

#include <algorithm>
#include <random>

namespace wound {

RelationSet::RelationSet(FieldPtr field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

void RelationSet::add(PPoly equation, std::optional<std::size_t> pivot) {
  if (equation.nvars() != nvars_) throw InputError("relation lives in a different variable space");
  if (!same_field(equation.field(), field_)) throw PreconditionError("relation over a different tower level");
  const std::size_t piv = pivot ? *pivot : default_pivot(equation);
  if (!equation.top_exponent(piv)) throw PreconditionError("relation pivot does not occur in the relation");
  if (!coeff::is_unit(equation.leading_coefficient(piv)))
    throw PreconditionError("relation pivot has a non-unit leading coefficient");
  const auto block = equation.variables();
  for (const auto& r : relations_) {
    if (r.pivot == piv) throw PreconditionError("two relations share a pivot");
    for (auto v : r.equation.variables())
      if (std::find(block.begin(), block.end(), v) != block.end())
        throw PreconditionError("relation variable blocks overlap");
  }
  relations_.push_back({std::move(equation), piv, std::nullopt});
}

void RelationSet::set_parametrization(std::size_t index, Parametrization param) {
  auto& rel = relations_.at(index);
  if (param.coords.size() != rel.equation.variables().size())
    throw InputError("parametrization must give one coordinate per block variable");
  for (const auto& c : param.coords)
    if (c.nvars() != 1) throw InputError("parametrization coordinates must be p-polynomials in one variable");
  rel.parametrization = std::move(param);
}

std::string RelationSet::to_string(std::span<const std::string> names) const {
  std::string out;
  for (const auto& r : relations_) {
    if (!out.empty()) out += "; ";
    out += r.equation.to_string(names) + " [pivot " + names[r.pivot] + "]";
  }
  return out;
}

namespace {

// Remainders pivot^k mod F for k >= bound, built by repeated multiplication.
class PowerRemainders {
 public:
  PowerRemainders(const Relation& rel, std::size_t nvars) : pivot_(rel.pivot), nvars_(nvars) {
    const auto& f = rel.equation;
    bound_ = static_cast<std::uint32_t>(f.field()->p_power(*f.top_exponent(pivot_)));
    const FieldElem u_inv = f.leading_coefficient(pivot_).inverse();
    tail_ = Poly::variable(f.field(), nvars, pivot_, bound_) - to_poly(f) * u_inv;
    cache_.push_back(tail_);
  }

  std::uint32_t bound() const { return bound_; }

  const Poly& get(std::uint32_t k) {
    while (bound_ + cache_.size() <= k) {
      const Poly& prev = cache_.back();
      Poly next(prev.field(), nvars_);
      for (const auto& [e, c] : prev.terms()) {
        Exponents s = e;
        if (++s[pivot_] == bound_) {
          s[pivot_] = 0;
          next += Poly::monomial(c, std::move(s)) * tail_;
        } else {
          next.add_term(s, c);
        }
      }
      cache_.push_back(std::move(next));
    }
    return cache_[k - bound_];
  }

 private:
  std::size_t pivot_;
  std::size_t nvars_;
  std::uint32_t bound_ = 0;
  Poly tail_{nullptr, 0};
  std::vector<Poly> cache_;
};

}  // namespace

Poly normal_form(const Poly& h, const RelationSet& rels) {
  if (h.nvars() != rels.nvars()) throw InputError("normal_form: polynomial and relations use different spaces");
  Poly cur = h;
  for (const auto& rel : rels.relations()) {
    PowerRemainders rems(rel, h.nvars());
    Poly next(h.field(), h.nvars());
    for (const auto& [e, c] : cur.terms()) {
      if (e[rel.pivot] < rems.bound()) {
        next.add_term(e, c);
        continue;
      }
      Exponents s = e;
      const std::uint32_t k = s[rel.pivot];
      s[rel.pivot] = 0;
      next += Poly::monomial(c, std::move(s)) * rems.get(k);
    }
    cur = std::move(next);
  }
  return cur;
}

bool is_identically_zero(const Poly& h, const RelationSet& rels) { return normal_form(h, rels).is_zero(); }

IdentityCheck make_identity_check(std::string label, Poly poly, RelationSet relations) {
  const bool v = is_identically_zero(poly, relations);
  return {std::move(label), std::move(poly), std::move(relations), v};
}

namespace {

FieldElem random_element(const FieldPtr& field, std::mt19937_64& rng, std::uint32_t degree) {
  std::uniform_int_distribution<std::uint32_t> dist(0, field->fq().q() - 1);
  UPoly u(degree + 1);
  for (auto& c : u) c = dist(rng);
  return FieldElem::fraction(field, std::move(u), UPoly{1});
}

// A variable of the relation occurring in exactly one term, preferring the pivot.
std::optional<std::size_t> solvable_variable(const Relation& rel) {
  if (rel.equation.occurrences(rel.pivot) == 1) return rel.pivot;
  for (auto v : rel.equation.variables())
    if (rel.equation.occurrences(v) == 1) return v;
  return std::nullopt;
}

}  // namespace

bool random_point_oracle(const Poly& h, const RelationSet& rels, const OracleOptions& opts) {
  if (h.nvars() != rels.nvars()) throw InputError("random_point_oracle: polynomial and relations use different spaces");
  const FieldPtr& base = rels.field();
  // how deep each relation's sampler reaches
  std::uint32_t depth = std::max(base->depth(), h.field()->depth());
  std::vector<std::optional<std::size_t>> solve_for;
  for (const auto& rel : rels.relations()) {
    auto v = solvable_variable(rel);
    solve_for.push_back(v);
    if (v) {
      depth = std::max(depth, base->depth() + *rel.equation.top_exponent(*v));
    } else if (rel.parametrization) {
      depth = std::max(depth, rel.parametrization->field->depth());
    } else {
      throw UnsupportedRelation("no sampler for relation " + rel.equation.to_string(default_names(rels.nvars())));
    }
  }
  const FieldPtr deep = extend_depth(base, depth);
  const Poly target = h.embed_field(deep);

  for (std::uint32_t trial = 0; trial < opts.trials; ++trial) {
    std::mt19937_64 rng(opts.seed * 0x9E3779B97F4A7C15ull + trial);
    std::vector<std::optional<FieldElem>> point(rels.nvars());
    for (std::size_t r = 0; r < rels.relations().size(); ++r) {
      const auto& rel = rels.relations()[r];
      const auto block = rel.equation.variables();
      if (solve_for[r]) {
        const std::size_t v = *solve_for[r];
        FieldElem rest(base);
        std::vector<FieldElem> local(rels.nvars(), FieldElem(base));
        for (auto w : block)
          if (w != v) local[w] = random_element(base, rng, opts.degree);
        for (const auto& [k, c] : rel.equation.terms())
          if (k.var != v) rest += c * frobenius(local[k.var], k.e);
        const auto e = *rel.equation.top_exponent(v);
        const FieldElem& c = rel.equation.coefficient(static_cast<std::uint32_t>(v), e);
        for (auto w : block) point[w] = embed(local[w], deep);
        point[v] = root_in_extension(-rest / c, e, deep);
      } else {
        const auto& param = *rel.parametrization;
        const FieldElem t = random_element(param.field, rng, opts.degree);
        for (std::size_t i = 0; i < block.size(); ++i)
          point[block[i]] = embed(evaluate(param.coords[i], std::span<const FieldElem>(&t, 1)), deep);
      }
    }
    std::vector<FieldElem> values;
    values.reserve(point.size());
    for (auto& x : point) values.push_back(x ? *x : embed(random_element(base, rng, opts.degree), deep));
    if (!target.evaluate(values).is_zero()) return false;
  }
  return true;
}

}  // namespace wound
