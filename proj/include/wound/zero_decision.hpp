#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wound/linalg.hpp"
#include "wound/ppoly.hpp"

namespace wound {

enum class Verdict { NoZero, Zero, Unknown };

/// Which step of the procedure settled the question.
enum class DecisionStage {
  Trivial,        // a variable is absent, or there are no variables
  EqualExponent,  // exact rank test, all exponents equal
  Relaxation,     // w_i = x_i^(p^(N_i - N_min)) reduced to the equal case
  Expansion,      // x_i expanded over the basis {b^l} of k over k^(p^(N_max - N_i))
  Search,         // bounded witness enumeration
};

std::string to_string(Verdict v);
std::string to_string(DecisionStage s);

/// Certificate that sum_r c_r S_r^(p^N) has only the trivial zero.
///
/// Each coefficient is written c_r * scale = sum_{j < p^N} matrix[r][j]^(p^N) b^j
/// with b the working generator. Since {b^j} is a basis of k over k^(p^N),
/// a zero S satisfies sum_r matrix[r][j] S_r = 0 for every j, so an invertible
/// minor on `pivot_columns` rules out nonzero S.
struct SemilinearCertificate {
  std::uint32_t exponent = 0;
  FieldElem scale;
  /// Row r stands for the unknown x_var (basis_index 0) or, for the expansion
  /// stage, for the component S_{var,l} in x_var = sum_l S_{var,l}^(p^M) b^l.
  std::vector<std::pair<std::size_t, std::size_t>> rows;
  Matrix matrix;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
};

struct ZeroDecision {
  Verdict verdict = Verdict::Unknown;
  DecisionStage stage = DecisionStage::Trivial;
  std::optional<SemilinearCertificate> certificate;  // NoZero
  std::vector<FieldElem> witness;                    // Zero
  std::uint32_t search_bound = 0;                    // Unknown
  std::uint64_t searched = 0;
};

struct DecisionOptions {
  /// Degree bound D for witness numerators and the common denominator.
  std::uint32_t search_bound = 3;
  /// Maximum number of candidate vectors visited by the search.
  std::uint64_t search_budget = 10'000'000;
  /// Run the exact basis-expansion stage for mixed exponents.
  bool use_expansion = true;
  /// Upper bound on rows * columns of the expanded matrix.
  std::size_t expansion_limit = 20'000;
};

/// Decides whether a principal part sum c_i X_i^(p^(N_i)) has a nonzero
/// zero in k^n. P must equal its own principal part and have field-element
/// coefficients.
ZeroDecision decide_no_nontrivial_zero(const PPoly& principal, const DecisionOptions& opts = {});
/// Rejects parameter-dependent coefficients with PreconditionError.
ZeroDecision decide_no_nontrivial_zero(const ParamPPoly& principal, const DecisionOptions& opts = {});

/// Re-derives a NoZero certificate from scratch: the coefficient identities
/// and the rank of the pivot minor. For Zero, checks the witness.
bool check_decision(const PPoly& principal, const ZeroDecision& d);

struct SearchResult {
  std::optional<std::vector<FieldElem>> witness;
  std::uint64_t visited = 0;
  bool exhausted = false;  // the whole bounded space was covered
};

/// Lexicographic enumeration of x = y / delta with delta monic and all
/// numerators of degree <= bound in the working generator. P is F_p-linear,
/// so each step updates a running image by one precomputed vector.
SearchResult search_zero(const PPoly& p, std::uint32_t bound, std::uint64_t budget);

/// The decomposition u_j with c = sum_{j < p^N} u_j^(p^N) b^j for a
/// polynomial c (denominator 1).
std::vector<FieldElem> semilinear_decomposition(const FieldElem& c, std::uint32_t n);

}  // namespace wound
