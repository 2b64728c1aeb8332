#pragma once

#include <string>
#include <vector>

#include "desire/rational.hpp"
#include "desire/things.hpp"
#include "desire/verdict.hpp"

namespace desire {

using RationalVector = std::vector<Rational>;

/// Which exact feasibility engine decides a hull query. automatic picks
/// Fourier-Motzkin for small generator counts and simplex beyond; the two
/// engines are cross-checked against each other in the tests.
enum class HullEngine { automatic, fourier_motzkin, simplex };

/// True iff target = sum of lambda_i * generators[i] for some lambda >= 0
/// with lambda != 0. Exact; throws DimensionMismatch on ragged input.
bool member_positive_hull(const RationalVector& target,
                          const std::vector<RationalVector>& generators,
                          HullEngine engine = HullEngine::automatic);

/// True iff target is a convex combination of the generators. Exact.
bool member_convex_hull(const RationalVector& target,
                        const std::vector<RationalVector>& generators,
                        HullEngine engine = HullEngine::automatic);

enum class AssessmentPreset { gambles_default, gambles_inf_positive, lottery, none };

/// Scans a rational-vector universe against a preset predicate pair.
/// gambles_default: forbidden = pointwise <= 0; required = pointwise >= 0
/// with some coordinate > 0. gambles_inf_positive: required tightens to all
/// coordinates > 0. lottery: required/forbidden = full mass on the listed
/// positive/negative prizes in every state (coordinates act as prize
/// probabilities; for grids, per state row).
Assessment preset_assessment(const Universe& u, AssessmentPreset preset,
                             const std::vector<std::string>& positive_prizes = {},
                             const std::vector<std::string>& negative_prizes = {});

/// Verified iff every payload is nonnegative and each per-state row sums
/// to one. Violated names the offending thing.
Verdict validate_horse_lottery(const Universe& u);

namespace detail {

/// One linear constraint: coeffs . x <= rhs, over free variables.
struct Inequality {
  std::vector<Rational> coeffs;
  Rational rhs;
};

/// Decides satisfiability of a conjunction of inequalities over free
/// rational variables, by variable elimination.
bool feasible_fm(int nvars, std::vector<Inequality> rows);

/// Same question, decided by exact two-phase simplex (Bland's rule).
bool feasible_simplex(int nvars, const std::vector<Inequality>& rows);

bool feasible(int nvars, const std::vector<Inequality>& rows, HullEngine engine);

}  // namespace detail

}  // namespace desire
