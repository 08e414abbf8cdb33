#pragma once

#include "symbern/hypercube.hpp"
#include "symbern/matrix.hpp"
#include "symbern/pmf.hpp"
#include "symbern/polyrep.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace symbern {

/**
 * The homogeneous system A_d a = 0 whose solutions are the coefficient
 * vectors (over I_{d-1}^*, revlex) of polynomials of Σ_cx-smallest pmfs.
 *
 * d even: A_d = (1^T // A_{I*}), d rows.
 * d odd:  A_d = (R1 // R2 // A_{I*}), d+1 rows; R1 (R2) marks columns whose
 *         sum is M_d (m_d).
 */
struct MinCxSystem {
    std::size_t d = 0;
    StarSets star;
    RationalMatrix matrix;
    std::size_t rank = 0;
    std::size_t nullity = 0;
    std::vector<RationalVector> basis;  ///< RREF free-variable basis
};

/// Requires 3 <= d <= kMaxDimension.
MinCxSystem build_system(std::size_t d);

/**
 * The three coefficient conditions on a polynomial over X_{d-1}: zero off
 * I_{d-1}^*, zero sum per monomial order, zero sum per variable.
 */
bool satisfies_mincx_conditions(const PolyRep& p);

/// Embed a coefficient vector over I_{d-1}^* into a full PolyRep.
PolyRep poly_from_star_coeffs(const MinCxSystem& sys, std::span<const Rational> star_coeffs);

/// Polynomial of sum_k combination[k] * basis[k]. Throws ZeroCombination.
PolyRep mincx_poly(const MinCxSystem& sys, std::span<const Rational> combination);

/// Kernel-basis pmfs supported in X_d^*; in bijection with I_{d-1}^* (same order).
std::vector<Pmf> star_kernel_elements(std::size_t d);

/**
 * lambda * type0(P*) + (1 - lambda) * sum_k w_k K_k, with K_k the star
 * kernel elements (indexed like sys.star.i_star).
 *
 * lambda = 0 selects a pure kernel mixture (the only option when the
 * nullspace is trivial, d = 3, 4). lambda > 0 needs a nonzero combination;
 * lambda < 1 needs kernel weights that are nonnegative and sum to 1.
 */
Pmf generate_mincx(const MinCxSystem& sys, std::span<const Rational> combination, const Rational& lambda,
                   const std::vector<std::pair<std::size_t, Rational>>& kernel_weights);

/**
 * Seeded generator spanning both degrees of freedom:
 *  - combination: integers uniform in [-3, 3] per basis vector, redrawn
 *    while all zero;
 *  - lambda: k/10 with k uniform in 1..10 (lambda = 0 when nullity is 0);
 *  - kernel mixture: integer weights uniform in 0..9 per star kernel
 *    element, redrawn while all zero, normalized by their sum.
 * All draws come from Stream(seed, 0).
 */
struct GeneratedMinCx {
    std::vector<Rational> combination;
    Rational lambda;
    std::vector<std::pair<std::size_t, Rational>> kernel_weights;
    Pmf pmf;
};
GeneratedMinCx generate_mincx_random(const MinCxSystem& sys, std::uint64_t seed);

struct RankRow {
    std::size_t d = 0;  ///< odd
    std::size_t rank_d = 0;
    std::size_t rank_next = 0;  ///< rank of A_{d+1}
    bool holds = false;  ///< rank_d == rank_next == d
};

/// One row per odd d in [3, d_max]; d_max <= 12.
std::vector<RankRow> rank_property_check(std::size_t d_max);

}  // namespace symbern
