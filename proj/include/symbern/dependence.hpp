#pragma once

#include "symbern/copulas.hpp"
#include "symbern/hypercube.hpp"
#include "symbern/pmf.hpp"
#include "symbern/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace symbern {

// Coordinates are 1-based throughout this header, matching the usual
// (j1, j2) notation of the measures.

struct PairMeasure {
    std::size_t j1 = 0;
    std::size_t j2 = 0;
    Rational rho_p;  ///< 4 E[X_j1 X_j2] - 1
    Rational tau_k;  ///< P((X-X')(Y-Y') >= 0) - P((X-X')(Y-Y') <= 0)
};

/// Exact Bernoulli measures. Throws IndexOutOfRange.
PairMeasure bernoulli_pair_measures(const Pmf& f, std::size_t j1, std::size_t j2);

/**
 * Mean pairwise measures of X and of the two copulas built from it. The
 * copula values follow from the Bernoulli ones: V keeps rho and tau,
 * rho(U) = rho(X) / 3 and tau(U) = 2 rho(X) / 9.
 */
struct MeanMeasures {
    Rational rho_x, tau_x;
    Rational rho_v, tau_v;
    Rational rho_u, tau_u;
};
MeanMeasures mean_measures(const Pmf& f);

/// -1/(d-1) for even d, -1/d for odd d.
Rational minimal_mean_correlation(std::size_t d);

/// phi(y) = 8/(d(d-1)) C(y,2) - 1, for every integer y; E[phi(S)] is the mean correlation.
Rational phi(std::size_t y, std::size_t d);
/// The piecewise variant that is 0 below y = 2. Not an identity; kept for comparison only.
Rational phi_piecewise_zero(std::size_t y, std::size_t d);
Rational phi_expectation(const Pmf& f);
Rational phi_expectation_piecewise_zero(const Pmf& f);

struct PairCounts {
    std::size_t n_plus = 0;   ///< comonotonic pairs
    std::size_t n_minus = 0;  ///< countermonotonic pairs
    bool operator==(const PairCounts&) const = default;
};
/// For the two-point law on {x, 1 - x}. Throws NotKernelStar unless sum(x) is in {M_d, m_d}.
PairCounts pair_counts(const BitVector& x);
/// f must be a two-point kernel element supported in X_d^*.
PairCounts pair_counts(const Pmf& f);
PairCounts pair_counts_closed_form(std::size_t d);

/// Standardized third cross moment 8 E[prod (X_j - 1/2)], exact. Indexes distinct.
Rational cross_moment3(const Pmf& f, std::size_t j1, std::size_t j2, std::size_t j3);
/// mu3 of the EM copula vector V; zero for every pmf since V - 1/2 = (U - 1/2)(2X - 1).
Rational cross_moment3_em(const Pmf& f, std::size_t j1, std::size_t j2, std::size_t j3);
/// mu3 of the FGM vector U: (sqrt(3)/9) * mu3(X).
double cross_moment3_fgm(const Pmf& f, std::size_t j1, std::size_t j2, std::size_t j3);
inline const double kFgmCrossMomentFactor = 0.19245008972987526;  // sqrt(3)/9
/// The -3 sqrt(3) factor found in the literature; does not match simulation.
inline const double kPrintedFgmCrossMomentFactor = -5.196152422706632;

/// Exact countermonotonicity of a finitely supported pair law: no two atoms are strictly concordant.
bool ctm_pair_exact(const std::vector<std::pair<Rational, Rational>>& atoms);
/// Every split (sum_{J} X_j, sum_{not J} X_j) is countermonotonic. d <= 12.
bool sigma_ctm_exact(const Pmf& f);
inline constexpr std::size_t kMaxSigmaCtmDimension = 12;

struct CtmWitness {
    BitVector x1, x2;
    Rational u1, u2;
    Rational a1, b1, a2, b2;  ///< (sum over J, sum over complement) for each copy
    Rational product;         ///< (a1 - a2)(b1 - b2) > 0
};

struct CtmCheck {
    enum class Kind { ExactTrue, McPass, McFail } kind = Kind::McFail;
    double p_hat = 0.0;     ///< estimated (or exact for two-point laws) P[(A1-A2)(B1-B2) <= 0]
    std::size_t pairs = 0;  ///< simulated pairs; 0 for the exact path
    std::optional<CtmWitness> witness;
};

const char* to_string(CtmCheck::Kind kind);

/**
 * Countermonotonicity of (sum_{j in J} V_j, sum_{j not in J} V_j) for the EM
 * vector V = U X + (1 - U)(1 - X).
 *
 * Two-point laws {x, 1 - x} are decided exactly: conditional on X, both sums
 * are affine in U with integer slopes alpha = 2k - |J| and
 * beta = 2k' - |J^c| (k, k' the ones of x in J and J^c), and every one of the
 * four conditioning cases gives (A1 - A2)(B1 - B2) = alpha beta (...)^2,
 * so the pair is countermonotonic iff alpha beta <= 0.
 *
 * Other laws are simulated: n independent pairs of copies, each sign
 * evaluated in exact arithmetic on the (dyadic) sampled uniforms. A single
 * strictly concordant pair is a McFail witness.
 */
CtmCheck em_sigma_ctm_check(const AtomicLaw& law, std::span<const std::size_t> subset, std::size_t n,
                            std::uint64_t seed);

struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
};

/// 12 * mean((a - 1/2)(b - 1/2)): Pearson correlation with known uniform margins.
Estimate sample_pearson_uniform(std::span<const Sample> samples, std::size_t j1, std::size_t j2);
/// Kendall's tau from disjoint consecutive sample pairs.
Estimate sample_kendall(std::span<const Sample> samples, std::size_t j1, std::size_t j2);
/// mean(prod (u_j - 1/2)) / (1/12)^{3/2}.
Estimate sample_cross_moment3_uniform(std::span<const Sample> samples, std::size_t j1, std::size_t j2,
                                      std::size_t j3);
/// Empirical E[(sum_j u_j - k)^+] for each threshold k.
std::vector<double> sample_stop_loss(std::span<const Sample> samples, std::span<const double> thresholds);

}  // namespace symbern
