#pragma once

#include "symbern/hypercube.hpp"
#include "symbern/pmf.hpp"
#include "symbern/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace symbern {

/**
 * Extremal mixture copula C = sum_i w_i C_i over i in X_{d-1}, where C_i is
 * the law of V_j = U (j in J_i) / 1 - U (j not in J_i) and J_i is the set
 * of ones of s_i = (i // 0). Weights are stored sparsely.
 */
struct EmCopula {
    std::size_t d = 0;
    std::map<BitVector, Rational> weights;  ///< keys of length d - 1, all w > 0

    /// The single extremal copula whose index set is the ones of `x`
    /// (x and 1_d - x define the same copula). Any d.
    static EmCopula extremal(const BitVector& x);
    void check() const;
    bool operator==(const EmCopula&) const = default;
};

/// w_i = f(s_i) + f(1_d - s_i).
EmCopula em_from_pmf(const Pmf& f);
EmCopula em_from_law(const AtomicLaw& law);

/// Throws InputOutOfRange for u outside [0,1]^d.
double em_cdf(const EmCopula& c, std::span<const double> u);

using Sample = std::vector<double>;

/// V = U X + (1 - U)(1 - X); draw i uses Stream(seed, i).
std::vector<Sample> em_sample(const AtomicLaw& law, std::size_t n, std::uint64_t seed);
std::vector<Sample> em_sample(const Pmf& f, std::size_t n, std::uint64_t seed);

/**
 * FGM copula C(u) = prod u_j (1 + sum_{|S|>=2} theta_S prod_{j in S} (1 - u_j)).
 * Subsets are bitmasks over coordinates (bit h = coordinate h + 1), so
 * d <= 20. Absent thetas are zero. When built from a pmf with d above the
 * eager limit, thetas are computed on demand from the retained pmf.
 */
class FgmCopula {
public:
    FgmCopula() = default;
    FgmCopula(std::size_t d, std::map<std::uint32_t, Rational> thetas);

    std::size_t d() const noexcept { return d_; }
    /// Explicitly stored thetas (all of them for eager copulas).
    const std::map<std::uint32_t, Rational>& stored() const noexcept { return thetas_; }
    bool is_lazy() const noexcept { return source_ != nullptr; }
    Rational theta(std::uint32_t subset) const;
    /// Dense vector of all 2^d thetas (theta_empty = 1, singletons 0).
    std::vector<Rational> dense() const;

    bool operator==(const FgmCopula& other) const;

private:
    friend FgmCopula fgm_from_pmf(const Pmf& f);
    std::size_t d_ = 0;
    std::map<std::uint32_t, Rational> thetas_;
    std::shared_ptr<const Pmf> source_;
};

inline constexpr std::size_t kEagerFgmDimension = 12;

/// theta_S = (-2)^|S| E[prod_{j in S}(X_j - 1/2)] = E[prod_{j in S}(1 - 2 X_j)].
Rational fgm_theta(const Pmf& f, std::uint32_t subset);
FgmCopula fgm_from_pmf(const Pmf& f);

/// All 2^d sign constraints 1 + sum theta_S prod eps_j >= 0, exact.
bool fgm_admissible(const FgmCopula& c);

double fgm_cdf(const FgmCopula& c, std::span<const double> u);
/// sum_x f(x) prod_h u_h (1 + (-1)^{x_h} (1 - u_h)).
double fgm_cdf_from_pmf(const Pmf& f, std::span<const double> u);

/// U_j = 1 - exp(-(Z_j0 + X_j Z_j1)), Z_j0 ~ Exp(mean 1/2), Z_j1 ~ Exp(mean 1).
std::vector<Sample> fgm_sample(const AtomicLaw& law, std::size_t n, std::uint64_t seed);
std::vector<Sample> fgm_sample(const Pmf& f, std::size_t n, std::uint64_t seed);

/// In-place Walsh-Hadamard transform: out[S] = sum_T in[T] (-1)^{|S ∩ T|}.
void walsh_hadamard(std::vector<Rational>& values);

/// Draw an atom index of `law` from one uniform variate (cumulative search).
std::size_t draw_atom(const std::vector<double>& cumulative, double u);
std::vector<double> cumulative_probs(const AtomicLaw& law);

}  // namespace symbern
