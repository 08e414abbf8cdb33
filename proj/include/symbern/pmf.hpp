#pragma once

#include "symbern/hypercube.hpp"
#include "symbern/matrix.hpp"
#include "symbern/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace symbern {

/**
 * A point of SB_d: a pmf on {0,1}^d (revlex order) with every
 * one-dimensional marginal mean equal to 1/2.
 *
 * The only way to obtain a Pmf is through validate() (or helpers that call
 * it), so every instance satisfies nonnegativity, normalization and
 * H_d f = 0.
 */
class Pmf {
public:
    /// Throws NotAPmf (length, negativity, normalization) or NotSymmetricMarginals.
    static Pmf validate(std::vector<Rational> values, std::size_t d);
    /// Sparse construction; unspecified atoms are zero.
    static Pmf from_atoms(std::size_t d, const std::map<BitVector, Rational>& atoms);

    std::size_t d() const noexcept { return d_; }
    std::size_t size() const noexcept { return values_.size(); }
    const std::vector<Rational>& values() const noexcept { return values_; }
    const Rational& operator[](std::uint32_t index) const { return values_[index]; }
    const Rational& at(const BitVector& x) const;

    /// Indexes with positive mass, increasing.
    std::vector<std::uint32_t> support() const;

    bool operator==(const Pmf&) const = default;

private:
    Pmf(std::size_t d, std::vector<Rational> values) : d_(d), values_(std::move(values)) {}
    std::size_t d_ = 0;
    std::vector<Rational> values_;
};

/**
 * A finitely supported law on {0,1}^d for any d, listed by atoms. This is
 * the representation used when d exceeds the dense cap (e.g. d = 103).
 */
struct AtomicLaw {
    std::size_t d = 0;
    std::vector<BitVector> points;
    std::vector<Rational> probs;

    static AtomicLaw from_pmf(const Pmf& f);
    /// Throws NotAPmf / NotSymmetricMarginals under the same rules as Pmf::validate.
    void check() const;
};

struct SumDistribution {
    std::size_t d = 0;
    std::vector<Rational> probs;  ///< probs[k] = P(S = k), k = 0..d

    Rational mean() const;
    Rational variance() const;
};

enum class CxOrder { Smaller, Larger, Equal, Incomparable };

const char* to_string(CxOrder order);

/// Rows (1 - 2 x_h)^T, h = 1..d, as a d x 2^d matrix.
RationalMatrix marginal_matrix(std::size_t d);

Pmf independence(std::size_t d);
/// Upper Fréchet bound: mass 1/2 on 0_d and 1_d.
Pmf upper_frechet(std::size_t d);
/// Two-point pmf with f(x) = f(1_d - x) = 1/2.
Pmf two_point(const BitVector& x);

/// The 2^(d-1) two-point palindromic pmfs, ordered by the revlex position of s_i = (i // 0).
std::vector<Pmf> kernel_basis(std::size_t d);

bool is_palindromic(const Pmf& f);
/// (f(x) + f(1_d - x)) / 2, the palindromic pmf with the same complement-pair masses.
Pmf palindromize(const Pmf& f);

SumDistribution sum_distribution(const Pmf& f);
SumDistribution sum_distribution(const AtomicLaw& law);

/// E[(S - k)^+].
Rational stop_loss(const SumDistribution& s, std::size_t k);
std::vector<Rational> stop_loss_vector(const SumDistribution& s);

/// Convex order of the sums, decided by stop-loss at every integer threshold.
CxOrder cx_compare(const Pmf& f, const Pmf& g);
CxOrder cx_compare(const SumDistribution& f, const SumDistribution& g);

/// supp(f) contained in X_d^*.
bool is_sigma_cx_smallest(const Pmf& f);
bool is_joint_mix(const Pmf& f);
/// Columns of (H_d // 1^T) on supp(f) are linearly independent.
bool is_vertex(const Pmf& f);

}  // namespace symbern
