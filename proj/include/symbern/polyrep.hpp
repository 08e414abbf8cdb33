#pragma once

#include "symbern/hypercube.hpp"
#include "symbern/matrix.hpp"
#include "symbern/pmf.hpp"

#include <optional>
#include <vector>

namespace symbern {

/**
 * Image of a pmf under H: a multilinear polynomial in z_1..z_{d-1},
 * stored as its 2^(d-1) coefficients in revlex order of the exponent
 * vectors i in X_{d-1}. The coefficient of z^i is f(s_i) - f(1_d - s_i).
 */
class PolyRep {
public:
    PolyRep() = default;
    PolyRep(std::size_t d, std::vector<Rational> coeffs);

    std::size_t d() const noexcept { return d_; }
    std::size_t num_vars() const noexcept { return d_ - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& coeff(const BitVector& exponents) const;
    bool is_zero() const;

    /// Coefficientwise linear combination alpha*this + beta*other.
    PolyRep combine(const Rational& alpha, const PolyRep& other, const Rational& beta) const;
    /// Sum of |a_i|.
    Rational l1_norm() const;

    bool operator==(const PolyRep&) const = default;

private:
    std::size_t d_ = 0;
    std::vector<Rational> coeffs_;
};

/// Q = (I || Ĩ), the 2^(d-1) x 2^d matrix with a = Q f.
RationalMatrix q_matrix(std::size_t d);

PolyRep to_poly(const Pmf& f);

Rational eval(const PolyRep& p, std::span<const Rational> z);

/// The d points 1_{d-1} and 1_{d-1}^{-j}, j = 1..d-1.
std::vector<std::vector<Rational>> ideal_points(std::size_t d);

/// p vanishes on every point of P.
bool in_ideal(const PolyRep& p);

/// mu > 0 with p = mu * q, if any. Two zero polynomials give mu = 1.
std::optional<Rational> equivalent(const PolyRep& p, const PolyRep& q);

struct Type0 {
    Pmf pmf;
    /// Normalizing constant sum_i |a_i| divided out by the algorithm.
    Rational mass;
};

/// Throws ZeroPolynomial or NotInIdeal.
Type0 type0(const PolyRep& p);

/// lambda * type0(p) + (1 - lambda) * kernel. Throws InvalidLambda, KernelNotPalindromic.
Pmf counter_image_member(const PolyRep& p, const Rational& lambda, const Pmf& kernel);

/**
 * Split f = lambda * type0(H(f)) + (1 - lambda) * k with k palindromic.
 * lambda is the l1 mass of H(f); kernel is absent when lambda = 1.
 * Throws ZeroPolynomial for palindromic f.
 */
struct Decomposition {
    Rational lambda;
    Pmf type0;
    std::optional<Pmf> kernel;
};
Decomposition decompose(const Pmf& f);

}  // namespace symbern
