#pragma once

// Shared fixtures and brute-force oracles for the test binaries. The oracles
// work directly on bitstrings and explicit sums, independently of the
// library's index arithmetic.

#include "symbern/hypercube.hpp"
#include "symbern/matrix.hpp"
#include "symbern/pmf.hpp"
#include "symbern/polyrep.hpp"
#include "symbern/rng.hpp"

#include <map>
#include <string>
#include <vector>

namespace fixtures {

using symbern::BitVector;
using symbern::Pmf;
using symbern::Rational;

inline Rational q(long n, long d = 1) { return symbern::make_rational(n, d); }

inline std::vector<Rational> ints(const std::vector<long>& xs) {
    std::vector<Rational> out;
    for (long x : xs) out.push_back(Rational(x));
    return out;
}

inline Pmf pmf_of(std::size_t d, const std::vector<std::pair<std::string, Rational>>& atoms) {
    std::map<BitVector, Rational> m;
    for (const auto& [x, p] : atoms) m[BitVector::parse(x)] += p;
    return Pmf::from_atoms(d, m);
}

// Coefficient vectors over I*_4 in revlex order (1100, 1010, 0110, 1110, 1001, 0101, 1101, 0011, 1011, 0111).
inline const std::vector<std::vector<long>> kBasisD5 = {
    {0, 1, -1, 0, -1, 1, 0, 0, 0, 0},
    {0, 1, 0, -1, -1, 0, 1, 0, 0, 0},
    {1, 0, -1, 0, -1, 0, 0, 1, 0, 0},
    {1, 0, 0, -1, -1, 0, 0, 0, 1, 0},
    {1, 1, -1, -1, -1, 0, 0, 0, 0, 1},
};

// d = 3 example pmfs.
inline Pmf f1_d3() { return Pmf::validate({q(3, 10), q(1, 10), q(1, 10), 0, q(1, 10), 0, 0, q(4, 10)}, 3); }
inline Pmf f2_d3() { return Pmf::validate({q(1, 10), q(1, 10), q(1, 10), q(2, 10), q(3, 10), 0, 0, q(2, 10)}, 3); }
inline Pmf f3_d3() { return Pmf::validate({0, q(1, 4), q(1, 4), 0, q(1, 4), 0, 0, q(1, 4)}, 3); }
inline Pmf f4_d3() { return Pmf::validate({q(1, 4), 0, 0, q(1, 4), 0, q(1, 4), q(1, 4), 0}, 3); }

inline Pmf f1_d5() {
    return pmf_of(5, {{"10100", q(1, 4)}, {"10011", q(1, 4)}, {"01101", q(1, 4)}, {"01010", q(1, 4)}});
}
inline Pmf f1_d6() {
    return pmf_of(6, {{"110100", q(1, 4)}, {"010011", q(1, 4)}, {"001101", q(1, 4)}, {"101010", q(1, 4)}});
}
inline Pmf tilde_d6() {
    return pmf_of(6, {{"101010", q(1, 4)}, {"100101", q(1, 4)}, {"011001", q(1, 4)}, {"010110", q(1, 4)}});
}
/// Σ_cx-smallest in SB_5 whose EM copula is not Σ-countermonotonic.
inline Pmf counterexample_d5() {
    return pmf_of(5, {{"10001", q(1, 4)}, {"00011", q(1, 4)}, {"01110", q(1, 4)}, {"11100", q(1, 4)}});
}
inline Pmf minimal_d4() { return pmf_of(4, {{"1100", q(1, 2)}, {"0011", q(1, 2)}}); }
inline Pmf lower_frechet_d2() { return Pmf::validate({0, q(1, 2), q(1, 2), 0}, 2); }

// ---- oracles ----

inline unsigned ones(const std::string& bits) {
    unsigned n = 0;
    for (char c : bits) n += c == '1';
    return n;
}

/// All bitstrings of length d in revlex order, built by counting with coordinate 1 fastest.
inline std::vector<std::string> revlex_strings(std::size_t d) {
    std::vector<std::string> out;
    std::string x(d, '0');
    out.push_back(x);
    while (true) {
        std::size_t h = 0;
        while (h < d && x[h] == '1') x[h++] = '0';
        if (h == d) break;
        x[h] = '1';
        out.push_back(x);
    }
    return out;
}

inline std::string flip(std::string x) {
    for (auto& c : x) c = c == '1' ? '0' : '1';
    return x;
}

/// f(x) keyed by bitstring.
inline std::map<std::string, Rational> atoms_by_string(const Pmf& f) {
    std::map<std::string, Rational> out;
    const auto xs = revlex_strings(f.d());
    for (std::size_t k = 0; k < xs.size(); ++k) out[xs[k]] = f.values()[k];
    return out;
}

inline std::vector<Rational> brute_sum_distribution(const Pmf& f) {
    std::vector<Rational> probs(f.d() + 1);
    for (const auto& [x, p] : atoms_by_string(f)) probs[ones(x)] += p;
    return probs;
}

inline Rational brute_stop_loss(const std::vector<Rational>& probs, long k) {
    Rational s = 0;
    for (long j = 0; j < static_cast<long>(probs.size()); ++j) {
        if (j > k) s += (j - k) * probs[j];
    }
    return s;
}

/// E[X_a X_b] with 1-based coordinates.
inline Rational brute_joint_one(const Pmf& f, std::size_t a, std::size_t b) {
    Rational s = 0;
    for (const auto& [x, p] : atoms_by_string(f)) {
        if (x[a - 1] == '1' && x[b - 1] == '1') s += p;
    }
    return s;
}

/// Kendall's tau from the definitional double sum over two independent copies of the full vector.
inline Rational brute_tau(const Pmf& f, std::size_t a, std::size_t b) {
    const auto atoms = atoms_by_string(f);
    Rational t = 0;
    for (const auto& [x, p] : atoms) {
        for (const auto& [y, r] : atoms) {
            const int s = ((x[a - 1] - '0') - (y[a - 1] - '0')) * ((x[b - 1] - '0') - (y[b - 1] - '0'));
            if (s >= 0) t += p * r;
            if (s <= 0) t -= p * r;
        }
    }
    return t;
}

/// Σ-countermonotonicity over every subset J (including those with coordinate d) and every pair of atoms.
inline bool brute_sigma_ctm(const Pmf& f) {
    std::vector<std::string> supp;
    for (const auto& [x, p] : atoms_by_string(f)) {
        if (p > 0) supp.push_back(x);
    }
    const std::size_t d = f.d();
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
        for (const auto& x : supp) {
            for (const auto& y : supp) {
                long ax = 0, bx = 0, ay = 0, by = 0;
                for (std::size_t j = 0; j < d; ++j) {
                    const bool in = (mask >> j) & 1u;
                    (in ? ax : bx) += x[j] - '0';
                    (in ? ay : by) += y[j] - '0';
                }
                if ((ax - ay) * (bx - by) > 0) return false;
            }
        }
    }
    return true;
}

/// 8 E[prod (X_j - 1/2)] by enumeration.
inline Rational brute_cross_moment3(const Pmf& f, std::size_t a, std::size_t b, std::size_t c) {
    Rational s = 0;
    for (const auto& [x, p] : atoms_by_string(f)) {
        Rational prod = 8;
        for (std::size_t j : {a, b, c}) prod *= (x[j - 1] == '1' ? q(1, 2) : q(-1, 2));
        s += p * prod;
    }
    return s;
}

// ---- random SB_d pmfs ----

/**
 * A random element of SB_d: lambda * type0(p) + (1 - lambda) * k with p a
 * random integer combination of a basis of the polynomials vanishing on the
 * ideal points and k a random kernel mixture. One draw in four is purely
 * palindromic.
 */
inline Pmf random_sb_pmf(std::size_t d, symbern::Stream& rng) {
    using namespace symbern;
    if (d == 1) return Pmf::validate({q(1, 2), q(1, 2)}, 1);
    static std::map<std::size_t, std::vector<RationalVector>> ideal_bases;
    auto it = ideal_bases.find(d);
    if (it == ideal_bases.end()) {
        const auto points = ideal_points(d);
        const std::size_t n = hypercube_size(d - 1);
        RationalMatrix eval_matrix(points.size(), n);
        for (std::size_t r = 0; r < points.size(); ++r) {
            for (std::uint32_t i = 0; i < n; ++i) {
                Rational m = 1;
                for (std::size_t h = 0; h + 1 < d; ++h) {
                    if (bit(i, h)) m *= points[r][h];
                }
                eval_matrix(r, i) = m;
            }
        }
        it = ideal_bases.emplace(d, nullspace_basis(eval_matrix)).first;
    }
    const auto& basis = it->second;
    const auto kernels = kernel_basis(d);

    std::vector<Rational> mix(hypercube_size(d));
    Rational total_w = 0;
    const std::size_t picks = 1 + rng.below(4);
    std::vector<Rational> kern(hypercube_size(d));
    for (std::size_t t = 0; t < picks; ++t) {
        const Rational w(static_cast<long>(1 + rng.below(5)));
        const auto& k = kernels[rng.below(kernels.size())];
        for (std::size_t x = 0; x < kern.size(); ++x) kern[x] += w * k.values()[x];
        total_w += w;
    }
    for (auto& v : kern) v /= total_w;

    std::vector<Rational> coeffs(hypercube_size(d - 1));
    if (rng.below(4) != 0 && !basis.empty()) {
        const std::size_t terms = 1 + rng.below(std::min<std::size_t>(basis.size(), 4));
        for (std::size_t t = 0; t < terms; ++t) {
            const Rational c(static_cast<long>(rng.uniform_int(-3, 3)));
            const auto& b = basis[rng.below(basis.size())];
            for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += c * b[i];
        }
    }
    const PolyRep p(d, coeffs);
    if (p.is_zero()) return Pmf::validate(kern, d);
    const Rational lambda = q(static_cast<long>(1 + rng.below(10)), 10);
    const Pmf t = type0(p).pmf;
    for (std::size_t x = 0; x < mix.size(); ++x) mix[x] = lambda * t.values()[x] + (1 - lambda) * kern[x];
    return Pmf::validate(mix, d);
}

}  // namespace fixtures
