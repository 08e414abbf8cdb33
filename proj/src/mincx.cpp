#include "symbern/mincx.hpp"

#include "symbern/error.hpp"
#include "symbern/rng.hpp"

namespace symbern {

MinCxSystem build_system(std::size_t d) {
    require_dimension(d, 3, kMaxDimension);
    MinCxSystem sys;
    sys.d = d;
    sys.star = star_sets(d);
    const auto& cols = sys.star.i_star;
    const std::size_t n = cols.size();
    const bool odd = d % 2 == 1;
    const std::size_t header = odd ? 2 : 1;
    sys.matrix = RationalMatrix(header + d - 1, n);
    for (std::size_t c = 0; c < n; ++c) {
        if (odd) {
            sys.matrix(0, c) = cols[c].sum() == sys.star.M ? 1 : 0;
            sys.matrix(1, c) = cols[c].sum() == sys.star.m ? 1 : 0;
        } else {
            sys.matrix(0, c) = 1;
        }
        for (std::size_t j = 0; j + 1 < d; ++j) sys.matrix(header + j, c) = cols[c][j];
    }
    sys.basis = nullspace_basis(sys.matrix);
    sys.nullity = sys.basis.size();
    sys.rank = n - sys.nullity;
    return sys;
}

bool satisfies_mincx_conditions(const PolyRep& p) {
    const std::size_t d = p.d();
    if (d < 2) return p.is_zero();
    const std::size_t lo = lower_half(d);
    const std::size_t hi = upper_half(d);
    const std::size_t n = p.num_vars();
    std::vector<Rational> by_order(n + 1);
    std::vector<Rational> by_var(n);
    for (std::uint32_t i = 0; i < p.coeffs().size(); ++i) {
        const auto& a = p.coeffs()[i];
        if (sgn(a) == 0) continue;
        const auto order = popcount(i);
        if (order != lo && order != hi) return false;
        by_order[order] += a;
        for (std::size_t j = 0; j < n; ++j) {
            if (bit(i, j)) by_var[j] += a;
        }
    }
    return is_zero(by_order) && is_zero(by_var);
}

PolyRep poly_from_star_coeffs(const MinCxSystem& sys, std::span<const Rational> star_coeffs) {
    if (star_coeffs.size() != sys.star.n_star) {
        throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(sys.star.n_star) + " coefficients");
    }
    std::vector<Rational> full(hypercube_size(sys.d - 1));
    for (std::size_t k = 0; k < star_coeffs.size(); ++k) full[sys.star.i_star[k].index()] = star_coeffs[k];
    return PolyRep(sys.d, std::move(full));
}

PolyRep mincx_poly(const MinCxSystem& sys, std::span<const Rational> combination) {
    if (combination.size() != sys.nullity) {
        throw Error(ErrorCode::DimensionMismatch,
                    "expected " + std::to_string(sys.nullity) + " combination weights, got " +
                        std::to_string(combination.size()));
    }
    std::vector<Rational> a(sys.star.n_star);
    for (std::size_t k = 0; k < combination.size(); ++k) {
        if (sgn(combination[k]) == 0) continue;
        for (std::size_t c = 0; c < a.size(); ++c) a[c] += combination[k] * sys.basis[k][c];
    }
    if (is_zero(a)) throw Error(ErrorCode::ZeroCombination, "combination of the nullspace basis is zero");
    PolyRep p = poly_from_star_coeffs(sys, a);
    if (!satisfies_mincx_conditions(p)) {
        throw Error(ErrorCode::NotInIdeal, "nullspace combination violates the coefficient conditions");
    }
    return p;
}

std::vector<Pmf> star_kernel_elements(std::size_t d) {
    const auto star = star_sets(d);
    std::vector<Pmf> out;
    out.reserve(star.n_star);
    for (const auto& i : star.i_star) out.push_back(two_point(i.append_zero()));
    return out;
}

Pmf generate_mincx(const MinCxSystem& sys, std::span<const Rational> combination, const Rational& lambda,
                   const std::vector<std::pair<std::size_t, Rational>>& kernel_weights) {
    if (sgn(lambda) < 0 || lambda > 1) {
        throw Error(ErrorCode::InvalidLambda, "lambda must lie in [0, 1], got " + format_rational(lambda));
    }
    const std::size_t size = hypercube_size(sys.d);
    std::vector<Rational> values(size);

    if (sgn(lambda) > 0) {
        const Pmf base = type0(mincx_poly(sys, combination)).pmf;
        for (std::uint32_t j = 0; j < size; ++j) values[j] = lambda * base[j];
    }
    if (lambda < 1) {
        Rational total = 0;
        const Rational rest = 1 - lambda;
        for (const auto& [k, w] : kernel_weights) {
            if (k >= sys.star.n_star) {
                throw Error(ErrorCode::KernelElementNotStar,
                            "kernel element " + std::to_string(k) + " is not a star kernel element");
            }
            if (sgn(w) < 0) throw Error(ErrorCode::InvalidLambda, "negative kernel mixture weight");
            total += w;
            const BitVector s = sys.star.i_star[k].append_zero();
            const Rational half = rest * w / 2;
            values[s.index()] += half;
            values[complement_index(s.index(), sys.d)] += half;
        }
        if (total != 1) {
            throw Error(ErrorCode::InvalidLambda, "kernel mixture weights sum to " + format_rational(total));
        }
    }
    return Pmf::validate(std::move(values), sys.d);
}

GeneratedMinCx generate_mincx_random(const MinCxSystem& sys, std::uint64_t seed) {
    Stream rng(seed, 0);
    auto coeff = [&] { return rng.uniform_int(-3, 3); };
    auto tenth = [&] { return rng.uniform_int(1, 10); };
    auto weight = [&] { return rng.uniform_int(0, 9); };

    std::vector<Rational> combination(sys.nullity);
    Rational lambda = 0;
    if (sys.nullity > 0) {
        do {
            for (auto& c : combination) c = static_cast<long>(coeff());
        } while (is_zero(combination));
        lambda = Rational(static_cast<long>(tenth()), 10);
        lambda.canonicalize();
    }

    std::vector<std::pair<std::size_t, Rational>> kernel;
    if (lambda < 1) {
        std::vector<int> raw(sys.star.n_star);
        int total = 0;
        while (total == 0) {
            total = 0;
            for (auto& w : raw) {
                w = static_cast<int>(weight());
                total += w;
            }
        }
        for (std::size_t k = 0; k < raw.size(); ++k) {
            if (raw[k] > 0) kernel.emplace_back(k, Rational(raw[k], total));
        }
        for (auto& [k, w] : kernel) w.canonicalize();
    }
    Pmf pmf = generate_mincx(sys, combination, lambda, kernel);
    return {std::move(combination), lambda, std::move(kernel), std::move(pmf)};
}

std::vector<RankRow> rank_property_check(std::size_t d_max) {
    require_dimension(d_max, 3, 12);
    std::vector<RankRow> rows;
    for (std::size_t d = 3; d <= d_max; d += 2) {
        RankRow row;
        row.d = d;
        row.rank_d = build_system(d).rank;
        row.rank_next = build_system(d + 1).rank;
        row.holds = row.rank_d == d && row.rank_next == d;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace symbern
