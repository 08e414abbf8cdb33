#include "symbern/dependence.hpp"

#include "symbern/error.hpp"
#include "symbern/rng.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace symbern {

namespace {

void require_index(std::size_t j, std::size_t d) {
    if (j < 1 || j > d) {
        throw Error(ErrorCode::IndexOutOfRange, "coordinate " + std::to_string(j) + " outside 1.." + std::to_string(d));
    }
}

void require_distinct(std::span<const std::size_t> js, std::size_t d) {
    for (std::size_t a = 0; a < js.size(); ++a) {
        require_index(js[a], d);
        for (std::size_t b = a + 1; b < js.size(); ++b) {
            if (js[a] == js[b]) throw Error(ErrorCode::IndexOutOfRange, "coordinates must be distinct");
        }
    }
}

Estimate mean_and_error(const std::vector<double>& xs) {
    Estimate e;
    if (xs.empty()) return e;
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    e.value = mean;
    if (xs.size() > 1) e.std_error = std::sqrt(ss / static_cast<double>(xs.size() - 1) / static_cast<double>(xs.size()));
    return e;
}

}  // namespace

PairMeasure bernoulli_pair_measures(const Pmf& f, std::size_t j1, std::size_t j2) {
    const std::size_t pair[] = {j1, j2};
    require_distinct(pair, f.d());
    Rational table[2][2];
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        if (sgn(f[x]) == 0) continue;
        table[bit(x, j1 - 1)][bit(x, j2 - 1)] += f[x];
    }
    PairMeasure m;
    m.j1 = j1;
    m.j2 = j2;
    m.rho_p = 4 * table[1][1] - 1;
    Rational tau = 0;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            for (int a2 = 0; a2 < 2; ++a2) {
                for (int b2 = 0; b2 < 2; ++b2) {
                    const int s = (a - a2) * (b - b2);
                    const Rational w = table[a][b] * table[a2][b2];
                    if (s >= 0) tau += w;
                    if (s <= 0) tau -= w;
                }
            }
        }
    }
    m.tau_k = tau;
    return m;
}

MeanMeasures mean_measures(const Pmf& f) {
    MeanMeasures out;
    const std::size_t d = f.d();
    if (d < 2) return out;
    Rational rho = 0;
    Rational tau = 0;
    for (std::size_t a = 1; a <= d; ++a) {
        for (std::size_t b = a + 1; b <= d; ++b) {
            auto m = bernoulli_pair_measures(f, a, b);
            rho += m.rho_p;
            tau += m.tau_k;
        }
    }
    const Rational pairs = make_rational(static_cast<long>(d * (d - 1) / 2), 1);
    out.rho_x = rho / pairs;
    out.tau_x = tau / pairs;
    out.rho_v = out.rho_x;
    out.tau_v = out.tau_x;
    out.rho_u = out.rho_x / 3;
    out.tau_u = 2 * out.rho_x / 9;
    return out;
}

Rational minimal_mean_correlation(std::size_t d) {
    if (d < 2) throw Error(ErrorCode::DimensionOutOfRange, "mean correlation needs d >= 2");
    const long denom = static_cast<long>(d % 2 == 0 ? d - 1 : d);
    return make_rational(-1, denom);
}

Rational phi(std::size_t y, std::size_t d) {
    if (d < 2) throw Error(ErrorCode::DimensionOutOfRange, "phi needs d >= 2");
    const long pairs_y = static_cast<long>(y * (y == 0 ? 0 : y - 1) / 2);
    return make_rational(8 * pairs_y, static_cast<long>(d * (d - 1))) - 1;
}

Rational phi_piecewise_zero(std::size_t y, std::size_t d) { return y >= 2 ? phi(y, d) : Rational(0); }

Rational phi_expectation(const Pmf& f) {
    const auto s = sum_distribution(f);
    Rational acc = 0;
    for (std::size_t k = 0; k <= f.d(); ++k) acc += s.probs[k] * phi(k, f.d());
    return acc;
}

Rational phi_expectation_piecewise_zero(const Pmf& f) {
    const auto s = sum_distribution(f);
    Rational acc = 0;
    for (std::size_t k = 0; k <= f.d(); ++k) acc += s.probs[k] * phi_piecewise_zero(k, f.d());
    return acc;
}

PairCounts pair_counts(const BitVector& x) {
    const std::size_t d = x.size();
    const std::size_t s = x.sum();
    if (d < 2 || (s != lower_half(d) && s != upper_half(d))) {
        throw Error(ErrorCode::NotKernelStar, "support point " + x.to_string() + " is not in X_d^*");
    }
    PairCounts c;
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a + 1; b < d; ++b) {
            if (x[a] == x[b]) {
                ++c.n_plus;
            } else {
                ++c.n_minus;
            }
        }
    }
    return c;
}

PairCounts pair_counts(const Pmf& f) {
    const auto supp = f.support();
    if (supp.size() != 2 || supp[1] != complement_index(supp[0], f.d())) {
        throw Error(ErrorCode::NotKernelStar, "pmf is not a two-point kernel element");
    }
    return pair_counts(BitVector::from_index(supp[0], f.d()));
}

PairCounts pair_counts_closed_form(std::size_t d) {
    if (d < 2) throw Error(ErrorCode::DimensionOutOfRange, "pair counts need d >= 2");
    PairCounts c;
    c.n_plus = d % 2 == 0 ? d * (d - 2) / 4 : (d - 1) * (d - 1) / 4;
    c.n_minus = d * (d - 1) / 2 - c.n_plus;
    return c;
}

Rational cross_moment3(const Pmf& f, std::size_t j1, std::size_t j2, std::size_t j3) {
    const std::size_t triple[] = {j1, j2, j3};
    require_distinct(triple, f.d());
    const std::uint32_t subset = (1u << (j1 - 1)) | (1u << (j2 - 1)) | (1u << (j3 - 1));
    // 8 E[prod (X - 1/2)] = -E[prod (1 - 2X)] = -theta_S.
    return -fgm_theta(f, subset);
}

Rational cross_moment3_em(const Pmf& f, std::size_t j1, std::size_t j2, std::size_t j3) {
    const std::size_t triple[] = {j1, j2, j3};
    require_distinct(triple, f.d());
    return 0;
}

double cross_moment3_fgm(const Pmf& f, std::size_t j1, std::size_t j2, std::size_t j3) {
    return kFgmCrossMomentFactor * to_double(cross_moment3(f, j1, j2, j3));
}

bool ctm_pair_exact(const std::vector<std::pair<Rational, Rational>>& atoms) {
    for (std::size_t a = 0; a < atoms.size(); ++a) {
        for (std::size_t b = a + 1; b < atoms.size(); ++b) {
            const Rational prod = (atoms[a].first - atoms[b].first) * (atoms[a].second - atoms[b].second);
            if (sgn(prod) > 0) return false;
        }
    }
    return true;
}

bool sigma_ctm_exact(const Pmf& f) {
    const std::size_t d = f.d();
    if (d > kMaxSigmaCtmDimension) {
        throw Error(ErrorCode::DimensionTooLarge, "exact Σ-countermonotonicity check limited to d <= 12");
    }
    const auto supp = f.support();
    const std::uint32_t full = hypercube_size(d) - 1;
    // (A, B) and (B, A) are equivalent, so subsets containing coordinate d are skipped.
    for (std::uint32_t subset = 0; subset < hypercube_size(d - 1); ++subset) {
        std::set<std::pair<std::size_t, std::size_t>> points;
        for (auto x : supp) points.emplace(popcount(x & subset), popcount(x & (full ^ subset)));
        std::vector<std::pair<Rational, Rational>> atoms;
        atoms.reserve(points.size());
        for (const auto& [a, b] : points) {
            atoms.emplace_back(Rational(static_cast<unsigned long>(a)), Rational(static_cast<unsigned long>(b)));
        }
        if (!ctm_pair_exact(atoms)) return false;
    }
    return true;
}

const char* to_string(CtmCheck::Kind kind) {
    switch (kind) {
        case CtmCheck::Kind::ExactTrue: return "ExactTrue";
        case CtmCheck::Kind::McPass: return "McPass";
        case CtmCheck::Kind::McFail: return "McFail";
    }
    return "McFail";
}

namespace {

/// Given X = x, (A, B) = (a0 + alpha U, b0 + beta U) with integer coefficients.
struct AffineSplit {
    long a0, alpha, b0, beta;
};

AffineSplit split_of(const BitVector& x, const std::vector<std::uint8_t>& in_subset) {
    long size_in = 0, ones_in = 0, size_out = 0, ones_out = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (in_subset[j]) {
            ++size_in;
            ones_in += x[j];
        } else {
            ++size_out;
            ones_out += x[j];
        }
    }
    // sum_J V_j = U * ones + (1 - U) * zeros.
    return {size_in - ones_in, 2 * ones_in - size_in, size_out - ones_out, 2 * ones_out - size_out};
}

CtmWitness make_witness(const BitVector& x1, const Rational& u1, const AffineSplit& s1, const BitVector& x2,
                        const Rational& u2, const AffineSplit& s2) {
    CtmWitness w{x1, x2, u1, u2, {}, {}, {}, {}, {}};
    w.a1 = s1.a0 + s1.alpha * u1;
    w.b1 = s1.b0 + s1.beta * u1;
    w.a2 = s2.a0 + s2.alpha * u2;
    w.b2 = s2.b0 + s2.beta * u2;
    w.product = (w.a1 - w.a2) * (w.b1 - w.b2);
    return w;
}

}  // namespace

CtmCheck em_sigma_ctm_check(const AtomicLaw& law, std::span<const std::size_t> subset, std::size_t n,
                            std::uint64_t seed) {
    law.check();
    std::vector<std::uint8_t> in_subset(law.d, 0);
    for (auto j : subset) {
        require_index(j, law.d);
        in_subset[j - 1] = 1;
    }

    // Positive-mass atoms only.
    std::vector<BitVector> pts;
    std::vector<Rational> probs;
    for (std::size_t a = 0; a < law.points.size(); ++a) {
        if (sgn(law.probs[a]) > 0) {
            pts.push_back(law.points[a]);
            probs.push_back(law.probs[a]);
        }
    }

    CtmCheck out;
    if (pts.size() == 2 && pts[1] == pts[0].complement()) {
        const AffineSplit s = split_of(pts[0], in_subset);
        if (s.alpha * s.beta <= 0) {
            out.kind = CtmCheck::Kind::ExactTrue;
            out.p_hat = 1.0;
            return out;
        }
        // Concordant almost surely: any two distinct uniforms on the same atom witness it.
        out.kind = CtmCheck::Kind::McFail;
        out.p_hat = 0.0;
        out.witness = make_witness(pts[0], Rational(3, 4), s, pts[0], Rational(1, 4), s);
        return out;
    }

    AtomicLaw positive{law.d, pts, probs};
    const auto cum = cumulative_probs(positive);
    std::vector<AffineSplit> splits;
    splits.reserve(pts.size());
    for (const auto& p : pts) splits.push_back(split_of(p, in_subset));

    std::size_t violations = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Stream s(seed, i);
        const std::size_t k1 = draw_atom(cum, s.uniform01());
        const Rational u1(s.uniform01());
        const std::size_t k2 = draw_atom(cum, s.uniform01());
        const Rational u2(s.uniform01());
        const auto& p = splits[k1];
        const auto& q = splits[k2];
        const Rational da = (p.a0 - q.a0) + p.alpha * u1 - q.alpha * u2;
        const Rational db = (p.b0 - q.b0) + p.beta * u1 - q.beta * u2;
        if (sgn(da) * sgn(db) > 0) {
            ++violations;
            if (!out.witness) out.witness = make_witness(pts[k1], u1, p, pts[k2], u2, q);
        }
    }
    out.pairs = n;
    out.p_hat = n ? 1.0 - static_cast<double>(violations) / static_cast<double>(n) : 1.0;
    out.kind = violations == 0 ? CtmCheck::Kind::McPass : CtmCheck::Kind::McFail;
    return out;
}

Estimate sample_pearson_uniform(std::span<const Sample> samples, std::size_t j1, std::size_t j2) {
    std::vector<double> xs;
    xs.reserve(samples.size());
    for (const auto& s : samples) xs.push_back(12.0 * (s.at(j1 - 1) - 0.5) * (s.at(j2 - 1) - 0.5));
    return mean_and_error(xs);
}

Estimate sample_kendall(std::span<const Sample> samples, std::size_t j1, std::size_t j2) {
    std::vector<double> xs;
    xs.reserve(samples.size() / 2);
    for (std::size_t i = 0; i + 1 < samples.size(); i += 2) {
        const double prod = (samples[i].at(j1 - 1) - samples[i + 1].at(j1 - 1)) *
                            (samples[i].at(j2 - 1) - samples[i + 1].at(j2 - 1));
        xs.push_back(prod > 0 ? 1.0 : (prod < 0 ? -1.0 : 0.0));
    }
    return mean_and_error(xs);
}

Estimate sample_cross_moment3_uniform(std::span<const Sample> samples, std::size_t j1, std::size_t j2,
                                      std::size_t j3) {
    const double scale = std::pow(12.0, 1.5);
    std::vector<double> xs;
    xs.reserve(samples.size());
    for (const auto& s : samples) {
        xs.push_back(scale * (s.at(j1 - 1) - 0.5) * (s.at(j2 - 1) - 0.5) * (s.at(j3 - 1) - 0.5));
    }
    return mean_and_error(xs);
}

std::vector<double> sample_stop_loss(std::span<const Sample> samples, std::span<const double> thresholds) {
    std::vector<double> out(thresholds.size(), 0.0);
    if (samples.empty()) return out;
    for (const auto& s : samples) {
        double total = 0.0;
        for (double x : s) total += x;
        for (std::size_t k = 0; k < thresholds.size(); ++k) out[k] += std::max(0.0, total - thresholds[k]);
    }
    for (auto& v : out) v /= static_cast<double>(samples.size());
    return out;
}

}  // namespace symbern
