#include "symbern/pmf.hpp"

#include "symbern/error.hpp"

#include <algorithm>

namespace symbern {

namespace {

void check_values(const std::vector<Rational>& values, std::size_t d) {
    Rational total = 0;
    for (std::size_t j = 0; j < values.size(); ++j) {
        if (sgn(values[j]) < 0) {
            throw Error(ErrorCode::NotAPmf, "negative mass at " +
                                                BitVector::from_index(static_cast<std::uint32_t>(j), d).to_string());
        }
        total += values[j];
    }
    if (total != 1) throw Error(ErrorCode::NotAPmf, "masses sum to " + format_rational(total) + ", not 1");

    for (std::size_t h = 0; h < d; ++h) {
        Rational mean = 0;
        for (std::uint32_t j = 0; j < values.size(); ++j) {
            if (bit(j, h)) mean += values[j];
        }
        if (mean * 2 != 1) {
            throw Error(ErrorCode::NotSymmetricMarginals,
                        "marginal " + std::to_string(h + 1) + " has mean " + format_rational(mean));
        }
    }
}

}  // namespace

Pmf Pmf::validate(std::vector<Rational> values, std::size_t d) {
    require_dimension(d, 1, kMaxDimension);
    if (values.size() != hypercube_size(d)) {
        throw Error(ErrorCode::NotAPmf, "expected " + std::to_string(hypercube_size(d)) + " values, got " +
                                            std::to_string(values.size()));
    }
    check_values(values, d);
    return Pmf(d, std::move(values));
}

Pmf Pmf::from_atoms(std::size_t d, const std::map<BitVector, Rational>& atoms) {
    require_dimension(d, 1, kMaxDimension);
    std::vector<Rational> values(hypercube_size(d));
    for (const auto& [x, p] : atoms) {
        if (x.size() != d) throw Error(ErrorCode::DimensionMismatch, "atom " + x.to_string() + " has wrong length");
        values[x.index()] += p;
    }
    return validate(std::move(values), d);
}

const Rational& Pmf::at(const BitVector& x) const {
    if (x.size() != d_) throw Error(ErrorCode::DimensionMismatch, "point dimension mismatch");
    return values_[x.index()];
}

std::vector<std::uint32_t> Pmf::support() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t j = 0; j < values_.size(); ++j) {
        if (sgn(values_[j]) > 0) out.push_back(j);
    }
    return out;
}

AtomicLaw AtomicLaw::from_pmf(const Pmf& f) {
    AtomicLaw law;
    law.d = f.d();
    for (auto j : f.support()) {
        law.points.push_back(BitVector::from_index(j, f.d()));
        law.probs.push_back(f[j]);
    }
    return law;
}

void AtomicLaw::check() const {
    if (points.size() != probs.size()) throw Error(ErrorCode::NotAPmf, "points/probabilities length mismatch");
    Rational total = 0;
    std::vector<Rational> means(d);
    for (std::size_t a = 0; a < points.size(); ++a) {
        if (points[a].size() != d) throw Error(ErrorCode::DimensionMismatch, "atom has wrong length");
        if (sgn(probs[a]) < 0) throw Error(ErrorCode::NotAPmf, "negative mass at " + points[a].to_string());
        total += probs[a];
        for (std::size_t h = 0; h < d; ++h) {
            if (points[a][h]) means[h] += probs[a];
        }
    }
    if (total != 1) throw Error(ErrorCode::NotAPmf, "masses sum to " + format_rational(total) + ", not 1");
    for (std::size_t h = 0; h < d; ++h) {
        if (means[h] * 2 != 1) {
            throw Error(ErrorCode::NotSymmetricMarginals,
                        "marginal " + std::to_string(h + 1) + " has mean " + format_rational(means[h]));
        }
    }
}

Rational SumDistribution::mean() const {
    Rational m = 0;
    for (std::size_t k = 0; k < probs.size(); ++k) m += probs[k] * static_cast<unsigned long>(k);
    return m;
}

Rational SumDistribution::variance() const {
    Rational second = 0;
    for (std::size_t k = 0; k < probs.size(); ++k) second += probs[k] * static_cast<unsigned long>(k * k);
    Rational m = mean();
    return second - m * m;
}

const char* to_string(CxOrder order) {
    switch (order) {
        case CxOrder::Smaller: return "Smaller";
        case CxOrder::Larger: return "Larger";
        case CxOrder::Equal: return "Equal";
        case CxOrder::Incomparable: return "Incomparable";
    }
    return "Incomparable";
}

RationalMatrix marginal_matrix(std::size_t d) {
    require_dimension(d, 1, kMaxDimension);
    RationalMatrix h(d, hypercube_size(d));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::uint32_t j = 0; j < hypercube_size(d); ++j) h(r, j) = bit(j, r) ? -1 : 1;
    }
    return h;
}

Pmf independence(std::size_t d) {
    require_dimension(d, 1, kMaxDimension);
    return Pmf::validate(std::vector<Rational>(hypercube_size(d), Rational(1, hypercube_size(d))), d);
}

Pmf upper_frechet(std::size_t d) { return two_point(BitVector::zeros(d)); }

Pmf two_point(const BitVector& x) {
    const std::size_t d = x.size();
    require_dimension(d, 1, kMaxDimension);
    std::vector<Rational> values(hypercube_size(d));
    values[x.index()] += Rational(1, 2);
    values[complement_index(x.index(), d)] += Rational(1, 2);
    return Pmf::validate(std::move(values), d);
}

std::vector<Pmf> kernel_basis(std::size_t d) {
    require_dimension(d, 1, kMaxDimension);
    std::vector<Pmf> out;
    out.reserve(hypercube_size(d - 1));
    for (std::uint32_t i = 0; i < hypercube_size(d - 1); ++i) out.push_back(two_point(BitVector::from_index(i, d)));
    return out;
}

bool is_palindromic(const Pmf& f) {
    for (std::uint32_t j = 0; j < f.size(); ++j) {
        if (f[j] != f[complement_index(j, f.d())]) return false;
    }
    return true;
}

Pmf palindromize(const Pmf& f) {
    std::vector<Rational> values(f.size());
    for (std::uint32_t j = 0; j < f.size(); ++j) values[j] = (f[j] + f[complement_index(j, f.d())]) / 2;
    return Pmf::validate(std::move(values), f.d());
}

SumDistribution sum_distribution(const Pmf& f) {
    SumDistribution s{f.d(), std::vector<Rational>(f.d() + 1)};
    for (std::uint32_t j = 0; j < f.size(); ++j) {
        if (sgn(f[j]) != 0) s.probs[popcount(j)] += f[j];
    }
    return s;
}

SumDistribution sum_distribution(const AtomicLaw& law) {
    SumDistribution s{law.d, std::vector<Rational>(law.d + 1)};
    for (std::size_t a = 0; a < law.points.size(); ++a) s.probs[law.points[a].sum()] += law.probs[a];
    return s;
}

Rational stop_loss(const SumDistribution& s, std::size_t k) {
    if (k > s.d) throw Error(ErrorCode::InputOutOfRange, "stop-loss threshold above d");
    Rational acc = 0;
    for (std::size_t j = k + 1; j <= s.d; ++j) acc += s.probs[j] * static_cast<unsigned long>(j - k);
    return acc;
}

std::vector<Rational> stop_loss_vector(const SumDistribution& s) {
    std::vector<Rational> out(s.d + 1);
    for (std::size_t k = 0; k <= s.d; ++k) out[k] = stop_loss(s, k);
    return out;
}

CxOrder cx_compare(const SumDistribution& f, const SumDistribution& g) {
    if (f.d != g.d) throw Error(ErrorCode::DimensionMismatch, "cx_compare needs equal dimensions");
    bool some_less = false;
    bool some_greater = false;
    for (std::size_t k = 0; k <= f.d; ++k) {
        int c = cmp(stop_loss(f, k), stop_loss(g, k));
        some_less |= c < 0;
        some_greater |= c > 0;
    }
    if (some_less && some_greater) return CxOrder::Incomparable;
    if (some_less) return CxOrder::Smaller;
    if (some_greater) return CxOrder::Larger;
    return CxOrder::Equal;
}

CxOrder cx_compare(const Pmf& f, const Pmf& g) {
    if (f.d() != g.d()) throw Error(ErrorCode::DimensionMismatch, "cx_compare needs equal dimensions");
    return cx_compare(sum_distribution(f), sum_distribution(g));
}

bool is_sigma_cx_smallest(const Pmf& f) {
    const std::size_t lo = lower_half(f.d());
    const std::size_t hi = upper_half(f.d());
    for (auto j : f.support()) {
        auto c = popcount(j);
        if (c != lo && c != hi) return false;
    }
    return true;
}

bool is_joint_mix(const Pmf& f) {
    auto s = sum_distribution(f);
    return std::count_if(s.probs.begin(), s.probs.end(), [](const Rational& p) { return sgn(p) != 0; }) == 1;
}

bool is_vertex(const Pmf& f) {
    const auto supp = f.support();
    if (supp.size() > f.d() + 1) return false;
    RationalMatrix active(f.d() + 1, supp.size());
    for (std::size_t c = 0; c < supp.size(); ++c) {
        for (std::size_t h = 0; h < f.d(); ++h) active(h, c) = bit(supp[c], h) ? -1 : 1;
        active(f.d(), c) = 1;
    }
    return rank(active) == supp.size();
}

}  // namespace symbern
