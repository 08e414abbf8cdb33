#include "symbern/copulas.hpp"

#include "symbern/error.hpp"
#include "symbern/rng.hpp"

#include <algorithm>
#include <cmath>

namespace symbern {

namespace {

void check_unit_cube(std::span<const double> u, std::size_t d) {
    if (u.size() != d) throw Error(ErrorCode::DimensionMismatch, "point has wrong dimension");
    for (double x : u) {
        if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorCode::InputOutOfRange, "copula argument outside [0,1]");
    }
}

/// The key i with s_i in {x, 1_d - x}: drop the last coordinate after
/// flipping x if its last coordinate is 1.
BitVector extremal_key(const BitVector& x) {
    const BitVector& base = x.bits().back() ? x.complement() : x;
    auto bits = base.bits();
    bits.pop_back();
    return BitVector(std::move(bits));
}

}  // namespace

EmCopula EmCopula::extremal(const BitVector& x) {
    if (x.size() < 1) throw Error(ErrorCode::DimensionOutOfRange, "extremal copula needs d >= 1");
    EmCopula c;
    c.d = x.size();
    c.weights[extremal_key(x)] = 1;
    return c;
}

void EmCopula::check() const {
    Rational total = 0;
    for (const auto& [i, w] : weights) {
        if (i.size() + 1 != d) throw Error(ErrorCode::DimensionMismatch, "EM weight key has wrong length");
        if (sgn(w) < 0) throw Error(ErrorCode::InputOutOfRange, "negative EM weight");
        total += w;
    }
    if (total != 1) throw Error(ErrorCode::NotAPmf, "EM weights sum to " + format_rational(total));
}

EmCopula em_from_law(const AtomicLaw& law) {
    EmCopula c;
    c.d = law.d;
    for (std::size_t a = 0; a < law.points.size(); ++a) {
        if (sgn(law.probs[a]) == 0) continue;
        c.weights[extremal_key(law.points[a])] += law.probs[a];
    }
    return c;
}

EmCopula em_from_pmf(const Pmf& f) { return em_from_law(AtomicLaw::from_pmf(f)); }

double em_cdf(const EmCopula& c, std::span<const double> u) {
    check_unit_cube(u, c.d);
    double total = 0.0;
    for (const auto& [i, w] : c.weights) {
        double min_in = 1.0;
        double min_out = u[c.d - 1];
        for (std::size_t j = 0; j + 1 < c.d; ++j) {
            if (i[j]) {
                min_in = std::min(min_in, u[j]);
            } else {
                min_out = std::min(min_out, u[j]);
            }
        }
        total += to_double(w) * std::max(0.0, min_in + min_out - 1.0);
    }
    return total;
}

std::vector<double> cumulative_probs(const AtomicLaw& law) {
    std::vector<double> cum(law.probs.size());
    Rational acc = 0;
    for (std::size_t a = 0; a < law.probs.size(); ++a) {
        acc += law.probs[a];
        cum[a] = to_double(acc);
    }
    if (!cum.empty()) cum.back() = 1.0;
    return cum;
}

std::size_t draw_atom(const std::vector<double>& cumulative, double u) {
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    return static_cast<std::size_t>(it - cumulative.begin());
}

std::vector<Sample> em_sample(const AtomicLaw& law, std::size_t n, std::uint64_t seed) {
    law.check();
    const auto cum = cumulative_probs(law);
    std::vector<Sample> out(n, Sample(law.d));
    for (std::size_t i = 0; i < n; ++i) {
        Stream s(seed, i);
        const BitVector& x = law.points[draw_atom(cum, s.uniform01())];
        const double u = s.uniform01();
        for (std::size_t j = 0; j < law.d; ++j) out[i][j] = x[j] ? u : 1.0 - u;
    }
    return out;
}

std::vector<Sample> em_sample(const Pmf& f, std::size_t n, std::uint64_t seed) {
    return em_sample(AtomicLaw::from_pmf(f), n, seed);
}

void walsh_hadamard(std::vector<Rational>& values) {
    const std::size_t n = values.size();
    for (std::size_t len = 1; len < n; len <<= 1) {
        for (std::size_t start = 0; start < n; start += 2 * len) {
            for (std::size_t k = start; k < start + len; ++k) {
                Rational a = values[k];
                Rational b = values[k + len];
                values[k] = a + b;
                values[k + len] = a - b;
            }
        }
    }
}

FgmCopula::FgmCopula(std::size_t d, std::map<std::uint32_t, Rational> thetas) : d_(d), thetas_(std::move(thetas)) {
    require_dimension(d, 1, kMaxDimension);
    for (const auto& [subset, theta] : thetas_) {
        if (subset >= hypercube_size(d) || popcount(subset) < 2) {
            throw Error(ErrorCode::IndexOutOfRange, "FGM parameter subsets must have size >= 2 within 1..d");
        }
    }
}

Rational FgmCopula::theta(std::uint32_t subset) const {
    if (subset >= hypercube_size(d_)) throw Error(ErrorCode::IndexOutOfRange, "subset outside 1..d");
    if (popcount(subset) < 2) return popcount(subset) == 0 ? Rational(1) : Rational(0);
    if (source_) return fgm_theta(*source_, subset);
    auto it = thetas_.find(subset);
    return it == thetas_.end() ? Rational(0) : it->second;
}

std::vector<Rational> FgmCopula::dense() const {
    if (source_) {
        std::vector<Rational> v = source_->values();
        walsh_hadamard(v);
        return v;
    }
    std::vector<Rational> v(hypercube_size(d_));
    v[0] = 1;
    for (const auto& [subset, theta] : thetas_) v[subset] = theta;
    return v;
}

bool FgmCopula::operator==(const FgmCopula& other) const { return d_ == other.d_ && dense() == other.dense(); }

Rational fgm_theta(const Pmf& f, std::uint32_t subset) {
    if (subset >= f.size()) throw Error(ErrorCode::IndexOutOfRange, "subset outside 1..d");
    Rational acc = 0;
    for (std::uint32_t j = 0; j < f.size(); ++j) {
        if (sgn(f[j]) == 0) continue;
        if (popcount(j & subset) % 2 == 0) {
            acc += f[j];
        } else {
            acc -= f[j];
        }
    }
    return acc;
}

FgmCopula fgm_from_pmf(const Pmf& f) {
    FgmCopula c;
    c.d_ = f.d();
    if (f.d() > kEagerFgmDimension) {
        c.source_ = std::make_shared<const Pmf>(f);
        return c;
    }
    std::vector<Rational> v = f.values();
    walsh_hadamard(v);
    for (std::uint32_t subset = 0; subset < v.size(); ++subset) {
        if (popcount(subset) >= 2 && sgn(v[subset]) != 0) c.thetas_.emplace(subset, v[subset]);
    }
    return c;
}

bool fgm_admissible(const FgmCopula& c) {
    std::vector<Rational> v = c.dense();
    for (std::uint32_t subset = 0; subset < v.size(); ++subset) {
        if (popcount(subset) == 1) v[subset] = 0;
    }
    v[0] = 1;
    walsh_hadamard(v);
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) >= 0; });
}

double fgm_cdf(const FgmCopula& c, std::span<const double> u) {
    check_unit_cube(u, c.d());
    double prod = 1.0;
    for (double x : u) prod *= x;
    if (prod == 0.0) return 0.0;
    double series = 1.0;
    if (c.is_lazy()) {
        const auto dense = c.dense();
        for (std::uint32_t subset = 0; subset < dense.size(); ++subset) {
            if (popcount(subset) < 2 || sgn(dense[subset]) == 0) continue;
            double term = to_double(dense[subset]);
            for (std::size_t j = 0; j < c.d(); ++j) {
                if (bit(subset, j)) term *= 1.0 - u[j];
            }
            series += term;
        }
    } else {
        for (const auto& [subset, theta] : c.stored()) {
            double term = to_double(theta);
            for (std::size_t j = 0; j < c.d(); ++j) {
                if (bit(subset, j)) term *= 1.0 - u[j];
            }
            series += term;
        }
    }
    return prod * series;
}

double fgm_cdf_from_pmf(const Pmf& f, std::span<const double> u) {
    check_unit_cube(u, f.d());
    double total = 0.0;
    for (auto j : f.support()) {
        double term = to_double(f[j]);
        for (std::size_t h = 0; h < f.d(); ++h) {
            term *= u[h] * (1.0 + (bit(j, h) ? -1.0 : 1.0) * (1.0 - u[h]));
        }
        total += term;
    }
    return total;
}

std::vector<Sample> fgm_sample(const AtomicLaw& law, std::size_t n, std::uint64_t seed) {
    law.check();
    const auto cum = cumulative_probs(law);
    std::vector<Sample> out(n, Sample(law.d));
    for (std::size_t i = 0; i < n; ++i) {
        Stream s(seed, i);
        const BitVector& x = law.points[draw_atom(cum, s.uniform01())];
        for (std::size_t j = 0; j < law.d; ++j) {
            const double z0 = s.exponential(0.5);
            const double z1 = s.exponential(1.0);
            out[i][j] = -std::expm1(-(z0 + (x[j] ? z1 : 0.0)));
        }
    }
    return out;
}

std::vector<Sample> fgm_sample(const Pmf& f, std::size_t n, std::uint64_t seed) {
    return fgm_sample(AtomicLaw::from_pmf(f), n, seed);
}

}  // namespace symbern
