#include "symbern/polyrep.hpp"

#include "symbern/error.hpp"

namespace symbern {

PolyRep::PolyRep(std::size_t d, std::vector<Rational> coeffs) : d_(d), coeffs_(std::move(coeffs)) {
    require_dimension(d, 1, kMaxDimension);
    if (coeffs_.size() != hypercube_size(d - 1)) {
        throw Error(ErrorCode::DimensionMismatch, "polynomial needs 2^(d-1) coefficients");
    }
}

const Rational& PolyRep::coeff(const BitVector& exponents) const {
    if (exponents.size() != num_vars()) throw Error(ErrorCode::DimensionMismatch, "exponent vector length");
    return coeffs_[exponents.index()];
}

bool PolyRep::is_zero() const { return symbern::is_zero(coeffs_); }

PolyRep PolyRep::combine(const Rational& alpha, const PolyRep& other, const Rational& beta) const {
    if (other.d_ != d_) throw Error(ErrorCode::DimensionMismatch, "polynomials of different dimension");
    std::vector<Rational> out(coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = alpha * coeffs_[i] + beta * other.coeffs_[i];
    return PolyRep(d_, std::move(out));
}

Rational PolyRep::l1_norm() const {
    Rational n = 0;
    for (const auto& a : coeffs_) n += abs(a);
    return n;
}

RationalMatrix q_matrix(std::size_t d) {
    require_dimension(d, 1, kMaxDimension);
    const std::uint32_t half = hypercube_size(d - 1);
    RationalMatrix q(half, 2 * half);
    for (std::uint32_t i = 0; i < half; ++i) {
        q(i, i) = 1;
        q(i, 2 * half - 1 - i) = -1;
    }
    return q;
}

PolyRep to_poly(const Pmf& f) {
    const std::uint32_t half = hypercube_size(f.d() - 1);
    std::vector<Rational> a(half);
    // s_i has index i (trailing 0 is the top bit); 1_d - s_i has index 2^d - 1 - i.
    for (std::uint32_t i = 0; i < half; ++i) a[i] = f[i] - f[complement_index(i, f.d())];
    return PolyRep(f.d(), std::move(a));
}

Rational eval(const PolyRep& p, std::span<const Rational> z) {
    if (z.size() != p.num_vars()) throw Error(ErrorCode::DimensionMismatch, "evaluation point length");
    Rational acc = 0;
    for (std::uint32_t i = 0; i < p.coeffs().size(); ++i) {
        if (sgn(p.coeffs()[i]) == 0) continue;
        Rational term = p.coeffs()[i];
        for (std::size_t j = 0; j < z.size() && sgn(term) != 0; ++j) {
            if (bit(i, j)) term *= z[j];
        }
        acc += term;
    }
    return acc;
}

std::vector<std::vector<Rational>> ideal_points(std::size_t d) {
    const std::size_t n = d - 1;
    std::vector<std::vector<Rational>> pts;
    pts.emplace_back(n, Rational(1));
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> q(n, Rational(1));
        q[j] = -1;
        pts.push_back(std::move(q));
    }
    return pts;
}

bool in_ideal(const PolyRep& p) {
    for (const auto& q : ideal_points(p.d())) {
        if (sgn(eval(p, q)) != 0) return false;
    }
    return true;
}

std::optional<Rational> equivalent(const PolyRep& p, const PolyRep& q) {
    if (p.d() != q.d()) throw Error(ErrorCode::DimensionMismatch, "polynomials of different dimension");
    if (p.is_zero() || q.is_zero()) {
        if (p.is_zero() && q.is_zero()) return Rational(1);
        return std::nullopt;
    }
    std::optional<Rational> mu;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const auto& a = p.coeffs()[i];
        const auto& b = q.coeffs()[i];
        if (sgn(b) == 0) {
            if (sgn(a) != 0) return std::nullopt;
            continue;
        }
        Rational ratio = a / b;
        if (!mu) {
            mu = ratio;
        } else if (*mu != ratio) {
            return std::nullopt;
        }
    }
    if (!mu || sgn(*mu) <= 0) return std::nullopt;
    return mu;
}

Type0 type0(const PolyRep& p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "type-0 pmf requires a non-null polynomial");
    if (!in_ideal(p)) throw Error(ErrorCode::NotInIdeal, "polynomial does not vanish on the ideal points");
    const std::size_t d = p.d();
    std::vector<Rational> values(hypercube_size(d));
    for (std::uint32_t i = 0; i < p.coeffs().size(); ++i) {
        const auto& a = p.coeffs()[i];
        if (sgn(a) >= 0) {
            values[i] = a;
        } else {
            values[complement_index(i, d)] = -a;
        }
    }
    Rational mass = p.l1_norm();
    for (auto& v : values) v /= mass;
    return {Pmf::validate(std::move(values), d), mass};
}

Pmf counter_image_member(const PolyRep& p, const Rational& lambda, const Pmf& kernel) {
    if (sgn(lambda) <= 0 || lambda > 1) {
        throw Error(ErrorCode::InvalidLambda, "lambda must lie in (0, 1], got " + format_rational(lambda));
    }
    if (kernel.d() != p.d()) throw Error(ErrorCode::DimensionMismatch, "kernel pmf dimension");
    if (!is_palindromic(kernel)) throw Error(ErrorCode::KernelNotPalindromic, "kernel component is not palindromic");
    const Pmf base = type0(p).pmf;
    std::vector<Rational> values(base.size());
    const Rational rest = 1 - lambda;
    for (std::uint32_t j = 0; j < base.size(); ++j) values[j] = lambda * base[j] + rest * kernel[j];
    return Pmf::validate(std::move(values), p.d());
}

Decomposition decompose(const Pmf& f) {
    const PolyRep p = to_poly(f);
    Type0 t = type0(p);
    Decomposition out{t.mass, t.pmf, std::nullopt};
    if (t.mass == 1) return out;
    std::vector<Rational> k(f.size());
    const Rational rest = 1 - t.mass;
    for (std::uint32_t j = 0; j < f.size(); ++j) k[j] = (f[j] - t.mass * t.pmf[j]) / rest;
    out.kernel = Pmf::validate(std::move(k), f.d());
    return out;
}

}  // namespace symbern
