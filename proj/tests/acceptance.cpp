// Runs every acceptance criterion and prints one PASS/FAIL line for each.

#include "support.hpp"

#include "symbern/cli.hpp"
#include "symbern/copulas.hpp"
#include "symbern/dependence.hpp"
#include "symbern/error.hpp"
#include "symbern/io.hpp"
#include "symbern/mincx.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

using namespace symbern;
using namespace fixtures;
using io::Json;

namespace {

/// First failure message; empty while everything holds.
struct Verdict {
    std::string failure;
    void require(bool ok, const std::string& what) {
        if (!ok && failure.empty()) failure = what;
    }
};

const std::vector<std::string> kStarD5 = {"1100", "1010", "0110", "1110", "1001",
                                          "0101", "1101", "0011", "1011", "0111"};

std::vector<Rational> tilde_coeffs() {
    std::vector<Rational> t;
    for (std::size_t k = 0; k < 10; ++k) {
        t.push_back(Rational(kBasisD5[0][k] - kBasisD5[1][k] - kBasisD5[2][k] + kBasisD5[3][k]));
    }
    return t;
}

Json cli_payload(const std::vector<std::string>& args, Verdict& v) {
    const auto r = cli::run(args);
    v.require(r.ok, "cli failed: " + r.text);
    if (!r.ok) return Json();
    return Json::parse(r.text)["payload"];
}

// ---- criteria ----

void nullspace_characterization(Verdict& v) {
    const std::map<std::size_t, std::size_t> expected = {{3, 0}, {4, 0}, {5, 5}, {6, 5}};
    for (const auto& [d, nullity] : expected) {
        const Json p = cli_payload({"mincx-basis", "--d", std::to_string(d)}, v);
        v.require(p["nullity"] == nullity, "nullity of A_" + std::to_string(d));
    }
    for (std::size_t d : {5u, 6u}) {
        const auto sys = build_system(d);
        // Columns of A_d follow I*_{d-1} in revlex order; for d = 6 these are
        // the d = 5 columns, so the printed vectors apply unchanged.
        for (std::size_t k = 0; k < 5; ++k) {
            v.require(is_zero(sys.matrix * ints(kBasisD5[k])), "A_" + std::to_string(d) + " a^(" +
                                                                   std::to_string(k + 1) + ") != 0");
        }
    }
}

void matrix_fidelity(Verdict& v) {
    const auto s3 = build_system(3);
    const auto s4 = build_system(4);
    const auto s5 = build_system(5);
    const auto s6 = build_system(6);
    v.require(s3.matrix == RationalMatrix::from_rows({{1, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}}), "A_3");
    v.require(s4.matrix == RationalMatrix::from_rows({{1, 1, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}), "A_4");
    const auto printed5 = RationalMatrix::from_rows({{1, 1, 1, 0, 1, 1, 0, 1, 0, 0},
                                                     {0, 0, 0, 1, 0, 0, 1, 0, 1, 1},
                                                     {1, 1, 0, 1, 1, 0, 1, 0, 1, 0},
                                                     {1, 0, 1, 1, 0, 1, 1, 0, 0, 1},
                                                     {0, 1, 1, 1, 0, 0, 0, 1, 1, 1},
                                                     {0, 0, 0, 0, 1, 1, 1, 1, 1, 1}});
    v.require(s5.matrix == printed5, "A_5");
    // Printed A_6 stacks (ones // A_{I*} // R_1); ours stacks (ones // R_1 // A_{I*}).
    const auto printed6 = RationalMatrix::from_rows({{1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                                                     {1, 1, 0, 1, 1, 0, 1, 0, 1, 0},
                                                     {1, 0, 1, 1, 0, 1, 1, 0, 0, 1},
                                                     {0, 1, 1, 1, 0, 0, 0, 1, 1, 1},
                                                     {0, 0, 0, 0, 1, 1, 1, 1, 1, 1},
                                                     {1, 1, 1, 0, 1, 1, 0, 1, 0, 0}});
    const std::size_t order[] = {0, 5, 1, 2, 3, 4};
    v.require(s6.matrix.rows() == 6 && s6.matrix.cols() == 10, "A_6 shape");
    for (std::size_t r = 0; r < 6 && v.failure.empty(); ++r) {
        const auto ours = s6.matrix.row(r);
        const auto theirs = printed6.row(order[r]);
        v.require(std::equal(ours.begin(), ours.end(), theirs.begin(), theirs.end()),
                  "A_6 row " + std::to_string(r + 1));
    }
    v.require(rank(printed6) == s6.rank, "A_6 rank");
    const auto rows = rank_property_check(9);
    v.require(rows.size() == 4, "rank table rows");
    for (const auto& r : rows) {
        v.require(r.holds && r.rank_d == r.d && r.rank_next == r.d, "rank property at d=" + std::to_string(r.d));
    }
}

void type0_fidelity(Verdict& v) {
    const auto s5 = build_system(5);
    const auto s6 = build_system(6);
    const auto t5 = type0(poly_from_star_coeffs(s5, ints(kBasisD5[0]))).pmf;
    v.require(t5 == pmf_of(5, {{"10100", q(1, 4)}, {"10011", q(1, 4)}, {"01101", q(1, 4)}, {"01010", q(1, 4)}}),
              "type0(P_1), d=5");
    v.require(type0(poly_from_star_coeffs(s6, ints(kBasisD5[0]))).pmf ==
                  pmf_of(6, {{"110100", q(1, 4)}, {"010011", q(1, 4)}, {"001101", q(1, 4)}, {"101010", q(1, 4)}}),
              "type0(a^(1)), d=6");
    v.require(type0(poly_from_star_coeffs(s6, tilde_coeffs())).pmf ==
                  pmf_of(6, {{"101010", q(1, 4)}, {"100101", q(1, 4)}, {"011001", q(1, 4)}, {"010110", q(1, 4)}}),
              "type0(a~), d=6");
    const std::vector<Rational> p1 = {q(-1, 10), q(1, 10), q(1, 10), q(-1, 10)};
    const std::vector<Rational> p3 = {q(-1, 4), q(1, 4), q(1, 4), q(-1, 4)};
    v.require(type0(PolyRep(3, p1)).pmf == f3_d3(), "type0(P_1), d=3");
    v.require(type0(PolyRep(3, p3)).pmf == f3_d3(), "type0(P_3), d=3");
}

void minimality(Verdict& v) {
    std::size_t cases = 0;
    for (std::size_t d = 3; d <= 8; ++d) {
        const std::size_t count = d <= 6 ? 17 : 16;
        const Json p = cli_payload({"mincx-gen", "--d", std::to_string(d), "--random", "--seed",
                                    std::to_string(1000 * d), "--count", std::to_string(count)},
                                   v);
        if (p.is_null()) return;
        for (const auto& c : p["cases"]) {
            ++cases;
            const Pmf f = io::pmf_from_json(c["pmf"]);
            const std::string tag = "d=" + std::to_string(d) + " seed=" + c["seed"].dump();
            v.require(Pmf::validate(f.values(), d) == f, "SB validation " + tag);
            v.require(is_sigma_cx_smallest(f), "is_sigma_cx_smallest " + tag);
            v.require(sigma_ctm_exact(f), "sigma_ctm_exact " + tag);
            v.require(cx_compare(f, independence(d)) == CxOrder::Smaller, "cx vs independence " + tag);
            v.require(cx_compare(f, upper_frechet(d)) == CxOrder::Smaller, "cx vs upper Frechet " + tag);
            if (d % 2 == 0) {
                v.require(is_joint_mix(f), "joint mix " + tag);
                const auto s = sum_distribution(f);
                v.require(s.probs[d / 2] == 1, "center d/2 " + tag);
            }
        }
    }
    v.require(cases == 100, "battery size");
}

void kernel_layer(Verdict& v) {
    for (std::size_t d = 1; d <= 8; ++d) {
        const auto basis = kernel_basis(d);
        v.require(basis.size() == hypercube_size(d - 1), "kernel_basis size d=" + std::to_string(d));
        for (const auto& k : basis) v.require(is_vertex(k), "kernel element not a vertex, d=" + std::to_string(d));
    }
    Stream rng(505, 0);
    for (std::size_t d = 2; d <= 6; ++d) {
        std::size_t pal = 0;
        for (int t = 0; t < 1000; ++t) {
            Pmf f = random_sb_pmf(d, rng);
            if (t % 3 == 0) f = palindromize(f);
            const bool zero = to_poly(f).is_zero();
            pal += zero;
            v.require(zero == is_palindromic(f), "to_poly = 0 iff palindromic, d=" + std::to_string(d));
        }
        // Every pmf in SB_2 is palindromic.
        v.require(pal > 0 && (d == 2 || pal < 1000), "both outcomes exercised, d=" + std::to_string(d));
    }
}

void dependence_minima(Verdict& v) {
    for (std::size_t d = 3; d <= 10; ++d) {
        const auto sys = build_system(d);
        const Rational rho = d % 2 == 0 ? q(-1, static_cast<long>(d - 1)) : q(-1, static_cast<long>(d));
        v.require(minimal_mean_correlation(d) == rho, "minimal_mean_correlation d=" + std::to_string(d));
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const auto m = mean_measures(generate_mincx_random(sys, seed).pmf);
            const std::string tag = " d=" + std::to_string(d);
            v.require(m.rho_x == rho, "rho_P" + tag);
            v.require(m.tau_x == rho / 2, "tau_K(X)" + tag);
            v.require(m.rho_v == rho, "rho_P(V)" + tag);
            v.require(m.tau_v == rho / 2, "tau_K(V)" + tag);
            v.require(m.rho_u == rho / 3, "rho_P(U)" + tag);
            v.require(m.tau_u == 2 * rho / 9, "tau_K(U)" + tag);
        }
    }
}

void phi_identity(Verdict& v) {
    Stream rng(707, 0);
    for (std::size_t d = 2; d <= 8; ++d) {
        for (int t = 0; t < 1000; ++t) {
            const Pmf f = random_sb_pmf(d, rng);
            v.require(phi_expectation(f) == mean_measures(f).rho_x, "phi identity d=" + std::to_string(d));
        }
    }
    // The piecewise-zero variant disagrees with the mean correlation.
    v.require(phi_expectation_piecewise_zero(independence(2)) == q(3, 4), "piecewise phi at independence");
    v.require(mean_measures(independence(2)).rho_x == 0, "mean rho at independence");
}

void pair_count_check(Verdict& v) {
    for (std::size_t d : {5u, 6u}) {
        const PairCounts expected = d == 6 ? PairCounts{6, 9} : PairCounts{4, 6};
        v.require(pair_counts_closed_form(d) == expected, "closed form d=" + std::to_string(d));
        for (const auto& x : star_sets(d).x_star) {
            const std::string s = x.to_string();
            PairCounts c;
            for (std::size_t a = 0; a < d; ++a) {
                for (std::size_t b = a + 1; b < d; ++b) (s[a] == s[b] ? c.n_plus : c.n_minus)++;
            }
            v.require(c == expected, "exhaustive pairs of " + s);
            v.require(pair_counts(x) == expected, "pair_counts of " + s);
        }
    }
}

void cross_moments(Verdict& v) {
    const Pmf f = f1_d6();
    const std::set<std::array<std::size_t, 3>> plus = {{1, 2, 4}, {1, 3, 5}, {2, 5, 6}, {3, 4, 6}};
    const std::set<std::array<std::size_t, 3>> minus = {{3, 5, 6}, {2, 4, 6}, {1, 3, 4}, {1, 2, 5}};
    for (std::size_t a = 1; a <= 6; ++a)
        for (std::size_t b = a + 1; b <= 6; ++b)
            for (std::size_t c = b + 1; c <= 6; ++c) {
                const std::array<std::size_t, 3> t{a, b, c};
                const Rational e = plus.count(t) ? 1 : (minus.count(t) ? -1 : 0);
                v.require(cross_moment3(f, a, b, c) == e, "mu~ of f^(1)");
            }
    Stream rng(909, 0);
    for (std::size_t d = 3; d <= 6; ++d) {
        std::vector<Pmf> pals = kernel_basis(d);
        for (int t = 0; t < 50; ++t) pals.push_back(palindromize(random_sb_pmf(d, rng)));
        for (const auto& p : pals)
            for (std::size_t a = 1; a <= d; ++a)
                for (std::size_t b = a + 1; b <= d; ++b)
                    for (std::size_t c = b + 1; c <= d; ++c)
                        v.require(cross_moment3(p, a, b, c) == 0, "palindromic mu~, d=" + std::to_string(d));
    }
}

std::vector<std::vector<std::size_t>> all_subsets(std::size_t d) {
    std::vector<std::vector<std::size_t>> out;
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t j = 0; j < d; ++j) {
            if ((mask >> j) & 1u) s.push_back(j + 1);
        }
        out.push_back(s);
    }
    return out;
}

void copula_behavior(Verdict& v) {
    constexpr std::size_t n = 100000;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        for (const auto& s : em_sample(minimal_d4(), n, seed)) {
            v.require(std::abs(s[0] + s[1] + s[2] + s[3] - 2.0) <= 1e-12, "EM joint mix sum");
        }
        const auto u = fgm_sample(lower_frechet_d2(), n, seed);
        const auto rho = sample_pearson_uniform(u, 1, 2);
        v.require(std::abs(rho.value + 1.0 / 3) <= 4 * rho.std_error,
                  "FGM rho_hat " + std::to_string(rho.value) + " seed " + std::to_string(seed));
    }

    const std::vector<std::size_t> j15 = {1, 5};
    const auto r = em_sigma_ctm_check(AtomicLaw::from_pmf(counterexample_d5()), j15, n, 2024);
    v.require(r.kind == CtmCheck::Kind::McFail && r.witness.has_value(), "counterexample McFail");
    if (r.witness) {
        const auto& w = *r.witness;
        auto split = [](const BitVector& x, const Rational& u) {
            Rational a = 0, b = 0;
            for (std::size_t j = 1; j <= 5; ++j) (j == 1 || j == 5 ? a : b) += x[j - 1] ? u : Rational(1 - u);
            return std::pair{a, b};
        };
        const auto [a1, b1] = split(w.x1, w.u1);
        const auto [a2, b2] = split(w.x2, w.u2);
        v.require((a1 - a2) * (b1 - b2) > 0, "witness violates countermonotonicity exactly");
    }

    for (std::size_t d : {4u, 5u, 6u}) {
        for (const auto& k : star_kernel_elements(d)) {
            const auto law = AtomicLaw::from_pmf(k);
            for (const auto& s : all_subsets(d)) {
                v.require(em_sigma_ctm_check(law, s, n, 7).kind == CtmCheck::Kind::ExactTrue,
                          "star kernel ExactTrue d=" + std::to_string(d));
            }
        }
    }
    AtomicLaw split;
    split.d = 103;
    const auto x = BitVector::parse(std::string(51, '1') + std::string(52, '0'));
    split.points = {x, x.complement()};
    split.probs = {q(1, 2), q(1, 2)};
    Stream rng(1103, 0);
    for (int t = 0; t < 200; ++t) {
        std::vector<std::size_t> s;
        for (std::size_t j = 1; j <= 103; ++j) {
            if (rng.below(2)) s.push_back(j);
        }
        v.require(em_sigma_ctm_check(split, s, n, 7).kind == CtmCheck::Kind::ExactTrue, "103-split ExactTrue");
    }
}

void fgm_structure(Verdict& v) {
    Stream rng(1111, 0);
    for (std::size_t d = 2; d <= 6; ++d) {
        std::vector<Pmf> pals = kernel_basis(d);
        for (int t = 0; t < 30; ++t) pals.push_back(palindromize(random_sb_pmf(d, rng)));
        for (const auto& p : pals) {
            const auto c = fgm_from_pmf(p);
            for (std::uint32_t s = 0; s < hypercube_size(d); ++s) {
                if (popcount(s) % 2 == 1) v.require(c.theta(s) == 0, "odd theta of palindromic pmf");
            }
            v.require(fgm_admissible(c), "admissible (palindromic)");
        }
        for (int t = 0; t < 30; ++t) {
            const Pmf f = random_sb_pmf(d, rng);
            const auto c = fgm_from_pmf(f);
            v.require(fgm_admissible(c), "admissible d=" + std::to_string(d));
            for (int k = 0; k < 10000 / 30 + 1; ++k) {
                std::vector<double> u(d);
                for (auto& x : u) x = rng.uniform01();
                v.require(std::abs(fgm_cdf(c, u) - fgm_cdf_from_pmf(f, u)) <= 1e-12, "cdf forms agree");
            }
        }
    }
}

struct Criterion {
    int id;
    const char* name;
    std::function<void(Verdict&)> run;
    double limit_seconds;  ///< 0 when untimed
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "nullspace characterization", nullspace_characterization, 1.0},
        {2, "matrix fidelity", matrix_fidelity, 5.0},
        {3, "type-0 fidelity", type0_fidelity, 0},
        {4, "minimality battery", minimality, 30.0},
        {5, "kernel/palindromic layer", kernel_layer, 0},
        {6, "dependence minima", dependence_minima, 0},
        {7, "phi identity", phi_identity, 0},
        {8, "pair counts", pair_count_check, 0},
        {9, "cross moments", cross_moments, 0},
        {10, "copula behavior", copula_behavior, 120.0},
        {11, "FGM structure", fgm_structure, 0},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Verdict v;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(v);
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs > c.limit_seconds) {
            std::ostringstream msg;
            msg << "runtime " << secs << " s exceeds " << c.limit_seconds << " s";
            v.require(false, msg.str());
        }
        const bool ok = v.failure.empty();
        failures += !ok;
        std::printf("%s criterion %2d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name, secs,
                    ok ? "" : " -- ", v.failure.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
