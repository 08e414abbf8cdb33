#include "symbern/cli.hpp"

#include "symbern/copulas.hpp"
#include "symbern/dependence.hpp"
#include "symbern/error.hpp"
#include "symbern/mincx.hpp"
#include "symbern/pmf.hpp"
#include "symbern/polyrep.hpp"
#include "symbern/rng.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <sstream>

namespace symbern::cli {

namespace {

using io::Json;
using io::to_json;
using Table = std::vector<std::vector<std::string>>;

struct Options {
    std::size_t d = 0;
    std::string pmf;
    std::string poly;
    std::string against;
    std::string kernel;
    std::string coeffs;
    std::string lambda;
    std::string kernel_weights;
    std::string subset;
    std::string kind = "em";
    std::string format = "json";
    std::string out;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::size_t count = 1;
    bool random = false;
    bool star_support = false;
    bool joint_mix = false;
    bool sigma_ctm = false;
    bool vertex = false;
    bool palindromic = false;
    bool has_seed = false;
    bool has_samples = false;
};

struct Output {
    Json payload;
    Table csv;  ///< header row first
    std::vector<Diagnostic> diagnostics;
};

Error usage(const std::string& what) { return Error(ErrorCode::ParseError, what); }

std::string real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, sep)) parts.push_back(part);
    return parts;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& p : split(text, ',')) out.push_back(parse_rational(p));
    return out;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
    std::vector<std::size_t> out;
    for (const auto& p : split(text, ',')) {
        std::size_t used = 0;
        std::size_t j = 0;
        try {
            j = std::stoul(p, &used);
        } catch (const std::logic_error&) {
            throw usage("bad index list: " + text);
        }
        if (used != p.size()) throw usage("bad index list: " + text);
        out.push_back(j);
    }
    return out;
}

void require_seed(const Options& o, const std::string& command) {
    if (!o.has_seed) throw usage(command + " is stochastic and requires --seed");
}

Json law_json(const std::variant<Pmf, AtomicLaw>& law) {
    return std::visit([](const auto& l) { return to_json(l); }, law);
}

std::size_t law_dimension(const std::variant<Pmf, AtomicLaw>& law) {
    return std::visit([](const auto& l) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(l)>, Pmf>) {
            return l.d();
        } else {
            return l.d;
        }
    }, law);
}

AtomicLaw as_atomic(const std::variant<Pmf, AtomicLaw>& law) {
    if (const auto* f = std::get_if<Pmf>(&law)) return AtomicLaw::from_pmf(*f);
    return std::get<AtomicLaw>(law);
}

void append_atoms(Table& t, const Json& law, const std::string& prefix = {}) {
    for (const auto& [x, p] : law["atoms"].items()) {
        std::vector<std::string> row;
        if (!prefix.empty()) row.push_back(prefix);
        row.push_back(x);
        row.push_back(p.get<std::string>());
        t.push_back(std::move(row));
    }
}

std::vector<Sample> draw_samples(const Options& o, const std::variant<Pmf, AtomicLaw>& law) {
    const AtomicLaw atoms = as_atomic(law);
    if (o.kind == "em") return em_sample(atoms, o.samples, o.seed);
    if (o.kind == "fgm") return fgm_sample(atoms, o.samples, o.seed);
    throw usage("--kind must be em or fgm");
}

// ---- commands ----

Output cmd_validate(const Options& o) {
    const auto law = io::law_from_json(io::read_json_file(o.pmf));
    Output out;
    const Json canon = law_json(law);
    out.payload = {{"valid", true}, {"d", law_dimension(law)}, {"support_size", canon["atoms"].size()}, {"pmf", canon}};
    out.csv = {{"x", "probability"}};
    append_atoms(out.csv, canon);
    return out;
}

Output cmd_poly(const Options& o) {
    const Pmf f = io::pmf_from_json(io::read_json_file(o.pmf));
    const PolyRep p = to_poly(f);
    Output out;
    out.payload = {{"poly", to_json(p)}, {"zero", p.is_zero()}, {"in_ideal", in_ideal(p)}};
    if (!p.is_zero()) {
        const auto dec = decompose(f);
        Json decomposition = {{"lambda", to_json(dec.lambda)}, {"type0", to_json(dec.type0)}};
        decomposition["kernel"] = dec.kernel ? to_json(*dec.kernel) : Json();
        out.payload["decomposition"] = std::move(decomposition);
    }
    if (!o.poly.empty()) {
        const auto other = io::poly_from_json(io::read_json_file(o.poly));
        const auto mu = equivalent(p, other);
        out.payload["equivalence_factor"] = mu ? to_json(*mu) : Json();
    }
    out.csv = {{"monomial", "coefficient"}};
    for (const auto& [key, value] : out.payload["poly"]["coeffs"].items()) {
        out.csv.push_back({key, value.get<std::string>()});
    }
    return out;
}

Output cmd_type0(const Options& o) {
    const PolyRep p = io::poly_from_json(io::read_json_file(o.poly));
    const Type0 t = type0(p);
    Output out;
    Pmf result = t.pmf;
    if (!o.lambda.empty() || !o.kernel.empty()) {
        if (o.lambda.empty() || o.kernel.empty()) throw usage("--lambda and --kernel go together");
        const Pmf kernel = io::pmf_from_json(io::read_json_file(o.kernel));
        result = counter_image_member(p, parse_rational(o.lambda), kernel);
    }
    const PolyRep back = to_poly(result);
    const auto mu = equivalent(p, back);
    out.payload = {{"pmf", to_json(result)}, {"mass", to_json(t.mass)}, {"poly", to_json(back)}};
    out.payload["equivalence_factor"] = mu ? to_json(*mu) : Json();
    out.csv = {{"x", "probability"}};
    append_atoms(out.csv, out.payload["pmf"]);
    return out;
}

Output cmd_kernel_basis(const Options& o) {
    require_dimension(o.d, 1, kMaxDimension);
    const auto basis = kernel_basis(o.d);
    Output out;
    Json elements = Json::array();
    out.csv = {{"index", "x", "complement"}};
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto x = BitVector::from_index(static_cast<std::uint32_t>(i), o.d);
        elements.push_back({{"index", i}, {"pmf", to_json(basis[i])}});
        out.csv.push_back({std::to_string(i), x.to_string(), x.complement().to_string()});
    }
    out.payload = {{"d", o.d}, {"count", basis.size()}, {"elements", std::move(elements)}};
    return out;
}

Output cmd_mincx_matrix(const Options& o) {
    const auto sys = build_system(o.d);
    Output out;
    out.payload = {{"d", sys.d},
                   {"rows", sys.matrix.rows()},
                   {"cols", sys.matrix.cols()},
                   {"columns", io::to_json(sys)["columns"]},
                   {"matrix", to_json(sys.matrix)},
                   {"rank", sys.rank}};
    std::vector<std::string> header;
    for (const auto& i : sys.star.i_star) header.push_back(i.to_string());
    out.csv.push_back(header);
    for (std::size_t r = 0; r < sys.matrix.rows(); ++r) {
        std::vector<std::string> row;
        for (const auto& x : sys.matrix.row(r)) row.push_back(format_rational(x));
        out.csv.push_back(std::move(row));
    }
    return out;
}

Output cmd_mincx_basis(const Options& o) {
    const auto sys = build_system(o.d);
    Output out;
    Json full = io::to_json(sys);
    out.payload = {{"d", sys.d},
                   {"rank", sys.rank},
                   {"nullity", sys.nullity},
                   {"columns", full["columns"]},
                   {"basis", full["basis"]}};
    std::vector<std::string> header;
    for (const auto& i : sys.star.i_star) header.push_back(i.to_string());
    out.csv.push_back(header);
    for (const auto& v : sys.basis) {
        std::vector<std::string> row;
        for (const auto& x : v) row.push_back(format_rational(x));
        out.csv.push_back(std::move(row));
    }
    return out;
}

std::vector<std::pair<std::size_t, Rational>> parse_kernel_weights(const MinCxSystem& sys, const std::string& text) {
    std::vector<std::pair<std::size_t, Rational>> weights;
    for (const auto& item : split(text, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw usage("kernel weights are i:w pairs, got " + item);
        const BitVector key = BitVector::parse(item.substr(0, colon));
        const auto it = std::find(sys.star.i_star.begin(), sys.star.i_star.end(), key);
        if (it == sys.star.i_star.end()) {
            throw Error(ErrorCode::KernelElementNotStar, item.substr(0, colon) + " is not in I*_{d-1}");
        }
        weights.emplace_back(static_cast<std::size_t>(it - sys.star.i_star.begin()),
                             parse_rational(item.substr(colon + 1)));
    }
    return weights;
}

Json generated_case_json(const MinCxSystem& sys, const std::vector<Rational>& combination, const Rational& lambda,
                         const std::vector<std::pair<std::size_t, Rational>>& weights, const Pmf& f) {
    Json kw = Json::object();
    for (const auto& [k, w] : weights) kw[sys.star.i_star[k].to_string()] = to_json(w);
    return {{"combination", to_json(combination)},
            {"lambda", to_json(lambda)},
            {"kernel_weights", std::move(kw)},
            {"pmf", to_json(f)},
            {"poly", to_json(to_poly(f))}};
}

Output cmd_mincx_gen(const Options& o) {
    const auto sys = build_system(o.d);
    Output out;
    Json cases = Json::array();
    if (o.random) {
        require_seed(o, "mincx-gen --random");
        for (std::size_t c = 0; c < o.count; ++c) {
            const std::uint64_t seed = o.seed + c;
            const auto g = generate_mincx_random(sys, seed);
            Json j = generated_case_json(sys, g.combination, g.lambda, g.kernel_weights, g.pmf);
            j["seed"] = seed;
            cases.push_back(std::move(j));
        }
    } else {
        const Rational lambda = o.lambda.empty() ? Rational(1) : parse_rational(o.lambda);
        std::vector<Rational> combination;
        if (!o.coeffs.empty()) combination = parse_rational_list(o.coeffs);
        std::vector<std::pair<std::size_t, Rational>> weights;
        if (!o.kernel_weights.empty()) weights = parse_kernel_weights(sys, o.kernel_weights);
        const Pmf f = generate_mincx(sys, combination, lambda, weights);
        cases.push_back(generated_case_json(sys, combination, lambda, weights, f));
    }
    out.csv = {{"case", "x", "probability"}};
    for (std::size_t c = 0; c < cases.size(); ++c) append_atoms(out.csv, cases[c]["pmf"], std::to_string(c));
    out.payload = {{"d", o.d}, {"nullity", sys.nullity}, {"cases", std::move(cases)}};
    return out;
}

Output cmd_check(const Options& o) {
    const Pmf f = io::pmf_from_json(io::read_json_file(o.pmf));
    std::vector<std::pair<std::string, std::function<bool()>>> checks;
    if (o.star_support) checks.emplace_back("star_support", [&] { return is_sigma_cx_smallest(f); });
    if (o.joint_mix) checks.emplace_back("joint_mix", [&] { return is_joint_mix(f); });
    if (o.sigma_ctm) checks.emplace_back("sigma_ctm", [&] { return sigma_ctm_exact(f); });
    if (o.vertex) checks.emplace_back("vertex", [&] { return is_vertex(f); });
    if (o.palindromic) checks.emplace_back("palindromic", [&] { return is_palindromic(f); });
    if (checks.empty()) throw usage("check needs at least one of --star-support --joint-mix --sigma-ctm --vertex --palindromic");
    Output out;
    Json results = Json::object();
    bool all = true;
    out.csv = {{"check", "result"}};
    for (const auto& [name, fn] : checks) {
        const bool r = fn();
        all = all && r;
        results[name] = r;
        out.csv.push_back({name, r ? "true" : "false"});
    }
    out.payload = {{"result", all}, {"checks", std::move(results)}};
    return out;
}

SumDistribution law_sum(const std::variant<Pmf, AtomicLaw>& law) {
    return std::visit([](const auto& l) { return sum_distribution(l); }, law);
}

Output cmd_cx_compare(const Options& o) {
    if (o.against.empty()) throw usage("cx-compare needs --against FILE");
    const auto f = law_sum(io::law_from_json(io::read_json_file(o.pmf)));
    const auto g = law_sum(io::law_from_json(io::read_json_file(o.against)));
    const auto order = cx_compare(f, g);
    const auto sf = stop_loss_vector(f);
    const auto sg = stop_loss_vector(g);
    Output out;
    out.payload = {{"order", to_string(order)},
                   {"mean_f", to_json(f.mean())},
                   {"mean_g", to_json(g.mean())},
                   {"stop_loss_f", to_json(sf)},
                   {"stop_loss_g", to_json(sg)}};
    out.csv = {{"k", "stop_loss_f", "stop_loss_g"}};
    for (std::size_t k = 0; k < std::max(sf.size(), sg.size()); ++k) {
        out.csv.push_back({std::to_string(k), k < sf.size() ? format_rational(sf[k]) : "0",
                           k < sg.size() ? format_rational(sg[k]) : "0"});
    }
    return out;
}

Output cmd_copula_em(const Options& o) {
    const auto law = io::law_from_json(io::read_json_file(o.pmf));
    const EmCopula c = std::holds_alternative<Pmf>(law) ? em_from_pmf(std::get<Pmf>(law))
                                                        : em_from_law(std::get<AtomicLaw>(law));
    Output out;
    out.payload = to_json(c);
    out.csv = {{"index_set", "weight"}};
    for (const auto& [i, w] : c.weights) out.csv.push_back({i.to_string(), format_rational(w)});
    return out;
}

Output cmd_copula_fgm(const Options& o) {
    const Pmf f = io::pmf_from_json(io::read_json_file(o.pmf));
    const FgmCopula c = fgm_from_pmf(f);
    Output out;
    out.payload = to_json(c);
    out.payload["admissible"] = fgm_admissible(c);
    out.csv = {{"subset", "theta"}};
    for (const auto& [key, value] : out.payload["thetas"].items()) {
        out.csv.push_back({"\"" + key + "\"", value.get<std::string>()});
    }
    return out;
}

Output cmd_sample(const Options& o) {
    require_seed(o, "sample");
    if (!o.has_samples) throw usage("sample needs --samples");
    const auto law = io::law_from_json(io::read_json_file(o.pmf));
    const auto samples = draw_samples(o, law);
    const std::size_t d = law_dimension(law);
    Output out;
    Json rows = Json::array();
    std::vector<std::string> header;
    for (std::size_t j = 1; j <= d; ++j) header.push_back("u" + std::to_string(j));
    out.csv.push_back(header);
    for (const auto& s : samples) {
        rows.push_back(s);
        std::vector<std::string> row;
        for (double u : s) row.push_back(real(u));
        out.csv.push_back(std::move(row));
    }
    out.payload = {{"kind", o.kind}, {"d", d}, {"seed", o.seed}, {"n", samples.size()}, {"samples", std::move(rows)}};
    return out;
}

Output cmd_measures(const Options& o) {
    const Pmf f = io::pmf_from_json(io::read_json_file(o.pmf));
    if (f.d() < 2) throw Error(ErrorCode::DimensionOutOfRange, "measures need d >= 2");
    std::vector<Sample> samples;
    if (o.has_samples) {
        require_seed(o, "measures --samples");
        samples = draw_samples(o, f);
    }
    Output out;
    Json pairs = Json::array();
    out.csv = {{"j1", "j2", "rho_x", "tau_x", "rho_v", "tau_v", "rho_u", "tau_u", "estimator", "rho_hat",
                "rho_se", "tau_hat", "tau_se"}};
    for (std::size_t a = 1; a <= f.d(); ++a) {
        for (std::size_t b = a + 1; b <= f.d(); ++b) {
            const auto m = bernoulli_pair_measures(f, a, b);
            const Rational rho_u = m.rho_p / 3;
            const Rational tau_u = 2 * m.rho_p / 9;
            Json rec = {{"pair", {a, b}},
                        {"rho_x", to_json(m.rho_p)},
                        {"tau_x", to_json(m.tau_k)},
                        {"rho_v", to_json(m.rho_p)},
                        {"tau_v", to_json(m.tau_k)},
                        {"rho_u", to_json(rho_u)},
                        {"tau_u", to_json(tau_u)}};
            std::vector<std::string> row = {std::to_string(a), std::to_string(b), format_rational(m.rho_p),
                                            format_rational(m.tau_k), format_rational(m.rho_p),
                                            format_rational(m.tau_k), format_rational(rho_u),
                                            format_rational(tau_u)};
            if (!samples.empty()) {
                const auto rho = sample_pearson_uniform(samples, a, b);
                const auto tau = sample_kendall(samples, a, b);
                rec["estimator"] = o.kind;
                rec["rho_hat"] = rho.value;
                rec["rho_std_error"] = rho.std_error;
                rec["tau_hat"] = tau.value;
                rec["tau_std_error"] = tau.std_error;
                for (const auto& s : {o.kind, real(rho.value), real(rho.std_error), real(tau.value),
                                      real(tau.std_error)}) {
                    row.push_back(s);
                }
            } else {
                row.insert(row.end(), 5, "");
            }
            pairs.push_back(std::move(rec));
            out.csv.push_back(std::move(row));
        }
    }
    const auto mean = mean_measures(f);
    out.payload = {{"d", f.d()},
                   {"pairs", std::move(pairs)},
                   {"mean", {{"rho_x", to_json(mean.rho_x)},
                             {"tau_x", to_json(mean.tau_x)},
                             {"rho_v", to_json(mean.rho_v)},
                             {"tau_v", to_json(mean.tau_v)},
                             {"rho_u", to_json(mean.rho_u)},
                             {"tau_u", to_json(mean.tau_u)}}},
                   {"phi_expectation", to_json(phi_expectation(f))},
                   {"minimal_mean_correlation", to_json(minimal_mean_correlation(f.d()))}};
    return out;
}

Output cmd_cross_moment3(const Options& o) {
    const Pmf f = io::pmf_from_json(io::read_json_file(o.pmf));
    if (f.d() < 3) throw Error(ErrorCode::DimensionOutOfRange, "third cross moments need d >= 3");
    std::vector<std::array<std::size_t, 3>> triples;
    if (!o.subset.empty()) {
        const auto js = parse_index_list(o.subset);
        if (js.size() != 3) throw usage("--subset must name three coordinates");
        triples.push_back({js[0], js[1], js[2]});
    } else {
        for (std::size_t a = 1; a <= f.d(); ++a)
            for (std::size_t b = a + 1; b <= f.d(); ++b)
                for (std::size_t c = b + 1; c <= f.d(); ++c) triples.push_back({a, b, c});
    }
    std::vector<Sample> samples;
    if (o.has_samples) {
        require_seed(o, "cross-moment3 --samples");
        samples = draw_samples(o, f);
    }
    Output out;
    Json records = Json::array();
    out.csv = {{"j1", "j2", "j3", "x", "em", "fgm", "estimator", "estimate", "std_error"}};
    for (const auto& t : triples) {
        const Rational x = cross_moment3(f, t[0], t[1], t[2]);
        const Rational em = cross_moment3_em(f, t[0], t[1], t[2]);
        const double fgm = cross_moment3_fgm(f, t[0], t[1], t[2]);
        Json rec = {{"triple", t}, {"x", to_json(x)}, {"em", to_json(em)}, {"fgm", fgm}};
        std::vector<std::string> row = {std::to_string(t[0]), std::to_string(t[1]), std::to_string(t[2]),
                                        format_rational(x), format_rational(em), real(fgm)};
        if (!samples.empty()) {
            const auto e = sample_cross_moment3_uniform(samples, t[0], t[1], t[2]);
            rec["estimator"] = o.kind;
            rec["estimate"] = e.value;
            rec["std_error"] = e.std_error;
            for (const auto& s : {o.kind, real(e.value), real(e.std_error)}) row.push_back(s);
        } else {
            row.insert(row.end(), 3, "");
        }
        records.push_back(std::move(rec));
        out.csv.push_back(std::move(row));
    }
    out.payload = {{"d", f.d()}, {"triples", std::move(records)}};
    return out;
}

Output cmd_rank_table(const Options& o) {
    const auto rows = rank_property_check(o.d);
    Output out;
    Json table = Json::array();
    out.csv = {{"d", "rank_d", "rank_d_plus_1", "holds"}};
    bool all = true;
    for (const auto& r : rows) {
        table.push_back({{"d", r.d}, {"rank_d", r.rank_d}, {"rank_d_plus_1", r.rank_next}, {"holds", r.holds}});
        out.csv.push_back({std::to_string(r.d), std::to_string(r.rank_d), std::to_string(r.rank_next),
                           r.holds ? "true" : "false"});
        all = all && r.holds;
    }
    out.payload = {{"rows", std::move(table)}, {"all_hold", all}};
    return out;
}

Json witness_json(const CtmWitness& w) {
    return {{"x1", w.x1.to_string()}, {"x2", w.x2.to_string()}, {"u1", to_json(w.u1)}, {"u2", to_json(w.u2)},
            {"a1", to_json(w.a1)},    {"b1", to_json(w.b1)},    {"a2", to_json(w.a2)}, {"b2", to_json(w.b2)},
            {"product", to_json(w.product)}};
}

Output cmd_em_ctm_check(const Options& o) {
    require_seed(o, "em-ctm-check");
    if (o.subset.empty()) throw usage("em-ctm-check needs --subset");
    const auto law = as_atomic(io::law_from_json(io::read_json_file(o.pmf)));
    const auto subset = parse_index_list(o.subset);
    const std::size_t n = o.has_samples ? o.samples : 10000;
    const auto r = em_sigma_ctm_check(law, subset, n, o.seed);
    Output out;
    out.payload = {{"kind", to_string(r.kind)}, {"p_hat", r.p_hat}, {"pairs", r.pairs}};
    out.payload["witness"] = r.witness ? witness_json(*r.witness) : Json();
    out.csv = {{"field", "value"},
               {"kind", to_string(r.kind)},
               {"p_hat", real(r.p_hat)},
               {"pairs", std::to_string(r.pairs)}};
    if (r.witness) {
        for (const auto& [key, value] : out.payload["witness"].items()) {
            out.csv.push_back({"witness." + key, value.get<std::string>()});
        }
    }
    return out;
}

std::string render_csv(const Table& t) {
    std::string s;
    for (const auto& row : t) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) s += ',';
            s += row[c];
        }
        s += '\n';
    }
    return s;
}

Json diagnostics_json(const std::vector<Diagnostic>& ds) {
    Json out = Json::array();
    for (const auto& d : ds) out.push_back({{"level", d.level}, {"code", d.code}, {"message", d.message}});
    return out;
}

std::string render_envelope(const CommandResult& r) {
    Json doc = {{"status", r.ok ? "ok" : "error"}, {"payload", r.payload}, {"diagnostics", diagnostics_json(r.diagnostics)}};
    return doc.dump(2) + "\n";
}

CommandResult failure(ExitCode code, std::string error_code, std::string message) {
    CommandResult r;
    r.ok = false;
    r.exit_code = code;
    r.payload = nullptr;
    r.diagnostics.push_back({"error", std::move(error_code), std::move(message)});
    r.text = render_envelope(r);
    return r;
}

}  // namespace

ExitCode exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::Io: return ExitCode::Io;
        case ErrorCode::DimensionTooLarge:
        case ErrorCode::ZeroPolynomial:
        case ErrorCode::NotInIdeal:
        case ErrorCode::ZeroCombination:
            return ExitCode::Infeasible;
        default: return ExitCode::Validation;
    }
}

CommandResult run(const std::vector<std::string>& args) {
    Options o;
    CLI::App app{"Symmetric multivariate Bernoulli toolkit", "symbern"};
    app.require_subcommand(1);
    app.fallthrough();

    auto add_pmf = [&](CLI::App* s) { s->add_option("--pmf", o.pmf, "pmf JSON file")->required(); };
    auto add_d = [&](CLI::App* s) { s->add_option("--d", o.d, "dimension")->required(); };
    auto add_format = [&](CLI::App* s) {
        s->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        s->add_option("--out", o.out, "write output to FILE");
    };
    auto add_seed = [&](CLI::App* s) {
        s->add_option("--seed", o.seed, "random seed")->each([&](const std::string&) { o.has_seed = true; });
    };
    auto add_samples = [&](CLI::App* s) {
        s->add_option("--samples", o.samples, "number of draws")->each([&](const std::string&) {
            o.has_samples = true;
        });
    };
    auto add_kind = [&](CLI::App* s) {
        s->add_option("--kind", o.kind, "copula: em or fgm")->check(CLI::IsMember({"em", "fgm"}));
    };

    std::map<CLI::App*, std::function<Output(const Options&)>> handlers;
    auto sub = [&](const std::string& name, const std::string& help, std::function<Output(const Options&)> fn) {
        auto* s = app.add_subcommand(name, help);
        add_format(s);
        handlers[s] = std::move(fn);
        return s;
    };

    add_pmf(sub("validate", "validate a pmf and print its canonical form", cmd_validate));
    {
        auto* s = sub("poly", "polynomial representation of a pmf", cmd_poly);
        add_pmf(s);
        s->add_option("--poly", o.poly, "report the equivalence factor against this polynomial");
    }
    {
        auto* s = sub("type0", "type-0 pmf of a polynomial in the ideal", cmd_type0);
        s->add_option("--poly", o.poly, "polynomial JSON file")->required();
        s->add_option("--lambda", o.lambda, "mixing weight of the type-0 pmf");
        s->add_option("--kernel", o.kernel, "palindromic pmf JSON file");
    }
    add_d(sub("kernel-basis", "two-point palindromic pmfs", cmd_kernel_basis));
    add_d(sub("mincx-matrix", "the matrix A_d", cmd_mincx_matrix));
    add_d(sub("mincx-basis", "nullspace basis of A_d", cmd_mincx_basis));
    {
        auto* s = sub("mincx-gen", "generate Σ_cx-smallest pmfs", cmd_mincx_gen);
        add_d(s);
        s->add_option("--coeffs", o.coeffs, "basis combination c1,c2,...");
        s->add_option("--lambda", o.lambda, "weight of the type-0 part (default 1)");
        s->add_option("--kernel-weights", o.kernel_weights, "kernel mixture i:w,... with i in I*_{d-1}");
        s->add_flag("--random", o.random, "draw combination, lambda and kernel mixture");
        s->add_option("--count", o.count, "number of random cases (case k uses seed + k)");
        add_seed(s);
    }
    {
        auto* s = sub("check", "structural checks on a pmf", cmd_check);
        add_pmf(s);
        s->add_flag("--star-support", o.star_support, "support in X_d^* (Σ_cx-smallest)");
        s->add_flag("--joint-mix", o.joint_mix, "constant component sum");
        s->add_flag("--sigma-ctm", o.sigma_ctm, "Σ-countermonotonic (d <= 12)");
        s->add_flag("--vertex", o.vertex, "extremal point of SB_d");
        s->add_flag("--palindromic", o.palindromic, "f(x) = f(1 - x)");
    }
    {
        auto* s = sub("cx-compare", "convex order of the component sums", cmd_cx_compare);
        add_pmf(s);
        s->add_option("--against", o.against, "second pmf JSON file")->required();
    }
    add_pmf(sub("copula-em", "extremal mixture copula of a pmf", cmd_copula_em));
    add_pmf(sub("copula-fgm", "FGM copula of a pmf", cmd_copula_fgm));
    {
        auto* s = sub("sample", "draw from the EM or FGM copula of a pmf", cmd_sample);
        add_pmf(s);
        add_kind(s);
        add_samples(s);
        add_seed(s);
    }
    {
        auto* s = sub("measures", "pairwise Pearson and Kendall measures", cmd_measures);
        add_pmf(s);
        add_kind(s);
        add_samples(s);
        add_seed(s);
    }
    {
        auto* s = sub("cross-moment3", "standardized third cross moments", cmd_cross_moment3);
        add_pmf(s);
        s->add_option("--subset", o.subset, "a single triple j1,j2,j3");
        add_kind(s);
        add_samples(s);
        add_seed(s);
    }
    {
        auto* s = sub("rank-table", "rank(A_d) and rank(A_{d+1}) for odd d", cmd_rank_table);
        s->add_option("--d", o.d, "largest odd d")->required();
    }
    {
        auto* s = sub("em-ctm-check", "Σ-countermonotonicity of an EM copula split", cmd_em_ctm_check);
        add_pmf(s);
        s->add_option("--subset", o.subset, "coordinates j1,j2,... of J")->required();
        add_samples(s);
        add_seed(s);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        CommandResult r;
        r.text = app.help();
        return r;
    } catch (const CLI::ParseError& e) {
        return failure(ExitCode::Validation, "UsageError", e.what());
    }

    CLI::App* chosen = app.get_subcommands().front();
    CommandResult r;
    Output out;
    try {
        out = handlers.at(chosen)(o);
    } catch (const Error& e) {
        return failure(exit_code_for(e.code()), std::string(to_string(e.code())), e.what());
    } catch (const std::exception& e) {
        return failure(ExitCode::Validation, "InternalError", e.what());
    }
    r.payload = std::move(out.payload);
    r.diagnostics = std::move(out.diagnostics);
    r.text = o.format == "csv" ? render_csv(out.csv) : render_envelope(r);
    if (!o.out.empty()) {
        try {
            io::write_text_file(o.out, r.text);
        } catch (const Error& e) {
            return failure(ExitCode::Io, std::string(to_string(e.code())), e.what());
        }
        r.text.clear();
    }
    return r;
}

}  // namespace symbern::cli
