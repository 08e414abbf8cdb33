#include "symbern/io.hpp"

#include "symbern/error.hpp"

#include <fstream>
#include <sstream>

namespace symbern::io {

namespace {

Error parse_error(const std::string& what) { return Error(ErrorCode::ParseError, what); }

std::size_t read_dimension(const Json& doc) {
    if (!doc.is_object() || !doc.contains("d") || !doc["d"].is_number_integer() || doc["d"].get<long long>() < 0) {
        throw parse_error("expected an object with a nonnegative integer \"d\"");
    }
    return doc["d"].get<std::size_t>();
}

BitVector read_bits(const std::string& key, std::size_t length) {
    BitVector x = BitVector::parse(key);
    if (x.size() != length) {
        throw Error(ErrorCode::DimensionMismatch,
                    "bitstring " + key + " has length " + std::to_string(x.size()) + ", expected " +
                        std::to_string(length));
    }
    return x;
}

std::map<BitVector, Rational> read_atoms(const Json& atoms, std::size_t length) {
    if (!atoms.is_object()) throw parse_error("\"atoms\" must be an object keyed by bitstrings");
    std::map<BitVector, Rational> out;
    for (const auto& [key, value] : atoms.items()) {
        auto x = read_bits(key, length);
        if (!out.emplace(x, rational_from_json(value)).second) throw parse_error("duplicate atom " + key);
    }
    return out;
}

std::string subset_key(std::uint32_t mask) {
    std::string key;
    for (std::size_t h = 0; h < 32; ++h) {
        if (bit(mask, h)) {
            if (!key.empty()) key += ',';
            key += std::to_string(h + 1);
        }
    }
    return key;
}

std::uint32_t parse_subset_key(const std::string& key, std::size_t d) {
    std::uint32_t mask = 0;
    std::stringstream in(key);
    std::string part;
    while (std::getline(in, part, ',')) {
        std::size_t j = 0;
        try {
            std::size_t used = 0;
            j = std::stoul(part, &used);
            if (used != part.size()) throw parse_error("bad subset key " + key);
        } catch (const std::logic_error&) {
            throw parse_error("bad subset key " + key);
        }
        if (j < 1 || j > d) throw Error(ErrorCode::IndexOutOfRange, "subset key " + key + " outside 1..d");
        mask |= 1u << (j - 1);
    }
    return mask;
}

}  // namespace

Json to_json(const Rational& value) { return format_rational(value); }

Rational rational_from_json(const Json& value) {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return parse_rational(std::to_string(value.get<long long>()));
    throw parse_error("rationals must be \"p/q\" strings or integers, got " + value.dump());
}

Json to_json(const RationalVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

Json to_json(const RationalMatrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (const auto& x : m.row(r)) row.push_back(to_json(x));
        out.push_back(std::move(row));
    }
    return out;
}

Json to_json(const Pmf& f) {
    Json atoms = Json::object();
    for (auto i : f.support()) atoms[BitVector::from_index(i, f.d()).to_string()] = to_json(f[i]);
    return Json{{"d", f.d()}, {"atoms", std::move(atoms)}};
}

Json to_json(const AtomicLaw& law) {
    std::map<BitVector, Rational> merged;
    for (std::size_t a = 0; a < law.points.size(); ++a) merged[law.points[a]] += law.probs[a];
    Json atoms = Json::object();
    for (const auto& [x, p] : merged) {
        if (sgn(p) != 0) atoms[x.to_string()] = to_json(p);
    }
    return Json{{"d", law.d}, {"atoms", std::move(atoms)}};
}

std::variant<Pmf, AtomicLaw> law_from_json(const Json& doc) {
    const std::size_t d = read_dimension(doc);
    if (d < 1) throw Error(ErrorCode::DimensionOutOfRange, "d must be at least 1");
    const bool dense = doc.contains("values");
    const bool sparse = doc.contains("atoms");
    if (dense == sparse) throw parse_error("a pmf needs exactly one of \"values\" or \"atoms\"");
    if (dense) {
        if (d > kMaxDimension) {
            throw Error(ErrorCode::DimensionTooLarge, "dense pmfs are limited to d <= 20; use \"atoms\"");
        }
        if (!doc["values"].is_array()) throw parse_error("\"values\" must be an array");
        std::vector<Rational> values;
        for (const auto& v : doc["values"]) values.push_back(rational_from_json(v));
        return Pmf::validate(std::move(values), d);
    }
    auto atoms = read_atoms(doc["atoms"], d);
    if (d <= kMaxDimension) return Pmf::from_atoms(d, atoms);
    AtomicLaw law;
    law.d = d;
    for (auto& [x, p] : atoms) {
        law.points.push_back(x);
        law.probs.push_back(p);
    }
    law.check();
    return law;
}

Pmf pmf_from_json(const Json& doc) {
    auto law = law_from_json(doc);
    if (auto* f = std::get_if<Pmf>(&law)) return *f;
    throw Error(ErrorCode::DimensionTooLarge, "this operation needs a dense pmf (d <= 20)");
}

Json to_json(const PolyRep& p) {
    Json coeffs = Json::object();
    const auto& a = p.coeffs();
    for (std::uint32_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0) coeffs[BitVector::from_index(i, p.num_vars()).to_string()] = to_json(a[i]);
    }
    return Json{{"d", p.d()}, {"coeffs", std::move(coeffs)}};
}

PolyRep poly_from_json(const Json& doc) {
    const std::size_t d = read_dimension(doc);
    require_dimension(d, 2, kMaxDimension);
    if (!doc.contains("coeffs") || !doc["coeffs"].is_object()) throw parse_error("\"coeffs\" object missing");
    std::vector<Rational> coeffs(hypercube_size(d - 1));
    for (const auto& [key, value] : doc["coeffs"].items()) {
        coeffs[read_bits(key, d - 1).index()] = rational_from_json(value);
    }
    return PolyRep(d, std::move(coeffs));
}

Json to_json(const EmCopula& c) {
    Json weights = Json::object();
    for (const auto& [i, w] : c.weights) weights[i.to_string()] = to_json(w);
    return Json{{"d", c.d}, {"weights", std::move(weights)}};
}

EmCopula em_from_json(const Json& doc) {
    EmCopula c;
    c.d = read_dimension(doc);
    if (c.d < 2) throw Error(ErrorCode::DimensionOutOfRange, "EM copulas need d >= 2");
    if (!doc.contains("weights")) throw parse_error("\"weights\" object missing");
    c.weights = read_atoms(doc["weights"], c.d - 1);
    c.check();
    return c;
}

Json to_json(const FgmCopula& c) {
    Json thetas = Json::object();
    const auto dense = c.dense();
    for (std::uint32_t s = 0; s < dense.size(); ++s) {
        if (popcount(s) >= 2 && sgn(dense[s]) != 0) thetas[subset_key(s)] = to_json(dense[s]);
    }
    return Json{{"d", c.d()}, {"thetas", std::move(thetas)}};
}

FgmCopula fgm_from_json(const Json& doc) {
    const std::size_t d = read_dimension(doc);
    require_dimension(d, 2, kMaxDimension);
    if (!doc.contains("thetas") || !doc["thetas"].is_object()) throw parse_error("\"thetas\" object missing");
    std::map<std::uint32_t, Rational> thetas;
    for (const auto& [key, value] : doc["thetas"].items()) {
        thetas[parse_subset_key(key, d)] = rational_from_json(value);
    }
    return FgmCopula(d, std::move(thetas));
}

Json to_json(const MinCxSystem& sys) {
    Json columns = Json::array();
    for (const auto& i : sys.star.i_star) columns.push_back(i.to_string());
    Json basis = Json::array();
    for (const auto& v : sys.basis) basis.push_back(to_json(v));
    return Json{{"d", sys.d},
                {"rows", sys.matrix.rows()},
                {"cols", sys.matrix.cols()},
                {"columns", std::move(columns)},
                {"matrix", to_json(sys.matrix)},
                {"rank", sys.rank},
                {"nullity", sys.nullity},
                {"basis", std::move(basis)}};
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw Error(ErrorCode::Io, "cannot read " + path);
    try {
        return Json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
    out << text;
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
}

}  // namespace symbern::io
