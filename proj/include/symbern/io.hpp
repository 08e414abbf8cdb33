#pragma once

#include "symbern/copulas.hpp"
#include "symbern/matrix.hpp"
#include "symbern/mincx.hpp"
#include "symbern/pmf.hpp"
#include "symbern/polyrep.hpp"
#include "symbern/rational.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace symbern::io {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings; JSON integers are also accepted on input.
Json to_json(const Rational& value);
Rational rational_from_json(const Json& value);

Json to_json(const RationalVector& v);
Json to_json(const RationalMatrix& m);

/// Canonical sparse form {"d", "atoms": {bitstring: p/q}}.
Json to_json(const Pmf& f);
Json to_json(const AtomicLaw& law);

/**
 * Dense {"d", "values"} or sparse {"d", "atoms"} input. Laws with d above
 * kMaxDimension are only accepted in sparse form and come back as an
 * AtomicLaw.
 */
std::variant<Pmf, AtomicLaw> law_from_json(const Json& doc);
/// Throws DimensionTooLarge for a law that does not fit a dense Pmf.
Pmf pmf_from_json(const Json& doc);

Json to_json(const PolyRep& p);
PolyRep poly_from_json(const Json& doc);

Json to_json(const EmCopula& c);
EmCopula em_from_json(const Json& doc);
/// Nonzero thetas only; keys "j1,j2,..." with 1-based coordinates.
Json to_json(const FgmCopula& c);
FgmCopula fgm_from_json(const Json& doc);

Json to_json(const MinCxSystem& sys);

/// Throws Error(Io) when the file cannot be read, Error(ParseError) on bad JSON.
Json read_json_file(const std::string& path);
/// Throws Error(Io).
void write_text_file(const std::string& path, const std::string& text);

}  // namespace symbern::io
