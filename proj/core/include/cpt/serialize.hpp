#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "cpt/chern.hpp"
#include "cpt/iso_search.hpp"
#include "cpt/sweep.hpp"
#include "cpt/tower_ring.hpp"

namespace cpt {

/// Insertion-ordered so that emitted documents read top-down.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "cpt/1";

/// Library version, embedded in reports and cache keys.
const char* library_version();

/// Coefficients, matrix entries, determinants and family parameters are
/// decimal strings; exponents, caps, ranks and bounds are plain numbers.
Json to_json(const Poly& p);
/// Throws ParseError on zero or repeated terms and on ragged exponent lists.
/// `ngens` is used when the term list is empty.
Poly poly_from_json(const Json& j, std::size_t ngens);

Json to_json(const TowerSpec& spec);
/// Accepts {"stages":[{"fiber_dim":n,"chern":[<Poly>,...]}, ...]}. Throws
/// ParseError for schema violations and SpecError for invalid towers.
TowerSpec tower_from_json(const Json& j);

Json to_json(const RingPresentation& pres);
/// Accepts {"caps":[...],"relations":[<Poly>,...]}.
RingPresentation presentation_from_json(const Json& j);

Json to_json(const BundleDescriptor& b);
BundleDescriptor bundle_from_json(const Json& j, const RingPresentation& base);

Json to_json(const Matrix& m);
Json to_json(const IsoCertificate& cert);
Json to_json(const SearchVerdict& v);
SearchVerdict verdict_from_json(const Json& j);

Json to_json(const Pi6Comparison& cmp);
/// `flags` is embedded verbatim. Timing is omitted when `timing` is false so
/// that reports can be compared byte for byte.
Json to_json(const Report& r, const Json& flags, bool timing);

/// Adds the schema tag as the first key.
Json with_schema(Json body);

/// Parses text, converting syntax errors to ParseError("<line>:<col>: ...").
Json parse_json_text(std::string_view text);

/// 1-based line of the start of element `index` of the top-level array
/// member `key`, or 0 if it cannot be located.
std::size_t locate_array_element(std::string_view text, std::string_view key, std::size_t index);

}  // namespace cpt
