#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "discarr/arrangement.hpp"
#include "discarr/matrix.hpp"
#include "discarr/subsets.hpp"

namespace discarr::io {

using json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings ("p" when q = 1); matrices as row-major
// arrays of such strings; families as sorted lists of sorted integer lists.

json to_json(const Rational& r);
json to_json(const RatVector& v);
json to_json(const RatMatrix& m);
json to_json(const Subset& s);
json to_json(const std::vector<Subset>& f);

Rational rational_from_json(const json& j, const std::string& where);

/// { "m": int, "hyperplanes": [ { "coeffs": [...], "constant": "p/q" }, ... ] }
Arrangement arrangement_from_json(const json& j);
Arrangement parse_arrangement(std::string_view text);
json arrangement_to_json(const Arrangement& h);
std::string serialize_arrangement(const Arrangement& h);

/// Accepts either a bare list of lists or { "n": int, "k": int, "family": [...] }.
/// `n` and `k` fill in whatever the document leaves out.
SubsetFamily parse_family(std::string_view text, std::size_t n = 0, std::size_t k = 0);

std::string read_file(const std::filesystem::path& p);

}  // namespace discarr::io
