#include "discarr/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "discarr/errors.hpp"

namespace discarr::io {

json to_json(const Rational& r) { return r.str(); }

json to_json(const RatVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json to_json(const RatMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row_vector(i)));
  return a;
}

json to_json(const Subset& s) { return json(s); }

json to_json(const std::vector<Subset>& f) {
  json a = json::array();
  for (const auto& s : f) a.push_back(to_json(s));
  return a;
}

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw ParseError(where, "expected a rational string \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where, e.what());
  }
}

Arrangement arrangement_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("", "arrangement document must be an object");
  if (!j.contains("m") || !j["m"].is_number_integer() || j["m"].get<long long>() < 1) {
    throw ParseError("/m", "ambient dimension must be a positive integer");
  }
  const auto m = static_cast<std::size_t>(j["m"].get<long long>());
  if (!j.contains("hyperplanes") || !j["hyperplanes"].is_array()) {
    throw ParseError("/hyperplanes", "expected an array of hyperplanes");
  }
  const json& hs = j["hyperplanes"];
  if (hs.empty()) throw ParseError("/hyperplanes", "arrangement has no hyperplanes");

  RatMatrix coeffs(hs.size(), m);
  RatVector constants(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const std::string at = "/hyperplanes/" + std::to_string(i);
    const json& h = hs[i];
    if (!h.is_object() || !h.contains("coeffs") || !h["coeffs"].is_array()) {
      throw ParseError(at, "hyperplane needs a \"coeffs\" array");
    }
    if (h["coeffs"].size() != m) {
      throw ParseError(at + "/coeffs", "expected " + std::to_string(m) + " coefficients, got " +
                                           std::to_string(h["coeffs"].size()));
    }
    bool zero = true;
    for (std::size_t c = 0; c < m; ++c) {
      coeffs(i, c) = rational_from_json(h["coeffs"][c], at + "/coeffs/" + std::to_string(c));
      zero = zero && coeffs(i, c).is_zero();
    }
    if (zero) throw ParseError(at + "/coeffs", "zero normal vector");
    if (!h.contains("constant")) throw ParseError(at, "missing \"constant\"");
    constants[i] = rational_from_json(h["constant"], at + "/constant");
  }
  return Arrangement(std::move(coeffs), std::move(constants));
}

Arrangement parse_arrangement(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("invalid JSON: ") + e.what());
  }
  return arrangement_from_json(j);
}

json arrangement_to_json(const Arrangement& h) {
  json hs = json::array();
  for (std::size_t i = 0; i < h.n(); ++i) {
    json one;
    one["coeffs"] = to_json(h.coeffs().row_vector(i));
    one["constant"] = h.constants()[i].str();
    hs.push_back(std::move(one));
  }
  json j;
  j["m"] = h.m();
  j["hyperplanes"] = std::move(hs);
  return j;
}

std::string serialize_arrangement(const Arrangement& h) { return arrangement_to_json(h).dump(2) + "\n"; }

SubsetFamily parse_family(std::string_view text, std::size_t n, std::size_t k) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("invalid JSON: ") + e.what());
  }
  const json* list = &j;
  std::string base;
  if (j.is_object()) {
    if (j.contains("n")) n = j["n"].get<std::size_t>();
    if (j.contains("k")) k = j["k"].get<std::size_t>();
    if (!j.contains("family")) throw ParseError("/family", "missing family list");
    list = &j["family"];
    base = "/family";
  }
  if (!list->is_array()) throw ParseError(base, "family must be a list of integer lists");
  SubsetFamily f{n, k, {}};
  std::size_t max_elem = 0;
  for (std::size_t i = 0; i < list->size(); ++i) {
    const json& s = (*list)[i];
    if (!s.is_array()) throw ParseError(base + "/" + std::to_string(i), "member must be a list");
    Subset sub;
    for (const auto& e : s) {
      if (!e.is_number_integer() || e.get<long long>() < 1) {
        throw ParseError(base + "/" + std::to_string(i), "elements must be positive integers");
      }
      sub.push_back(e.get<std::size_t>());
    }
    std::sort(sub.begin(), sub.end());
    if (!sub.empty()) max_elem = std::max(max_elem, sub.back());
    f.members.push_back(std::move(sub));
  }
  if (f.n == 0) f.n = max_elem;
  validate_family(f);
  return f;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace discarr::io
