#pragma once

// Wire formats. Rationals travel as strings ("3/4", "-2") so nothing is ever
// rounded; integer JSON numbers are accepted on input for convenience.
//
//   Poly     ["1", "-1/2", "3"]           index = degree
//   Complex  {"facets": [[0, 1], [1, 2]]}

#include "gammacheb/poly.hpp"
#include "gammacheb/rational.hpp"
#include "gammacheb/simplicial.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace gammacheb {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return parse_rational(j.dump());
    throw std::invalid_argument("expected a rational string or integer, got " + j.dump());
}

inline Json to_json(const std::vector<Rational>& v) {
    Json arr = Json::array();
    for (const auto& r : v) arr.push_back(to_json(r));
    return arr;
}

inline Json to_json(const Poly& p) {
    return to_json(std::vector<Rational>(p.coeffs().begin(), p.coeffs().end()));
}

/// Raw coefficient list; trailing zeros are kept (they fix a formal degree).
inline std::vector<Rational> rationals_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a JSON array of rationals");
    std::vector<Rational> out;
    for (const auto& e : j) out.push_back(rational_from_json(e));
    return out;
}

inline Poly poly_from_json(const Json& j) { return Poly(rationals_from_json(j)); }

inline Json to_json(const SimplicialComplex& k) {
    Json facets = Json::array();
    for (const auto& f : k.facets()) facets.push_back(f);
    return Json{{"facets", facets}};
}

inline SimplicialComplex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("facets") || !j.at("facets").is_array())
        throw std::invalid_argument("complex must be an object with a \"facets\" array");
    std::vector<Face> facets;
    for (const auto& f : j.at("facets")) {
        if (!f.is_array()) throw std::invalid_argument("each facet must be an array of integers");
        Face face;
        for (const auto& v : f) {
            if (!v.is_number_integer()) throw std::invalid_argument("vertex labels must be integers");
            face.push_back(v.get<int>());
        }
        facets.push_back(std::move(face));
    }
    return SimplicialComplex(std::move(facets));
}

}  // namespace gammacheb
