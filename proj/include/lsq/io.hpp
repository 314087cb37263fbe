#pragma once

/**
 * JSON serialization. Every document carries "schema": 1.
 *
 * Ideal files:  {"variables": ["a", ...], "generators": ["ab", ...]}
 * Relations:    {"b": 1, "B": [2, 3]}
 * Faces:        sorted vertex lists; pair vertices as [i, j], single vertices as [i]
 */

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lsq/betti.hpp"
#include "lsq/complex.hpp"
#include "lsq/error.hpp"
#include "lsq/monomial.hpp"
#include "lsq/relation.hpp"

namespace lsq {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline json document() { return json{{"schema", kSchemaVersion}}; }

inline json to_json(const MonomialIdeal& ideal)
{
    json j = document();
    j["variables"] = ideal.ring()->names();
    j["generators"] = json::array();
    for (const auto& g : ideal.generators()) j["generators"].push_back(to_string(g));
    return j;
}

inline MonomialIdeal ideal_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("variables") || !j.contains("generators")) {
        throw InputError("ideal JSON needs \"variables\" and \"generators\" arrays");
    }
    try {
        return parse_ideal(j.at("variables").get<std::vector<std::string>>(),
                           j.at("generators").get<std::vector<std::string>>());
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed ideal JSON: ") + e.what());
    }
}

inline json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

inline MonomialIdeal read_ideal(const std::string& path) { return ideal_from_json(read_json_file(path)); }

inline json to_json(const DivRel& r) { return json{{"b", r.b}, {"B", r.B.members()}}; }

inline json to_json(const std::vector<DivRel>& rs)
{
    json out = json::array();
    for (const auto& r : rs) out.push_back(to_json(r));
    return out;
}

inline DivRel relation_from_json(const json& j)
{
    try {
        return DivRel{j.at("b").get<unsigned>(), IndexSet::of(j.at("B").get<std::vector<unsigned>>())};
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed relation JSON: ") + e.what());
    }
}

inline json vertex_json(Vertex v) { return v.is_pair() ? json{v.i, v.j} : json{v.i}; }

inline json face_json(const SimplicialComplex& c, Face f)
{
    json out = json::array();
    for (auto v : c.vertices_of(f)) out.push_back(vertex_json(v));
    return out;
}

inline json faces_json(const SimplicialComplex& c, const std::vector<Face>& fs)
{
    json out = json::array();
    for (auto f : fs) out.push_back(face_json(c, f));
    return out;
}

/// "{11,12,23}" style label used in text and DOT output.
inline std::string face_label(const SimplicialComplex& c, Face f)
{
    std::string out = "{";
    bool first = true;
    for (auto v : c.vertices_of(f)) {
        if (!first) out += ",";
        out += to_string(v);
        first = false;
    }
    return out + "}";
}

inline json to_json(const BettiTable& t)
{
    json j = document();
    j["field"] = to_string(t.field);
    j["totals"] = t.totals();
    j["graded"] = json::array();
    for (const auto& e : t.entries) {
        j["graded"].push_back({{"i", e.degree}, {"multidegree", to_string(e.multidegree)}, {"value", e.value}});
    }
    return j;
}

inline std::string betti_csv(const BettiTable& t, bool graded)
{
    std::ostringstream out;
    if (graded) {
        out << "i,multidegree,value\n";
        for (const auto& e : t.entries) out << e.degree << "," << to_string(e.multidegree) << "," << e.value << "\n";
    } else {
        out << "i,beta\n";
        auto tot = t.totals();
        for (std::size_t i = 0; i < tot.size(); ++i) out << i << "," << tot[i] << "\n";
    }
    return out.str();
}

} // namespace lsq
