#pragma once

#include "twistlab/scenario.hpp"

#include <json.hpp>

#include <limits>
#include <set>
#include <string>
#include <vector>

namespace twistlab {

namespace detail {

using nlohmann::json;

inline void require_keys(const json& j, const std::set<std::string>& required,
                         const std::set<std::string>& optional, const std::string& where) {
    if (!j.is_object()) throw parse_error(where + ": expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!required.count(it.key()) && !optional.count(it.key()))
            throw parse_error(where + ": unknown field \"" + it.key() + "\"");
    }
    for (const auto& k : required)
        if (!j.contains(k)) throw parse_error(where + ": missing field \"" + k + "\"");
}

inline long long get_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw parse_error(where + ": expected a decimal integer");
    return j.get<long long>();
}

inline std::string get_str(const json& j, const std::string& where) {
    if (!j.is_string()) throw parse_error(where + ": expected a string");
    return j.get<std::string>();
}

inline std::vector<Int> get_int_vector(const json& j, const std::string& where) {
    if (!j.is_array()) throw parse_error(where + ": expected an array of integers");
    std::vector<Int> out;
    out.reserve(j.size());
    for (const auto& v : j) out.emplace_back(get_int(v, where));
    return out;
}

inline std::vector<std::vector<Int>> get_int_matrix(const json& j, const std::string& where) {
    if (!j.is_array()) throw parse_error(where + ": expected a row-major array of arrays");
    std::vector<std::vector<Int>> out;
    out.reserve(j.size());
    for (const auto& row : j) out.push_back(get_int_vector(row, where));
    return out;
}

inline long long to_ll(const Int& v, const std::string& where) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw data_error(where + ": value does not fit a decimal integer field");
    return v.convert_to<long long>();
}

} // namespace detail

/// Parses a scenario from its JSON exchange form. Unknown fields are
/// rejected; every integer must be a decimal JSON integer. The result is
/// fully validated before being returned.
inline Scenario scenario_from_json(const nlohmann::json& j) {
    using detail::get_int;
    using detail::get_int_matrix;
    using detail::get_int_vector;
    using detail::get_str;
    using detail::require_keys;

    require_keys(j,
                 {"name", "genus", "alphabet", "curves", "geom", "alg", "monodromy_word", "knot",
                  "crossing_circles"},
                 {}, "scenario");

    Scenario s;
    s.name = get_str(j.at("name"), "scenario.name");
    const long long genus = get_int(j.at("genus"), "scenario.genus");
    if (genus < 0 || genus > 64) throw parse_error("scenario.genus out of range");
    s.genus = static_cast<int>(genus);

    std::vector<std::string> names;
    if (!j.at("alphabet").is_array()) throw parse_error("scenario.alphabet: expected an array");
    for (const auto& n : j.at("alphabet")) names.push_back(get_str(n, "scenario.alphabet"));
    s.alphabet = Alphabet(std::move(names));

    if (!j.at("curves").is_array()) throw parse_error("scenario.curves: expected an array");
    for (const auto& cj : j.at("curves")) {
        require_keys(cj, {"name", "system_word", "homology", "separating"}, {"pi1_word"},
                     "scenario.curves[]");
        Curve c;
        c.name = get_str(cj.at("name"), "curve.name");
        c.system_word = parse_word(get_str(cj.at("system_word"), "curve.system_word"));
        if (cj.contains("pi1_word"))
            c.pi1_word = parse_word(get_str(cj.at("pi1_word"), "curve.pi1_word"));
        std::vector<Int> coords = get_int_vector(cj.at("homology"), "curve.homology");
        if (coords.size() != static_cast<std::size_t>(2 * s.genus))
            throw parse_error("curve " + c.name + ": homology vector must have length " +
                              std::to_string(2 * s.genus));
        c.homology = HomologyClass(s.genus, std::move(coords));
        if (!cj.at("separating").is_boolean())
            throw parse_error("curve " + c.name + ": separating must be a boolean");
        c.separating = cj.at("separating").get<bool>();
        s.atlas.curves.push_back(std::move(c));
    }

    s.atlas.geom = get_int_matrix(j.at("geom"), "scenario.geom");
    s.atlas.alg = get_int_matrix(j.at("alg"), "scenario.alg");

    TwistWord word;
    word.genus = s.genus;
    if (!j.at("monodromy_word").is_array())
        throw parse_error("scenario.monodromy_word: expected an array");
    for (const auto& lj : j.at("monodromy_word")) {
        require_keys(lj, {"curve", "exp"}, {}, "monodromy_word[]");
        TwistLetter l;
        l.curve = get_str(lj.at("curve"), "monodromy_word.curve");
        l.exp = get_int(lj.at("exp"), "monodromy_word.exp");
        if (l.exp == 0) throw parse_error("monodromy_word letter has exponent 0");
        word.letters.push_back(std::move(l));
    }

    HNModel m;
    m.surface_genus = s.genus;
    m.fiber_genus = s.genus / 2;
    m.model_word = word;
    const std::string knot_name = get_str(j.at("knot"), "scenario.knot");
    if (!s.atlas.index(knot_name)) throw parse_error("scenario.knot names an unknown curve");
    m.knot = s.atlas.at(knot_name);

    if (!j.at("crossing_circles").is_array())
        throw parse_error("scenario.crossing_circles: expected an array");
    for (const auto& cj : j.at("crossing_circles")) {
        require_keys(cj, {"curve", "order"}, {}, "crossing_circles[]");
        CrossingCircle cc;
        const std::string cn = get_str(cj.at("curve"), "crossing_circles.curve");
        if (!s.atlas.index(cn)) throw parse_error("crossing circle names an unknown curve: " + cn);
        cc.curve = s.atlas.at(cn);
        cc.order = get_int(cj.at("order"), "crossing_circles.order");
        if (cc.order == 0) throw parse_error("crossing circle " + cn + " has order 0");
        m.crossing_circles.push_back(std::move(cc));
    }

    m.model_map = eval(m.model_word, [&](const std::string& n) -> HomologyClass {
        if (!s.atlas.index(n)) throw parse_error("monodromy word names an unknown curve: " + n);
        return s.atlas.at(n).homology;
    });
    s.model = std::move(m);

    validate_scenario(s);
    return s;
}

inline Scenario scenario_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("scenario JSON: ") + e.what());
    }
    return scenario_from_json(j);
}

/// Serializes a scenario back to its exchange form. Round-trips with
/// scenario_from_json (the in-memory notes field is not part of the format).
inline nlohmann::json scenario_to_json(const Scenario& s) {
    using detail::to_ll;
    nlohmann::json j;
    j["name"] = s.name;
    j["genus"] = s.genus;
    j["alphabet"] = s.alphabet.names;
    nlohmann::json curves = nlohmann::json::array();
    for (const Curve& c : s.atlas.curves) {
        nlohmann::json cj;
        cj["name"] = c.name;
        cj["system_word"] = print_word(c.system_word);
        if (c.pi1_word) cj["pi1_word"] = print_word(*c.pi1_word);
        nlohmann::json h = nlohmann::json::array();
        for (const Int& v : c.homology.coords) h.push_back(to_ll(v, "homology"));
        cj["homology"] = h;
        cj["separating"] = c.separating;
        curves.push_back(cj);
    }
    j["curves"] = curves;
    auto emit_matrix = [&](const std::vector<std::vector<Int>>& m) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : m) {
            nlohmann::json row = nlohmann::json::array();
            for (const Int& v : r) row.push_back(to_ll(v, "atlas matrix"));
            rows.push_back(row);
        }
        return rows;
    };
    j["geom"] = emit_matrix(s.atlas.geom);
    j["alg"] = emit_matrix(s.atlas.alg);
    nlohmann::json word = nlohmann::json::array();
    for (const TwistLetter& l : s.model.model_word.letters)
        word.push_back({{"curve", l.curve}, {"exp", l.exp}});
    j["monodromy_word"] = word;
    j["knot"] = s.model.knot.name;
    nlohmann::json circles = nlohmann::json::array();
    for (const CrossingCircle& cc : s.model.crossing_circles)
        circles.push_back({{"curve", cc.curve.name}, {"order", cc.order}});
    j["crossing_circles"] = circles;
    return j;
}

} // namespace twistlab
