#pragma once

#include "twistlab/errors.hpp"

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace twistlab {

/// A knot table row: classical genus, fiberedness, and an optional pointer
/// into the scenario catalog.
struct KnotRecord {
    std::string name;
    long long genus = 0;
    bool fibered = false;
    std::optional<std::string> scenario_ref;

    friend bool operator==(const KnotRecord&, const KnotRecord&) = default;
};

/// The claim that `source` admits a projection with n generalized crossings
/// any nonempty subset of which, when changed, yields `target`.
struct AdjacencyClaim {
    KnotRecord source;
    KnotRecord target;
    long long n = 1;

    AdjacencyClaim(KnotRecord s, KnotRecord t, long long n_) : source(std::move(s)), target(std::move(t)), n(n_) {
        if (n < 1) throw domain_error("adjacency requires n >= 1");
    }
};

/// The minimal genus of a Seifert surface avoiding the crossing link:
/// exactly max(g(K), g(K')).
inline long long genus_bound(long long g_K, long long g_Kprime) {
    if (g_K < 0 || g_Kprime < 0) throw domain_error("knot genera are nonnegative");
    return g_K > g_Kprime ? g_K : g_Kprime;
}

enum class Dichotomy { MustBeIsotopic, GenusGreaterHolds, Inconsistent, NotApplicable };

inline const char* to_string(Dichotomy d) {
    switch (d) {
        case Dichotomy::MustBeIsotopic: return "MustBeIsotopic";
        case Dichotomy::GenusGreaterHolds: return "GenusGreaterHolds";
        case Dichotomy::Inconsistent: return "Inconsistent";
        case Dichotomy::NotApplicable: return "NotApplicable";
    }
    return "?";
}

/// For n > 1 adjacency to a fibered target, either the source's genus is
/// strictly larger or the knots coincide; a claim violating both is
/// inconsistent. Knot identity is by table name; the library does not
/// decide isotopy.
inline Dichotomy fibered_dichotomy(const AdjacencyClaim& c) {
    if (!c.target.fibered || c.n <= 1) return Dichotomy::NotApplicable;
    if (c.source.genus > c.target.genus) return Dichotomy::GenusGreaterHolds;
    if (c.source.name == c.target.name) return Dichotomy::MustBeIsotopic;
    return Dichotomy::Inconsistent;
}

/// n-adjacency implies m-adjacency for every 0 < m <= n.
inline std::vector<AdjacencyClaim> monotonicity_closure(const AdjacencyClaim& c) {
    std::vector<AdjacencyClaim> out;
    out.reserve(static_cast<std::size_t>(c.n));
    for (long long m = 1; m <= c.n; ++m) out.emplace_back(c.source, c.target, m);
    return out;
}

/// The shipped table: the unknot and the two genus-one fibered knots, tied
/// to their catalog scenarios. Genus values are the classical ones.
inline std::vector<KnotRecord> builtin_knot_table() {
    return {
        KnotRecord{"unknot", 0, true, "unknot"},
        KnotRecord{"trefoil", 1, true, "trefoil"},
        KnotRecord{"figure8", 1, true, "figure8"},
    };
}

inline void validate_knot_table(const std::vector<KnotRecord>& table, bool builtin) {
    std::set<std::string> seen;
    for (const KnotRecord& k : table) {
        if (k.name.empty()) throw data_error("knot record with empty name");
        if (!seen.insert(k.name).second) throw data_error("duplicate knot record: " + k.name);
        if (k.genus < 0) throw data_error("knot " + k.name + " has negative genus");
        if (builtin && ((k.genus == 0) != (k.name == "unknot")))
            throw data_error("built-in table: genus 0 iff unknot");
    }
}

inline const KnotRecord& table_lookup(const std::vector<KnotRecord>& table,
                                      const std::string& name) {
    for (const KnotRecord& k : table)
        if (k.name == name) return k;
    throw data_error("knot table has no entry named " + name);
}

/// Knot table file: a JSON list of {name, genus, fibered, scenario_ref?}.
/// Unknown fields rejected.
inline std::vector<KnotRecord> knot_table_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("knot table JSON: ") + e.what());
    }
    if (!j.is_array()) throw parse_error("knot table: expected a JSON list");
    std::vector<KnotRecord> out;
    for (const auto& kj : j) {
        if (!kj.is_object()) throw parse_error("knot table entry: expected an object");
        for (auto it = kj.begin(); it != kj.end(); ++it) {
            const std::string& key = it.key();
            if (key != "name" && key != "genus" && key != "fibered" && key != "scenario_ref")
                throw parse_error("knot table entry: unknown field \"" + key + "\"");
        }
        for (const char* req : {"name", "genus", "fibered"})
            if (!kj.contains(req))
                throw parse_error(std::string("knot table entry: missing field \"") + req + "\"");
        KnotRecord k;
        if (!kj.at("name").is_string()) throw parse_error("knot name must be a string");
        k.name = kj.at("name").get<std::string>();
        if (!kj.at("genus").is_number_integer()) throw parse_error("knot genus must be an integer");
        k.genus = kj.at("genus").get<long long>();
        if (!kj.at("fibered").is_boolean()) throw parse_error("knot fibered must be a boolean");
        k.fibered = kj.at("fibered").get<bool>();
        if (kj.contains("scenario_ref")) {
            if (!kj.at("scenario_ref").is_string())
                throw parse_error("knot scenario_ref must be a string");
            k.scenario_ref = kj.at("scenario_ref").get<std::string>();
        }
        out.push_back(std::move(k));
    }
    validate_knot_table(out, false);
    return out;
}

inline nlohmann::json knot_table_to_json(const std::vector<KnotRecord>& table) {
    nlohmann::json out = nlohmann::json::array();
    for (const KnotRecord& k : table) {
        nlohmann::json kj;
        kj["name"] = k.name;
        kj["genus"] = k.genus;
        kj["fibered"] = k.fibered;
        if (k.scenario_ref) kj["scenario_ref"] = *k.scenario_ref;
        out.push_back(kj);
    }
    return out;
}

} // namespace twistlab
