#pragma once

#include "twistlab/curves.hpp"
#include "twistlab/hn_model.hpp"
#include "twistlab/obstruction.hpp"
#include "twistlab/scenario.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twistlab {

enum class NugatoryKind { Nugatory, Obstructed, Unknown };

inline const char* to_string(NugatoryKind k) {
    switch (k) {
        case NugatoryKind::Nugatory: return "Nugatory";
        case NugatoryKind::Obstructed: return "Obstructed";
        case NugatoryKind::Unknown: return "Unknown";
    }
    return "?";
}

struct TraceStep {
    std::string step;
    std::string note;
};

/// Result of the crossing-change analyzer. A Nugatory verdict always
/// carries a machine-checkable witness (a trivial curve word or a
/// disc-bounding word); an Obstructed verdict carries the commutator
/// presentation found and the bound computation that contradicts it.
struct NugatoryReport {
    NugatoryKind kind = NugatoryKind::Unknown;
    std::string circle;
    long long order = 0;
    int budget = 0;

    std::string witness_kind;   // "trivial-word" or "disc-bound" for Nugatory
    std::string witness_curve;  // curve carrying the witness word
    CyclicWord witness_word;

    std::optional<SpElement> conjugator; // H with H g H^{-1} = g T, for Obstructed
    std::string conjugator_word;
    std::optional<ObstructionVerdict> obstruction;

    std::vector<TraceStep> trace;
};

namespace detail {

/// Deterministic bounded search for H with H g = (g T) H over words in the
/// transvections along the scenario's nonzero atlas classes, in length-lex
/// order (atlas order, positive twist before negative).
inline std::optional<std::pair<SpElement, std::string>> conjugator_search(const Scenario& s,
                                                                          const SpElement& target,
                                                                          int budget,
                                                                          std::vector<TraceStep>& trace) {
    const SpElement& g = s.model.model_map;
    std::vector<SpElement> gens;
    std::vector<std::string> gen_names;
    for (const Curve& c : s.atlas.curves) {
        if (c.homology.is_zero()) continue;
        gens.push_back(transvection(c.homology, 1));
        gen_names.push_back("T[" + c.name + "]");
        gens.push_back(transvection(c.homology, -1));
        gen_names.push_back("T[" + c.name + "]'");
    }
    trace.push_back({"case-a-search", "searching words of length <= " + std::to_string(budget) +
                                          " over " + std::to_string(gens.size()) +
                                          " twist generators"});
    std::vector<int> word;
    auto describe = [&](const std::vector<int>& w) {
        std::string out;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) out += ' ';
            out += gen_names[static_cast<std::size_t>(w[i])];
        }
        return out.empty() ? std::string("1") : out;
    };
    for (int len = 1; len <= budget; ++len) {
        if (gens.empty()) break;
        word.assign(static_cast<std::size_t>(len), 0);
        while (true) {
            SpElement h = SpElement::identity(s.genus);
            for (int gidx : word) h = mul(h, gens[static_cast<std::size_t>(gidx)]);
            if (mul(h, g) == mul(target, h))
                return std::make_pair(h, describe(word));
            int pos = len - 1;
            while (pos >= 0 && word[pos] == static_cast<int>(gens.size()) - 1) {
                word[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++word[pos];
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Analyzes whether a generalized crossing change of order q along the
/// named crossing circle can leave the knot unchanged, at homology level.
///
/// Pipeline: (1) a null-homotopic circle (or a disc fiber) makes the
/// crossing nugatory outright; (2) if the twisted model map is conjugate to
/// the original by a bounded twist word, the twist power is a single
/// commutator and the commutator-length bound may contradict an essential
/// circle; (3) if the image of the circle under the model map bounds a
/// disc in the handlebody, the crossing is nugatory by the reduction-
/// sphere construction. Anything else is Unknown at the given budget.
/// Every verdict carries its certificate; Unknown is an explicit budget
/// exhaustion, never a negative claim.
inline NugatoryReport nugatory_analysis(const Scenario& s, const std::string& L_name, long long q,
                                        int budget) {
    if (q == 0) throw precondition_error("a crossing change has nonzero order");
    if (budget < 0) throw domain_error("budget must be nonnegative");
    const CrossingCircle* cc = s.model.find_circle(L_name);
    if (!cc) throw precondition_error(L_name + " is not a crossing circle of scenario " + s.name);
    const Curve& L = cc->curve;

    NugatoryReport r;
    r.circle = L_name;
    r.order = q;
    r.budget = budget;

    // Step 1: trivial circles. A disc fiber makes every curve on the
    // splitting sphere null-homotopic.
    if (s.model.fiber_genus == 0) {
        r.kind = NugatoryKind::Nugatory;
        r.witness_kind = "trivial-word";
        r.witness_curve = L_name;
        r.witness_word = L.pi1_word ? *L.pi1_word : CyclicWord{};
        r.trace.push_back({"trivial-circle", "fiber genus 0: the splitting surface is a sphere, "
                                             "every circle on it bounds"});
        return r;
    }
    const Essentiality ess = essentiality(L);
    if (ess == Essentiality::NullHomotopic) {
        r.kind = NugatoryKind::Nugatory;
        r.witness_kind = "trivial-word";
        r.witness_curve = L_name;
        r.witness_word = L.pi1_word ? *L.pi1_word : CyclicWord{};
        r.trace.push_back({"trivial-circle", "the circle's surface-group word reduces to 1"});
        return r;
    }
    r.trace.push_back({"essentiality", ess == Essentiality::Essential
                                           ? "circle certified essential"
                                           : "essentiality undetermined from the data"});

    // Step 2: single-commutator route. Only meaningful for a circle with a
    // nonzero class; the homology shadow of a twist along a separating
    // circle is the identity and certifies nothing.
    const SpElement& g = s.model.model_map;
    if (!L.homology.is_zero()) {
        const SpElement target = mul(g, transvection(L.homology, Int(-q)));
        if (charpoly(target.m) != charpoly(g.m)) {
            r.trace.push_back({"case-a", "conjugacy invariants of the twisted and original maps "
                                         "differ; no commutator presentation exists"});
        } else {
            auto found = detail::conjugator_search(s, target, budget, r.trace);
            if (found) {
                r.conjugator = found->first;
                r.conjugator_word = found->second;
                r.trace.push_back({"case-a", "twist power presented as a single commutator by H = " +
                                                 found->second});
                const ObstructionVerdict v = commutator_obstruction(
                    s.genus, 1, q < 0 ? -q : q, 1, true, ess == Essentiality::Essential);
                r.obstruction = v;
                if (v.kind == ObstructionKind::Contradiction) {
                    r.kind = NugatoryKind::Obstructed;
                    r.trace.push_back({"obstruction", v.detail});
                    return r;
                }
                r.trace.push_back({"obstruction", std::string(to_string(v.kind)) + ": " + v.detail});
            } else {
                r.trace.push_back({"case-a", "no conjugator found within budget"});
            }
        }
    } else {
        r.trace.push_back({"case-a", "circle is separating; its homology shadow is trivial and "
                                     "the commutator search is skipped"});
    }

    // Step 3: disc route. If the image of the circle under the model map
    // bounds a disc in the handlebody, the crossing disc and that disc form
    // a reduction sphere and the crossing is nugatory.
    const std::string image_name = "g(" + L_name + ")";
    if (auto idx = s.atlas.index(image_name)) {
        const Curve& image = s.atlas.curves[*idx];
        if (disc_bound_test(s.alphabet, image)) {
            r.kind = NugatoryKind::Nugatory;
            r.witness_kind = "disc-bound";
            r.witness_curve = image_name;
            r.witness_word = image.system_word;
            r.trace.push_back({"case-b", "the image " + image_name +
                                             " of the circle bounds a disc in the handlebody"});
            return r;
        }
        r.trace.push_back({"case-b", "the image " + image_name + " does not bound a disc"});
    } else {
        r.trace.push_back({"case-b", "no image curve " + image_name + " in the atlas"});
    }

    r.kind = NugatoryKind::Unknown;
    r.trace.push_back({"exhausted", "budget " + std::to_string(budget) + " exhausted"});
    return r;
}

/// Re-checks the certificate carried by a report against the scenario.
/// Nugatory witnesses must re-verify as trivial or disc-bounding words;
/// Obstructed verdicts must re-verify the commutator presentation and the
/// bound comparison.
inline bool verify_nugatory_report(const Scenario& s, const NugatoryReport& r) {
    switch (r.kind) {
        case NugatoryKind::Nugatory: {
            if (r.witness_kind == "trivial-word") {
                if (s.model.fiber_genus == 0) return true;
                if (s.genus < 2) return reduce(r.witness_word).empty();
                return dehn_essential_test(s.genus, r.witness_word) == WordVerdict::Trivial;
            }
            if (r.witness_kind == "disc-bound") {
                if (!word_over(r.witness_word, s.alphabet)) return false;
                return reduce(r.witness_word).empty();
            }
            return false;
        }
        case NugatoryKind::Obstructed: {
            if (!r.conjugator || !r.obstruction) return false;
            if (r.obstruction->kind != ObstructionKind::Contradiction) return false;
            const CrossingCircle* cc = s.model.find_circle(r.circle);
            if (!cc) return false;
            const SpElement target =
                mul(s.model.model_map, transvection(cc->curve.homology, Int(-r.order)));
            if (!(mul(*r.conjugator, s.model.model_map) == mul(target, *r.conjugator)))
                return false;
            return r.obstruction->bound > 1;
        }
        case NugatoryKind::Unknown: return true;
    }
    return false;
}

} // namespace twistlab
