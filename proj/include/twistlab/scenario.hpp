#pragma once

#include "twistlab/curves.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/hn_model.hpp"
#include "twistlab/symplectic.hpp"
#include "twistlab/words.hpp"

#include <string>
#include <vector>

namespace twistlab {

/// A self-contained worked setting: a meridian system on a surface, the
/// intersection atlas of its named curves, and the splitting model built on
/// top of them. Everything downstream (disc tests, crossing changes, the
/// nugatory pipeline, the CLI) consumes scenarios.
struct Scenario {
    std::string name;
    int genus = 0; // genus of the splitting surface; twice the fiber genus
    Alphabet alphabet;
    Atlas atlas;
    HNModel model;
    std::string notes;

    const Curve& curve(const std::string& n) const { return atlas.at(n); }

    /// Classes of the meridian system curves, in alphabet order.
    std::vector<HomologyClass> meridian_classes() const {
        std::vector<HomologyClass> out;
        out.reserve(alphabet.size());
        for (const auto& n : alphabet.names) out.push_back(atlas.at(n).homology);
        return out;
    }
};

/// Full structural validation of a scenario. Checks the atlas invariants,
/// the meridian system (disjoint curves spanning an isotropic half of
/// homology), the model map (symplectic, fibration form, produced by its
/// twist word), the preferred position of the knot against the system, and
/// the crossing-circle data.
inline void validate_scenario(const Scenario& s) {
    if (s.genus < 0) throw data_error("scenario genus must be nonnegative");
    if (s.genus % 2 != 0)
        throw data_error("scenario " + s.name + ": splitting surface genus must be even");
    validate_atlas(s.atlas);

    for (const Curve& c : s.atlas.curves) {
        if (c.homology.genus != s.genus)
            throw data_error("curve " + c.name + " carries a class of the wrong genus");
        if (!word_over(c.system_word, s.alphabet))
            throw data_error("curve " + c.name + " carries a word outside the meridian system");
        // The system word records one letter per crossing with each meridian,
        // signed by the fixed convention: its counts match the atlas.
        for (const std::string& xn : s.alphabet.names) {
            if (letter_count(c.system_word, xn) != s.atlas.geom_of(c.name, xn))
                throw data_error("curve " + c.name + ": word letter count for " + xn +
                                 " disagrees with the geometric intersection number");
            if (exponent_sum(c.system_word, xn) != s.atlas.alg_of(c.name, xn))
                throw data_error("curve " + c.name + ": word exponent sum for " + xn +
                                 " disagrees with the algebraic intersection number");
        }
    }

    // Meridian system: mutually disjoint curves whose classes span an
    // isotropic half of homology (the kernel of the handlebody inclusion).
    std::vector<std::vector<Int>> span;
    for (const std::string& xn : s.alphabet.names) {
        if (!s.atlas.index(xn)) throw data_error("system curve " + xn + " missing from the atlas");
        for (const std::string& yn : s.alphabet.names)
            if (xn != yn && s.atlas.geom_of(xn, yn) != 0)
                throw data_error("system curves must be mutually disjoint: " + xn + ", " + yn);
        span.push_back(s.atlas.at(xn).homology.coords);
    }
    if (rank_of(span) != s.genus)
        throw data_error("scenario " + s.name + ": meridian classes must span rank " +
                         std::to_string(s.genus));

    const HNModel& m = s.model;
    if (m.surface_genus != s.genus || m.fiber_genus * 2 != m.surface_genus)
        throw data_error("scenario " + s.name + ": model genera are inconsistent");
    if (!s.atlas.index(m.knot.name)) throw data_error("knot curve missing from the atlas");
    if (!is_symplectic(m.model_map.m, s.genus))
        throw data_error("scenario " + s.name + ": model map is not symplectic");
    if (!fixes_bottom_half(m.model_map))
        throw data_error("scenario " + s.name + ": model map must fix the bottom-half classes");
    {
        const SpElement from_word = eval(m.model_word, [&](const std::string& n) {
            return s.atlas.at(n).homology;
        });
        if (!(from_word == m.model_map))
            throw data_error("scenario " + s.name + ": model map disagrees with its twist word");
    }

    // Preferred position: the knot meets every meridian twice, algebraically
    // zero (so the system is admissible for it), and is null-homologous.
    if (!m.knot.homology.is_zero())
        throw data_error("scenario " + s.name + ": the preferred knot curve is null-homologous");
    for (const std::string& xn : s.alphabet.names) {
        if (s.atlas.geom_of(xn, m.knot.name) != 2 || s.atlas.alg_of(xn, m.knot.name) != 0)
            throw data_error("scenario " + s.name + ": knot must meet meridian " + xn +
                             " at exactly two points with zero algebraic intersection");
    }

    for (const CrossingCircle& cc : m.crossing_circles) {
        if (cc.order == 0) throw data_error("crossing circle " + cc.curve.name + " has order 0");
        if (!s.atlas.index(cc.curve.name))
            throw data_error("crossing circle " + cc.curve.name + " missing from the atlas");
        if (s.atlas.geom_of(cc.curve.name, m.knot.name) != 2 ||
            s.atlas.alg_of(cc.curve.name, m.knot.name) != 0)
            throw data_error("crossing circle " + cc.curve.name +
                             " must meet the knot at exactly two points, algebraically zero");
    }
}

} // namespace twistlab
