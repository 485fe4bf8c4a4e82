#pragma once

#include "twistlab/scenario.hpp"

#include <string>
#include <vector>

namespace twistlab {

namespace detail {

inline Curve make_curve(std::string name, int genus, std::vector<long long> coords,
                        const std::string& word, const std::string& pi1, bool separating) {
    Curve c;
    c.name = std::move(name);
    std::vector<Int> cs(coords.begin(), coords.end());
    c.homology = HomologyClass(genus, std::move(cs));
    c.system_word = parse_word(word);
    if (!pi1.empty() || genus == 0) c.pi1_word = parse_word(pi1);
    c.separating = separating;
    return c;
}

inline void finish_atlas(Atlas& atlas, std::vector<std::vector<long long>> geom) {
    const std::size_t n = atlas.curves.size();
    atlas.geom.assign(n, std::vector<Int>(n, 0));
    atlas.alg.assign(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            atlas.geom[i][j] = geom[i][j];
            atlas.alg[i][j] =
                intersection_pairing(atlas.curves[i].homology, atlas.curves[j].homology);
        }
}

inline void finish_model(Scenario& s, const std::string& knot,
                         std::vector<TwistLetter> monodromy,
                         std::vector<std::pair<std::string, long long>> circles) {
    s.model.surface_genus = s.genus;
    s.model.fiber_genus = s.genus / 2;
    s.model.model_word = TwistWord(s.genus, std::move(monodromy));
    s.model.model_map = eval(s.model.model_word,
                             [&](const std::string& n) { return s.atlas.at(n).homology; });
    s.model.knot = s.atlas.at(knot);
    for (auto& [cn, order] : circles)
        s.model.crossing_circles.push_back(CrossingCircle{s.atlas.at(cn), order});
}

/// Shared construction for the two genus-one fibered knots. The surface is
/// the double of a once-punctured torus with bands a, b; the meridian
/// system x1, x2 doubles the co-core arcs of the two bands; L1, L2 are
/// parallel pushoffs of the meridians serving as crossing circles; g(L1)
/// and g(L2) are the images of the crossing circles under the model map,
/// with intersection data read off from the twisted arcs.
///
/// In the doubled basis a1,b1 (top copy), a2,b2 (bottom copy, orientation
/// absorbed so the form stays standard), the meridian classes are
/// x1 = b1+b2 and x2 = a1-a2; the knot K = (boundary) x (1/2) is
/// null-homologous with word x1 x2 x1' x2' and meets every meridian twice.
inline Scenario genus_one_fibered(const std::string& name, long long b_exp,
                                  std::vector<long long> gl2_class, const std::string& gl2_word,
                                  const std::string& gl2_pi1, std::vector<long long> gl2_geom_row,
                                  long long gl2_b1_geom,
                                  std::vector<std::pair<std::string, long long>> circles,
                                  const std::string& notes) {
    Scenario s;
    s.name = name;
    s.genus = 2;
    s.alphabet = Alphabet({"x1", "x2"});
    auto& cs = s.atlas.curves;
    cs.push_back(make_curve("x1", 2, {0, 1, 0, 1}, "", "b1 b2", false));
    cs.push_back(make_curve("x2", 2, {1, 0, -1, 0}, "", "a1 a2'", false));
    cs.push_back(make_curve("K", 2, {0, 0, 0, 0}, "x1 x2 x1' x2'", "a1 b1 a1' b1'", true));
    cs.push_back(make_curve("L1", 2, {0, 1, 0, 1}, "", "b1 b2", false));
    cs.push_back(make_curve("L2", 2, {1, 0, -1, 0}, "", "a1 a2'", false));
    cs.push_back(make_curve("g(L1)", 2, {1, 1, 0, 1}, "x1", "a1 b1 b2", false));
    cs.push_back(make_curve("g(L2)", 2, std::move(gl2_class), gl2_word, gl2_pi1, false));
    cs.push_back(make_curve("a1", 2, {1, 0, 0, 0}, "x1", "a1", false));
    cs.push_back(make_curve("b1", 2, {0, 1, 0, 0}, "x2'", "b1", false));

    // order: x1 x2 K L1 L2 g(L1) g(L2) a1 b1
    std::vector<std::vector<long long>> geom = {
        {0, 0, 2, 0, 0, 1, gl2_geom_row[0], 1, 0},
        {0, 0, 2, 0, 0, 0, gl2_geom_row[1], 0, 1},
        {2, 2, 0, 2, 2, 2, 2, 0, 0},
        {0, 0, 2, 0, 0, 1, gl2_geom_row[0], 1, 0},
        {0, 0, 2, 0, 0, 0, gl2_geom_row[1], 0, 1},
        {1, 0, 2, 1, 0, 0, 0, 1, 1},
        {gl2_geom_row[0], gl2_geom_row[1], 2, gl2_geom_row[0], gl2_geom_row[1], 0, 0, 1,
         gl2_b1_geom},
        {1, 0, 0, 1, 0, 1, 1, 0, 1},
        {0, 1, 0, 0, 1, 1, gl2_b1_geom, 1, 0}};
    finish_atlas(s.atlas, std::move(geom));
    finish_model(s, "K", {{"a1", 1}, {"b1", b_exp}}, std::move(circles));
    s.notes = notes;
    return s;
}

} // namespace detail

/// The trefoil: fiber a once-punctured torus, monodromy the composite of
/// right twists along both bands. The image arcs under the monodromy cross
/// one co-core each, giving the g(L1), g(L2) rows of the atlas.
inline Scenario trefoil_scenario() {
    return detail::genus_one_fibered(
        "trefoil", 1, {0, -1, -1, 0}, "x1' x2", "b1' a2'", {1, 1}, 2, {{"L1", 1}, {"L2", 1}},
        "Fiber genus 1; monodromy twists right-handed along both bands. Meridian classes "
        "x1 = b1+b2, x2 = a1-a2 span the kernel of the handlebody inclusion. The image "
        "g(L1) picks up one crossing with x1 (the twisted co-core re-crosses its band once); "
        "g(L2) crosses each co-core once with the signs fixed by the twist direction.");
}

/// The figure-eight: fiber a once-punctured torus, monodromy a right twist
/// along one band composed with a left twist along the other. The declared
/// crossing-circle orders are the opposite-sign order-four twists that swap
/// the two bands.
inline Scenario figure8_scenario() {
    return detail::genus_one_fibered(
        "figure8", -1, {2, 1, -1, 0}, "x1 x2'", "a1 a1 b1 a2'", {1, 1}, 2,
        {{"L1", 4}, {"L2", -4}},
        "Fiber genus 1; monodromy twists right-handed along the first band and left-handed "
        "along the second. Crossing circles L1, L2 are the band co-core doubles with "
        "declared orders +4 and -4; swapping the two changes carries one band to the other. "
        "The image curve g(L1) crosses x1 once; g(L2) crosses x1 and x2 once each and the "
        "top band curve b1 twice.");
}

/// A connected sum of two trefoils: fiber genus 2, monodromy acting as the
/// trefoil map on each summand. The crossing circle Lsum is the double of
/// the decomposing arc: it is separating, fixed by the model map, and
/// bounds a meridian disc, so its image curve has the empty word.
inline Scenario composite_scenario() {
    using detail::make_curve;
    Scenario s;
    s.name = "composite";
    s.genus = 4;
    s.alphabet = Alphabet({"x1", "x2", "x3", "x4"});
    auto& cs = s.atlas.curves;
    cs.push_back(make_curve("x1", 4, {0, 1, 0, 0, 0, 1, 0, 0}, "", "b1 b3", false));
    cs.push_back(make_curve("x2", 4, {1, 0, 0, 0, -1, 0, 0, 0}, "", "a1 a3'", false));
    cs.push_back(make_curve("x3", 4, {0, 0, 0, 1, 0, 0, 0, 1}, "", "b2 b4", false));
    cs.push_back(make_curve("x4", 4, {0, 0, 1, 0, 0, 0, -1, 0}, "", "a2 a4'", false));
    cs.push_back(make_curve("K", 4, {0, 0, 0, 0, 0, 0, 0, 0}, "x1 x2 x1' x2' x3 x4 x3' x4'",
                            "a1 b1 a1' b1' a2 b2 a2' b2'", true));
    cs.push_back(make_curve("Lsum", 4, {0, 0, 0, 0, 0, 0, 0, 0}, "", "a1 b1 a1' b1'", true));
    cs.push_back(make_curve("g(Lsum)", 4, {0, 0, 0, 0, 0, 0, 0, 0}, "", "a1 b1 a1' b1'", true));
    cs.push_back(make_curve("a1", 4, {1, 0, 0, 0, 0, 0, 0, 0}, "x1", "a1", false));
    cs.push_back(make_curve("b1", 4, {0, 1, 0, 0, 0, 0, 0, 0}, "x2'", "b1", false));
    cs.push_back(make_curve("a2", 4, {0, 0, 1, 0, 0, 0, 0, 0}, "x3", "a2", false));
    cs.push_back(make_curve("b2", 4, {0, 0, 0, 1, 0, 0, 0, 0}, "x4'", "b2", false));

    // order: x1 x2 x3 x4 K Lsum g(Lsum) a1 b1 a2 b2
    std::vector<std::vector<long long>> geom = {
        {0, 0, 0, 0, 2, 0, 0, 1, 0, 0, 0}, //
        {0, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0}, //
        {0, 0, 0, 0, 2, 0, 0, 0, 0, 1, 0}, //
        {0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 1}, //
        {2, 2, 2, 2, 0, 2, 2, 0, 0, 0, 0}, //
        {0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0}, //
        {0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0}, //
        {1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0}, //
        {0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0}, //
        {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1}, //
        {0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0}};
    detail::finish_atlas(s.atlas, std::move(geom));
    detail::finish_model(s, "K", {{"a1", 1}, {"b1", 1}, {"a2", 1}, {"b2", 1}}, {{"Lsum", 1}});
    s.notes =
        "Connected sum of two trefoils. The decomposing sphere meets the splitting surface "
        "in Lsum, which bounds a vertical meridian disc and is fixed by the model map, so "
        "g(Lsum) bounds a disc in the handlebody.";
    return s;
}

/// The unknot: fiber a disc, splitting surface a sphere. Every curve on the
/// sphere is null-homotopic, so any crossing change is nugatory.
inline Scenario unknot_scenario() {
    using detail::make_curve;
    Scenario s;
    s.name = "unknot";
    s.genus = 0;
    s.alphabet = Alphabet(std::vector<std::string>{});
    s.atlas.curves.push_back(make_curve("K", 0, {}, "", "", true));
    s.atlas.curves.push_back(make_curve("L1", 0, {}, "", "", true));
    detail::finish_atlas(s.atlas, {{0, 2}, {2, 0}});
    detail::finish_model(s, "K", {}, {{"L1", 1}});
    s.notes = "Fiber genus 0: the splitting surface is a sphere and the model map is trivial.";
    return s;
}

/// The built-in scenarios, validated on construction.
inline std::vector<Scenario> catalog() {
    std::vector<Scenario> out;
    out.push_back(unknot_scenario());
    out.push_back(trefoil_scenario());
    out.push_back(figure8_scenario());
    out.push_back(composite_scenario());
    for (const Scenario& s : out) validate_scenario(s);
    return out;
}

inline Scenario catalog_scenario(const std::string& name) {
    for (Scenario& s : catalog())
        if (s.name == name) return s;
    throw data_error("no built-in scenario named " + name);
}

} // namespace twistlab
