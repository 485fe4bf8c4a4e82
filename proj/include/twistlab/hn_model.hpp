#pragma once

#include "twistlab/curves.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/linalg.hpp"
#include "twistlab/numeric.hpp"
#include "twistlab/symplectic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twistlab {

struct CrossingCircle {
    Curve curve;
    long long order = 0; // declared generalized-crossing order; nonzero
};

/// The pair (Sigma, g) describing a knot complement as an H-body glued to a
/// handlebody: the surface is the double of the fiber (genus 2k'), the map
/// is carried on homology, and the marked curves record the preferred knot
/// position and the available crossing circles.
///
/// Models produced from a fibration are block-diagonal: the map acts as the
/// fiber monodromy on the top-half classes and fixes the bottom-half
/// classes pointwise. Composing crossing changes leaves the fibration form;
/// such models keep only the symplectic invariant.
struct HNModel {
    int fiber_genus = 0;
    int surface_genus = 0; // always 2 * fiber_genus
    SpElement model_map;
    TwistWord model_word;
    Curve knot;
    std::vector<CrossingCircle> crossing_circles;
    std::vector<std::string> provenance;

    const CrossingCircle* find_circle(const std::string& name) const {
        for (const auto& cc : crossing_circles)
            if (cc.curve.name == name) return &cc;
        return nullptr;
    }
};

/// True iff the map fixes every bottom-half basis class (the classes coming
/// from the untouched copy of the fiber).
inline bool fixes_bottom_half(const SpElement& g) {
    if (g.genus % 2 != 0) return false;
    const int k = g.genus / 2;
    for (int j = 2 * k; j < 4 * k; ++j)
        for (int i = 0; i < 4 * k; ++i)
            if (g.m.at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

/// Extends a fiber monodromy to the doubled surface: the result acts as h
/// on the top-half classes and as the identity on the bottom-half classes.
inline SpElement double_monodromy(const SpElement& h) {
    if (!is_symplectic(h.m, h.genus))
        throw precondition_error("monodromy must act symplectically on the fiber");
    const int k = h.genus;
    Mat out = Mat::identity(4 * k);
    for (int i = 0; i < 2 * k; ++i)
        for (int j = 0; j < 2 * k; ++j) out.at(i, j) = h.m.at(i, j);
    return SpElement(2 * k, std::move(out));
}

/// A generalized crossing change of order q along the crossing circle L:
/// the model map is composed on the right with the (-q)-th transvection
/// along L's class, matching the passage to 1/(-q) surgery on L.
inline HNModel apply_crossing_change(const HNModel& m, const Curve& L, long long q) {
    if (q == 0) throw precondition_error("a crossing change has nonzero order");
    const CrossingCircle* cc = m.find_circle(L.name);
    if (!cc)
        throw precondition_error("curve " + L.name + " is not a crossing circle of this model");
    if (!(cc->curve.homology == L.homology))
        throw data_error("crossing circle " + L.name + " disagrees with the model's copy");
    HNModel out = m;
    out.model_map = mul(m.model_map, transvection(L.homology, Int(-q)));
    out.model_word.letters.push_back(TwistLetter{L.name, -q});
    out.model_map.word = out.model_word;
    out.provenance.push_back("crossing change of order " + std::to_string(q) + " along " + L.name +
                             " = 1/(" + std::to_string(-q) + ") surgery on " + L.name +
                             "; map composed with twist exponent " + std::to_string(-q));
    return out;
}

enum class ConjugacyVerdict { DistinctCertified, PossiblyConjugate };

inline const char* to_string(ConjugacyVerdict v) {
    return v == ConjugacyVerdict::DistinctCertified ? "DistinctCertified" : "PossiblyConjugate";
}

struct ConjugacyReport {
    ConjugacyVerdict verdict = ConjugacyVerdict::PossiblyConjugate;
    std::vector<Int> charpoly1, charpoly2;
    Int trace1, trace2;
    Int det_minus_id1, det_minus_id2;
};

/// Compares conjugacy invariants computable exactly on homology:
/// characteristic polynomial, trace, det(h - I). Differing invariants
/// certify the maps are non-conjugate; equal invariants never claim
/// conjugacy.
inline ConjugacyReport monodromy_conjugacy_filter(const SpElement& h1, const SpElement& h2) {
    if (h1.genus != h2.genus) throw dimension_error("conjugacy filter needs equal rank");
    ConjugacyReport r;
    r.charpoly1 = charpoly(h1.m);
    r.charpoly2 = charpoly(h2.m);
    r.trace1 = trace(h1.m);
    r.trace2 = trace(h2.m);
    r.det_minus_id1 = eval_poly(r.charpoly1, 1);
    r.det_minus_id2 = eval_poly(r.charpoly2, 1);
    const bool same = r.charpoly1 == r.charpoly2 && r.trace1 == r.trace2 &&
                      r.det_minus_id1 == r.det_minus_id2;
    r.verdict = same ? ConjugacyVerdict::PossiblyConjugate : ConjugacyVerdict::DistinctCertified;
    return r;
}

enum class EquivalenceKind { PreservingWitness, FlipWitness, NoneFound };

inline const char* to_string(EquivalenceKind k) {
    switch (k) {
        case EquivalenceKind::PreservingWitness: return "PreservingWitness";
        case EquivalenceKind::FlipWitness: return "FlipWitness";
        case EquivalenceKind::NoneFound: return "NoneFound";
    }
    return "?";
}

struct EquivalenceWitness {
    EquivalenceKind kind = EquivalenceKind::NoneFound;
    SpElement f1, f2;
    std::string f1_word, f2_word; // letters over the meridian transvections
};

namespace detail {

inline std::string describe_gen_word(const std::vector<int>& word, std::size_t gen_count) {
    if (word.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ' ';
        const int g = word[i];
        const std::size_t idx = static_cast<std::size_t>(g) / 2;
        out += "T[m" + std::to_string(idx + 1) + "]";
        if (g % 2) out += "'";
        (void)gen_count;
    }
    return out;
}

} // namespace detail

/// Bounded search for handlebody-side factors relating two splitting maps:
/// seeks F1 g2 F2 = g1 (side-preserving) or F1 (i^{-1} g2^{-1} i) F2 = g1
/// (side-swapping), with F1, F2 products of transvections along the
/// meridian classes. Such transvections extend over the handlebody, so
/// every witness passes the handlebody subgroup check by construction.
///
/// Enumeration is deterministic: total combined word length ascending, then
/// F1 length ascending, then lexicographic in the generator order (meridian
/// order as given, positive twist before negative). The budget bounds the
/// combined length of the two words; NoneFound reports exhaustion, not a
/// negative.
inline EquivalenceWitness splitting_equivalence_filter(const SpElement& g1, const SpElement& g2,
                                                       const std::vector<HomologyClass>& lagrangian,
                                                       int budget) {
    if (g1.genus != g2.genus) throw dimension_error("splitting filter needs equal rank");
    if (budget < 0) throw domain_error("budget must be nonnegative");
    const int genus = g1.genus;
    for (const auto& v : lagrangian) {
        if (v.genus != genus) throw precondition_error("meridian class genus mismatch");
        for (const auto& w : lagrangian)
            if (intersection_pairing(v, w) != 0)
                throw precondition_error("meridian classes must pairwise have zero pairing");
    }
    {
        std::vector<std::vector<Int>> span;
        for (const auto& v : lagrangian) span.push_back(v.coords);
        if (rank_of(span) != genus)
            throw precondition_error("meridian classes must span half of homology");
    }

    std::vector<SpElement> gens;
    for (const auto& v : lagrangian) {
        gens.push_back(transvection(v, 1));
        gens.push_back(transvection(v, -1));
    }
    const SpElement flipped = [&] {
        const Mat i = involution(genus);
        return SpElement(genus, mul(mul(inverse(i), inverse(g2.m)), i));
    }();

    // Words of a fixed length in lexicographic order, as generator indices.
    auto for_each_word = [&](int len, auto&& visit) {
        std::vector<int> word(static_cast<std::size_t>(len), 0);
        while (true) {
            if (!visit(word)) return false;
            int pos = len - 1;
            while (pos >= 0 && word[pos] == static_cast<int>(gens.size()) - 1) {
                word[pos] = 0;
                --pos;
            }
            if (pos < 0) return true;
            ++word[pos];
        }
    };
    auto eval_word = [&](const std::vector<int>& word) {
        SpElement acc = SpElement::identity(genus);
        for (int g : word) acc = mul(acc, gens[static_cast<std::size_t>(g)]);
        return acc;
    };

    EquivalenceWitness found;
    for (int total = 0; total <= budget && found.kind == EquivalenceKind::NoneFound; ++total) {
        if (gens.empty() && total > 0) break; // no words of positive length exist
        for (int len1 = 0; len1 <= total && found.kind == EquivalenceKind::NoneFound; ++len1) {
            const int len2 = total - len1;
            for_each_word(len1, [&](const std::vector<int>& w1) {
                const SpElement f1 = eval_word(w1);
                const SpElement f1g2 = mul(f1, g2);
                const SpElement f1flip = mul(f1, flipped);
                return for_each_word(len2, [&](const std::vector<int>& w2) {
                    const SpElement f2 = eval_word(w2);
                    if (mul(f1g2, f2) == g1) {
                        found = {EquivalenceKind::PreservingWitness, f1, f2,
                                 detail::describe_gen_word(w1, gens.size()),
                                 detail::describe_gen_word(w2, gens.size())};
                        return false;
                    }
                    if (mul(f1flip, f2) == g1) {
                        found = {EquivalenceKind::FlipWitness, f1, f2,
                                 detail::describe_gen_word(w1, gens.size()),
                                 detail::describe_gen_word(w2, gens.size())};
                        return false;
                    }
                    return true;
                });
            });
        }
    }
    return found;
}

} // namespace twistlab
