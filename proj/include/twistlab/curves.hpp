#pragma once

#include "twistlab/dehn.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/homology.hpp"
#include "twistlab/linalg.hpp"
#include "twistlab/symplectic.hpp"
#include "twistlab/words.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace twistlab {

/// A named simple closed curve on the boundary surface of a handlebody,
/// carried as data: its word over the meridian system, an optional word in
/// the surface group, its homology class and the separating flag.
/// Geometric intersection numbers live in the enclosing Atlas; the library
/// never computes them for arbitrary pairs.
struct Curve {
    std::string name;
    CyclicWord system_word;
    std::optional<CyclicWord> pi1_word;
    HomologyClass homology;
    bool separating = false;
};

/// Intersection data for a finite set of curves on one surface: geometric
/// numbers (symmetric, nonnegative, zero diagonal) and algebraic numbers
/// (antisymmetric, consistent with the homology pairing).
struct Atlas {
    std::vector<Curve> curves;
    std::vector<std::vector<Int>> geom;
    std::vector<std::vector<Int>> alg;

    std::optional<std::size_t> index(const std::string& name) const {
        for (std::size_t i = 0; i < curves.size(); ++i)
            if (curves[i].name == name) return i;
        return std::nullopt;
    }

    const Curve& at(const std::string& name) const {
        auto i = index(name);
        if (!i) throw data_error("atlas has no curve named " + name);
        return curves[*i];
    }

    Int geom_of(const std::string& a, const std::string& b) const {
        auto i = index(a), j = index(b);
        if (!i || !j) throw data_error("atlas lookup of unknown curve pair (" + a + ", " + b + ")");
        return geom[*i][*j];
    }

    Int alg_of(const std::string& a, const std::string& b) const {
        auto i = index(a), j = index(b);
        if (!i || !j) throw data_error("atlas lookup of unknown curve pair (" + a + ", " + b + ")");
        return alg[*i][*j];
    }
};

/// Checks every structural invariant of an atlas: matrix shapes, symmetry,
/// |alg| <= geom, parity, zero diagonal, agreement of alg with the homology
/// pairing, the separating flag against the homology class, and (when a
/// curve carries a surface-group word) agreement of its abelianization with
/// the homology class.
inline void validate_atlas(const Atlas& atlas) {
    const std::size_t n = atlas.curves.size();
    if (atlas.geom.size() != n || atlas.alg.size() != n)
        throw data_error("atlas matrices do not match the curve count");
    {
        std::set<std::string> seen;
        for (const Curve& c : atlas.curves) {
            if (c.name.empty()) throw data_error("atlas contains a curve with an empty name");
            if (!seen.insert(c.name).second)
                throw data_error("atlas contains a duplicate curve name: " + c.name);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (atlas.geom[i].size() != n || atlas.alg[i].size() != n)
            throw data_error("atlas matrices are not square");
        if (atlas.geom[i][i] != 0)
            throw data_error("geometric self-intersection must be 0: " + atlas.curves[i].name);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (atlas.geom[i][j] < 0) throw data_error("negative geometric intersection number");
            if (atlas.geom[i][j] != atlas.geom[j][i])
                throw data_error("geometric intersection matrix must be symmetric");
            if (atlas.alg[i][j] != -atlas.alg[j][i])
                throw data_error("algebraic intersection matrix must be antisymmetric");
            if (abs_int(atlas.alg[i][j]) > atlas.geom[i][j])
                throw data_error("|algebraic| exceeds geometric intersection for (" +
                                 atlas.curves[i].name + ", " + atlas.curves[j].name + ")");
            if ((atlas.alg[i][j] - atlas.geom[i][j]) % 2 != 0)
                throw data_error("algebraic and geometric intersections must agree mod 2 for (" +
                                 atlas.curves[i].name + ", " + atlas.curves[j].name + ")");
            const Int pair = intersection_pairing(atlas.curves[i].homology, atlas.curves[j].homology);
            if (atlas.alg[i][j] != pair)
                throw data_error("atlas alg entry disagrees with the homology pairing for (" +
                                 atlas.curves[i].name + ", " + atlas.curves[j].name + ")");
        }
    for (const Curve& c : atlas.curves) {
        if (c.separating != c.homology.is_zero())
            throw data_error("curve " + c.name +
                             ": a simple closed curve separates iff it is null-homologous");
        if (c.pi1_word) {
            const int g = c.homology.genus;
            const Alphabet ab = surface_alphabet(g);
            if (!word_over(*c.pi1_word, ab))
                throw data_error("curve " + c.name + ": surface-group word uses unknown letters");
            for (int i = 0; i < g; ++i) {
                const Int ea = exponent_sum(*c.pi1_word, "a" + std::to_string(i + 1));
                const Int eb = exponent_sum(*c.pi1_word, "b" + std::to_string(i + 1));
                if (ea != c.homology.coords[2 * i] || eb != c.homology.coords[2 * i + 1])
                    throw data_error("curve " + c.name +
                                     ": abelianized surface-group word disagrees with homology");
            }
        }
    }
}

/// How much the data determines about a curve's free homotopy class.
enum class Essentiality { Essential, NullHomotopic, Undetermined };

/// Decides essentiality from the available data, never guessing: a nonzero
/// homology class certifies an essential curve; a surface-group word is
/// decided by Dehn's algorithm (genus >= 2) or by homology (torus); a
/// separating curve without a word stays Undetermined on genus >= 2.
inline Essentiality essentiality(const Curve& c) {
    const int g = c.homology.genus;
    if (g == 0) return Essentiality::NullHomotopic;
    if (!c.homology.is_zero()) return Essentiality::Essential;
    if (g == 1) return Essentiality::NullHomotopic; // torus: pi_1 is homology
    if (c.pi1_word) {
        return dehn_essential_test(g, *c.pi1_word) == WordVerdict::Trivial
                   ? Essentiality::NullHomotopic
                   : Essentiality::Essential;
    }
    return Essentiality::Undetermined;
}

/// The disc criterion: y bounds a disc in the handlebody determined by the
/// system x iff its word over x reduces to the empty word.
inline bool disc_bound_test(const Alphabet& x, const Curve& y) {
    if (!word_over(y.system_word, x))
        throw data_error("curve " + y.name + " carries a word outside the given system");
    return reduce(y.system_word).empty();
}

enum class DiscBustingKind { DiscBustingUpToAtlas, NotDiscBusting, Degenerate };

inline const char* to_string(DiscBustingKind k) {
    switch (k) {
        case DiscBustingKind::DiscBustingUpToAtlas: return "DiscBustingUpToAtlas";
        case DiscBustingKind::NotDiscBusting: return "NotDiscBusting";
        case DiscBustingKind::Degenerate: return "Degenerate";
    }
    return "?";
}

struct DiscBustingVerdict {
    DiscBustingKind kind = DiscBustingKind::DiscBustingUpToAtlas;
    std::optional<std::string> witness; // disjoint essential disc-bounding curve
};

/// Scans the atlas for an essential curve that bounds a disc and misses
/// gamma. Finding one refutes disc-busting; finding none is reported as the
/// explicitly bounded verdict DiscBustingUpToAtlas, never as the universal
/// statement. A gamma that itself bounds a disc is Degenerate.
inline DiscBustingVerdict is_disc_busting(const Alphabet& x, const Curve& gamma,
                                          const Atlas& atlas) {
    if (disc_bound_test(x, gamma)) return {DiscBustingKind::Degenerate, std::nullopt};
    for (const Curve& y : atlas.curves) {
        if (y.name == gamma.name) continue;
        if (essentiality(y) != Essentiality::Essential) continue;
        if (!disc_bound_test(x, y)) continue;
        if (atlas.geom_of(y.name, gamma.name) == 0)
            return {DiscBustingKind::NotDiscBusting, y.name};
    }
    return {DiscBustingKind::DiscBustingUpToAtlas, std::nullopt};
}

/// A system is admissible for gamma iff every system curve meets gamma in
/// exactly two points of opposite sign.
inline bool check_admissible(const Alphabet& x, const Curve& gamma, const Atlas& atlas) {
    for (const std::string& name : x.names) {
        if (!atlas.index(name))
            throw data_error("system curve " + name + " is missing from the atlas");
        if (atlas.geom_of(name, gamma.name) != 2) return false;
        if (atlas.alg_of(name, gamma.name) != 0) return false;
    }
    return true;
}

enum class DichotomyKind { CaseA, CaseB };

struct DichotomyVerdict {
    DichotomyKind kind = DichotomyKind::CaseA;
    std::optional<std::string> witness; // the replacement system curve in case B
};

/// The twist dichotomy for an admissible system: either the image gamma' of
/// gamma under the q-th twist along z stays disc-busting (case A), or the
/// atlas contains a replacement system curve meeting z once, missing
/// gamma', and meeting gamma twice (case B).
///
/// The twisted atlas describes the same curves after the twist; by
/// convention it carries the image curve under gamma's own name, with
/// homology equal to the twist of gamma's class along z.
inline DichotomyVerdict busted_dichotomy(const Alphabet& x, const Curve& gamma, const Curve& z,
                                         const Int& q, const Atlas& atlas,
                                         const Atlas& twisted_atlas) {
    if (q == 0) throw precondition_error("the dichotomy concerns a nontrivial twist power");
    if (!check_admissible(x, gamma, atlas))
        throw precondition_error("the system must be admissible for " + gamma.name);
    if (atlas.geom_of(z.name, gamma.name) != 2 || atlas.alg_of(z.name, gamma.name) != 0)
        throw precondition_error(
            "z must meet gamma at exactly two points with zero algebraic intersection");
    auto ti = twisted_atlas.index(gamma.name);
    if (!ti)
        throw data_error("twisted atlas must carry the twisted curve under the name " + gamma.name);
    const Curve& gamma_twisted = twisted_atlas.curves[*ti];
    const HomologyClass expect = twist_homology(z.homology, q, gamma.homology);
    if (!(gamma_twisted.homology == expect))
        throw data_error("twisted atlas homology for " + gamma.name +
                         " disagrees with the twist formula");

    const DiscBustingVerdict busted = is_disc_busting(x, gamma_twisted, twisted_atlas);
    if (busted.kind == DiscBustingKind::DiscBustingUpToAtlas)
        return {DichotomyKind::CaseA, std::nullopt};

    for (const Curve& cand : atlas.curves) {
        if (!twisted_atlas.index(cand.name)) continue;
        if (atlas.geom_of(cand.name, z.name) != 1) continue;
        if (atlas.geom_of(cand.name, gamma.name) != 2) continue;
        if (twisted_atlas.geom_of(cand.name, gamma.name) != 0) continue;
        return {DichotomyKind::CaseB, cand.name};
    }
    throw data_error("inconsistent atlas: the twisted curve is not disc-busting but the "
                     "guaranteed replacement curve is absent");
}

enum class TwistTriviality { Nontrivial, Trivial, Unknown };

inline const char* to_string(TwistTriviality t) {
    switch (t) {
        case TwistTriviality::Nontrivial: return "Nontrivial";
        case TwistTriviality::Trivial: return "Trivial";
        case TwistTriviality::Unknown: return "Unknown";
    }
    return "?";
}

struct TwistNontrivialityVerdict {
    TwistTriviality kind = TwistTriviality::Unknown;
    std::string certificate;
    std::optional<HomologyClass> homology_witness; // class b with T_c^q(b) != b
    std::optional<Int> thurston_value;             // |q| i(c,b)^2 > 0
};

/// Decides whether the q-th power of the twist along c can be isotopically
/// trivial. A nonzero class yields a homology certificate; a separating
/// curve needs atlas data for a Thurston-style certificate. Incompleteness
/// is reported as Unknown, never as a wrong verdict.
inline TwistNontrivialityVerdict twist_nontriviality(const Curve& c, const Int& q,
                                                     const Atlas* atlas = nullptr) {
    if (c.homology.genus < 1)
        throw precondition_error("twist triviality concerns curves on surfaces of genus >= 1");
    if (q == 0) return {TwistTriviality::Trivial, "zero twist power", std::nullopt, std::nullopt};
    if (essentiality(c) == Essentiality::NullHomotopic)
        return {TwistTriviality::Trivial, "curve is homotopically trivial", std::nullopt,
                std::nullopt};
    if (!c.homology.is_zero()) {
        for (std::size_t j = 0; j < c.homology.coords.size(); ++j) {
            const HomologyClass b = basis_class(c.homology.genus, j);
            if (intersection_pairing(c.homology, b) != 0) {
                return {TwistTriviality::Nontrivial,
                        "homology certificate: the twist moves basis class e" + std::to_string(j + 1),
                        b, std::nullopt};
            }
        }
    }
    if (atlas && atlas->index(c.name)) {
        for (const Curve& y : atlas->curves) {
            if (y.name == c.name) continue;
            const Int i_cb = atlas->geom_of(c.name, y.name);
            if (i_cb > 0) {
                const Int val = thurston_intersection(q, i_cb);
                return {TwistTriviality::Nontrivial,
                        "intersection certificate against " + y.name + ": |q| i(c,y)^2 = " +
                            to_string(val) + " > 0",
                        std::nullopt, val};
            }
        }
    }
    return {TwistTriviality::Unknown,
            "no certificate available: curve is separating and the atlas offers no curve "
            "meeting it",
            std::nullopt, std::nullopt};
}

/// Necessary condition for a mapping class to extend over the handlebody:
/// it must carry the meridian half of homology (the kernel of the inclusion
/// into the handlebody) into itself.
inline bool handlebody_subgroup_check(const SpElement& M,
                                      const std::vector<HomologyClass>& meridian_lagrangian) {
    const int k = M.genus;
    if (static_cast<int>(meridian_lagrangian.size()) != k)
        throw precondition_error("the meridian subspace of a genus-" + std::to_string(k) +
                                 " surface has rank " + std::to_string(k));
    std::vector<std::vector<Int>> span;
    span.reserve(meridian_lagrangian.size());
    for (const auto& v : meridian_lagrangian) {
        if (v.genus != k) throw dimension_error("meridian class genus mismatch");
        span.push_back(v.coords);
    }
    for (std::size_t i = 0; i < meridian_lagrangian.size(); ++i)
        for (std::size_t j = 0; j < meridian_lagrangian.size(); ++j)
            if (intersection_pairing(meridian_lagrangian[i], meridian_lagrangian[j]) != 0)
                throw precondition_error("meridian classes must be pairwise disjoint in homology");
    if (rank_of(span) != k)
        throw precondition_error("meridian classes must span a rank-" + std::to_string(k) +
                                 " subspace");
    for (const auto& v : meridian_lagrangian)
        if (!in_span(span, M.act(v).coords)) return false;
    return true;
}

} // namespace twistlab
