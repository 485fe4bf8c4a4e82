#pragma once

#include "twistlab/errors.hpp"
#include "twistlab/numeric.hpp"
#include "twistlab/symplectic.hpp"

#include <string>

namespace twistlab {

/// Lower bound for the commutator length of the q-th power of a product of
/// m same-handed twists along disjoint essential curves on a closed genus-k
/// surface: the exact rational 1 + qm/(18k - 6).
inline Rat kotschick_bound(long long k, long long m, long long q) {
    if (k < 2) throw domain_error("commutator-length bound requires genus k >= 2");
    if (m < 1) throw domain_error("commutator-length bound requires m >= 1 twist curves");
    if (q < 1) throw domain_error("commutator-length bound requires power q >= 1");
    return Rat(1) + Rat(Int(q) * m, Int(18) * k - 6);
}

enum class ObstructionKind { Contradiction, Consistent, NotApplicable };

inline const char* to_string(ObstructionKind k) {
    switch (k) {
        case ObstructionKind::Contradiction: return "Contradiction";
        case ObstructionKind::Consistent: return "Consistent";
        case ObstructionKind::NotApplicable: return "NotApplicable";
    }
    return "?";
}

struct ObstructionVerdict {
    ObstructionKind kind = ObstructionKind::Consistent;
    Rat bound;          // meaningful for Contradiction / Consistent
    std::string detail;
};

/// Tests whether a claimed commutator-length value for the q-th power of a
/// product of m same-handed twists is contradicted by the lower bound.
///
/// Mixed-handed products fall outside the bound's hypotheses and always
/// yield NotApplicable. On genus 2 the bound only applies to powers
/// divisible by 10 (the abelianization of the mapping class group is
/// Z/10); other powers report Consistent with an explanatory caveat rather
/// than silently applying the bound.
inline ObstructionVerdict commutator_obstruction(long long k, long long m, long long q,
                                                 long long claimed_cl, bool all_same_sign,
                                                 bool all_essential) {
    if (q == 0) throw domain_error("commutator obstruction needs a nonzero power");
    if (claimed_cl < 1) throw domain_error("claimed commutator length must be >= 1");
    if (!all_same_sign)
        return {ObstructionKind::NotApplicable, Rat(0),
                "mixed-handed twist products admit single-commutator expressions; the bound does not apply"};
    if (k < 2)
        return {ObstructionKind::NotApplicable, Rat(0),
                "the bound requires a closed surface of genus at least 2"};
    const long long aq = q < 0 ? -q : q;
    const Rat bound = kotschick_bound(k, m, aq);
    if (k == 2 && aq % 10 != 0)
        return {ObstructionKind::Consistent, bound,
                "genus 2: membership of the twist power in the commutator subgroup is only known for "
                "powers divisible by 10, so the bound is not applied"};
    if (all_essential && bound > claimed_cl)
        return {ObstructionKind::Contradiction, bound,
                "lower bound " + to_string(bound) + " exceeds claimed commutator length " +
                    std::to_string(claimed_cl) + "; the twisted curves cannot all be essential"};
    std::string detail = "lower bound " + to_string(bound) + " does not exceed claimed length " +
                         std::to_string(claimed_cl);
    if (!all_essential) detail = "essentiality of the twist curves not established; " + detail;
    return {ObstructionKind::Consistent, bound, detail};
}

/// Image of a twist word in the abelianization of the mapping class group.
/// For genus k >= 3 the group is perfect and the image is 0; for genus 2 it
/// is the exponent sum mod 10. Only words along non-separating curves are
/// supported; a zero image is necessary for membership in the commutator
/// subgroup.
inline int abelianization_image(const TwistWord& w, long long k, bool all_nonseparating) {
    if (!all_nonseparating)
        throw unsupported_error("abelianization image is only defined here for twists along "
                                "non-separating curves");
    if (k < 2) throw unsupported_error("abelianization image supported for genus >= 2 only");
    if (k >= 3) return 0;
    long long s = 0;
    for (const TwistLetter& l : w.letters) s += l.exp;
    return static_cast<int>(((s % 10) + 10) % 10);
}

/// Exact check of the mixed-sign commutator identity: with b := g(a)
/// disjoint from a, the product (T_a T_b^{-1})^q equals g^{-1} T_b^q g
/// T_b^{-q} as symplectic matrices, exhibiting a power of a mixed-handed
/// twist pair as a single commutator.
inline bool verify_mixed_sign_commutator(int k, const HomologyClass& a, const SpElement& g,
                                         long long q) {
    if (q <= 0) throw precondition_error("the commutator identity is checked for q > 0");
    if (a.genus != k || g.genus != k) throw dimension_error("genus mismatch");
    if (!is_symplectic(g.m, k)) throw precondition_error("g must act symplectically");
    const HomologyClass b = g.act(a);
    if (intersection_pairing(a, b) != 0)
        throw precondition_error("<a, g(a)> must vanish (disjoint curves)");
    const SpElement ta = transvection(a, 1);
    const SpElement tb_inv = transvection(b, -1);
    SpElement lhs = SpElement::identity(k);
    const SpElement f = mul(ta, tb_inv);
    for (long long i = 0; i < q; ++i) lhs = mul(lhs, f);
    const SpElement tbq = transvection(b, Int(q));
    const SpElement tbnq = transvection(b, Int(-q));
    const SpElement rhs = mul(mul(mul(inverse(g), tbq), g), tbnq);
    return lhs == rhs;
}

/// Exact check of the orientation-reversing commutator identity: for an
/// anti-symplectic g fixing the class of c up to sign,
/// [T_c, g^{-1}] = T_c g^{-1} T_c^{-1} g equals T_c^2.
inline bool verify_orientation_reversing_commutator(int k, const HomologyClass& c, const Mat& g) {
    if (c.genus != k || g.n != 2 * k) throw dimension_error("genus mismatch");
    if (!is_anti_symplectic(g, k))
        throw precondition_error("g must reverse the symplectic form (orientation-reversing)");
    const std::vector<Int> gc = apply(g, c.coords);
    bool fixed = gc == c.coords;
    if (!fixed) {
        bool neg = true;
        for (std::size_t i = 0; i < gc.size(); ++i)
            if (gc[i] != -c.coords[i]) {
                neg = false;
                break;
            }
        fixed = neg;
    }
    if (!fixed) throw precondition_error("g must fix the class of c up to sign");
    const Mat tc = transvection(c, 1).m;
    const Mat tc_inv = transvection(c, -1).m;
    const Mat lhs = mul(mul(mul(tc, inverse(g)), tc_inv), g);
    const Mat rhs = mul(tc, tc);
    return lhs == rhs;
}

} // namespace twistlab
