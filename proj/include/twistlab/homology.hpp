#pragma once

#include "twistlab/errors.hpp"
#include "twistlab/numeric.hpp"

#include <vector>

namespace twistlab {

/// An integer first-homology class of the closed genus-k surface, in the
/// fixed basis a_1, b_1, ..., a_k, b_k. The symplectic form is block
/// diagonal with <a_i, b_i> = +1. Genus 0 is allowed and carries an empty
/// coordinate vector (the sphere has no first homology).
struct HomologyClass {
    int genus = 0;
    std::vector<Int> coords;

    HomologyClass() = default;
    HomologyClass(int g, std::vector<Int> c) : genus(g), coords(std::move(c)) {
        if (g < 0) throw domain_error("genus must be nonnegative");
        if (coords.size() != static_cast<std::size_t>(2 * g))
            throw dimension_error("homology class of genus " + std::to_string(g) +
                                  " needs " + std::to_string(2 * g) + " coordinates");
    }

    bool is_zero() const {
        for (const Int& c : coords)
            if (c != 0) return false;
        return true;
    }

    friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
};

/// Basis vector e_j (0-indexed) of the genus-g coordinate space.
inline HomologyClass basis_class(int genus, std::size_t j) {
    std::vector<Int> c(2 * genus, 0);
    c.at(j) = 1;
    return HomologyClass(genus, std::move(c));
}

/// The algebraic intersection pairing <u, v> = u^T J v. Antisymmetric and
/// bilinear; <v, v> = 0 for every v.
inline Int intersection_pairing(const HomologyClass& u, const HomologyClass& v) {
    if (u.genus != v.genus)
        throw dimension_error("intersection pairing of classes on different surfaces");
    Int s = 0;
    for (int i = 0; i < u.genus; ++i) {
        // block [[0,1],[-1,0]] on (a_i, b_i)
        s += u.coords[2 * i] * v.coords[2 * i + 1];
        s -= u.coords[2 * i + 1] * v.coords[2 * i];
    }
    return s;
}

/// Action of the q-th power of the right-handed twist along a on the class
/// b: returns b + q <a, b> a.
inline HomologyClass twist_homology(const HomologyClass& a, const Int& q, const HomologyClass& b) {
    if (a.genus != b.genus)
        throw dimension_error("twist of classes on different surfaces");
    const Int p = q * intersection_pairing(a, b);
    HomologyClass out = b;
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += p * a.coords[i];
    return out;
}

/// Geometric intersection of a q-fold twisted curve with the original:
/// i(T_a^q(b), b) = |q| * i(a, b)^2.
inline Int thurston_intersection(const Int& q, const Int& i_ab) {
    if (i_ab < 0) throw domain_error("geometric intersection numbers are nonnegative");
    return abs_int(q) * i_ab * i_ab;
}

} // namespace twistlab
