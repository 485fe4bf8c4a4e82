#pragma once

#include "twistlab/errors.hpp"
#include "twistlab/homology.hpp"
#include "twistlab/linalg.hpp"
#include "twistlab/numeric.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace twistlab {

/// The standard symplectic form on the genus-g coordinate space: block
/// diagonal with blocks [[0,1],[-1,0]] on each (a_i, b_i) pair.
inline Mat standard_form(int genus) {
    Mat j(2 * genus);
    for (int i = 0; i < genus; ++i) {
        j.at(2 * i, 2 * i + 1) = 1;
        j.at(2 * i + 1, 2 * i) = -1;
    }
    return j;
}

inline bool is_symplectic(const Mat& m, int genus) {
    if (m.n != 2 * genus) return false;
    const Mat j = standard_form(genus);
    return mul(mul(transpose(m), j), m) == j;
}

inline bool is_anti_symplectic(const Mat& m, int genus) {
    if (m.n != 2 * genus) return false;
    const Mat j = standard_form(genus);
    Mat neg = j;
    for (Int& v : neg.a) v = -v;
    return mul(mul(transpose(m), j), m) == neg;
}

/// A word in Dehn twists: ordered letters (curve name, nonzero exponent).
struct TwistLetter {
    std::string curve;
    long long exp = 0;

    friend bool operator==(const TwistLetter&, const TwistLetter&) = default;
};

struct TwistWord {
    int genus = 0;
    std::vector<TwistLetter> letters;

    TwistWord() = default;
    TwistWord(int g, std::vector<TwistLetter> ls) : genus(g), letters(std::move(ls)) {
        for (const auto& l : letters)
            if (l.exp == 0) throw data_error("twist word letter has exponent 0: " + l.curve);
    }
};

/// An integer symplectic matrix acting on the homology of the genus-k
/// surface, optionally remembering the twist word that produced it.
struct SpElement {
    int genus = 0;
    Mat m;
    std::optional<TwistWord> word;

    SpElement() = default;
    SpElement(int g, Mat mat, std::optional<TwistWord> w = std::nullopt)
        : genus(g), m(std::move(mat)), word(std::move(w)) {
        if (m.n != 2 * g) throw dimension_error("symplectic element size does not match genus");
    }

    static SpElement identity(int genus) { return SpElement(genus, Mat::identity(2 * genus)); }

    HomologyClass act(const HomologyClass& v) const {
        if (v.genus != genus) throw dimension_error("class genus does not match element genus");
        return HomologyClass(genus, apply(m, v.coords));
    }

    friend bool operator==(const SpElement& a, const SpElement& b) {
        return a.genus == b.genus && a.m == b.m;
    }
};

inline SpElement mul(const SpElement& a, const SpElement& b) {
    if (a.genus != b.genus) throw dimension_error("product of elements on different surfaces");
    return SpElement(a.genus, mul(a.m, b.m));
}

inline SpElement inverse(const SpElement& a) { return SpElement(a.genus, inverse(a.m)); }

/// The transvection along a: the matrix of b -> b + q <a, b> a. This is the
/// homology shadow of the q-th power of the right-handed Dehn twist along
/// any curve with class a; a null class gives the identity.
inline SpElement transvection(const HomologyClass& a, const Int& q) {
    const int n = 2 * a.genus;
    Mat m = Mat::identity(n);
    // row vector a^T J, with J the standard form
    std::vector<Int> aj(n, 0);
    for (int i = 0; i < a.genus; ++i) {
        aj[2 * i] = -a.coords[2 * i + 1];
        aj[2 * i + 1] = a.coords[2 * i];
    }
    for (int i = 0; i < n; ++i) {
        if (a.coords[i] == 0) continue;
        for (int j = 0; j < n; ++j) m.at(i, j) += q * a.coords[i] * aj[j];
    }
    return SpElement(a.genus, std::move(m));
}

using ClassResolver = std::function<HomologyClass(const std::string&)>;

/// Evaluate a twist word to its symplectic matrix, resolving curve names to
/// homology classes. Multiplicative: eval(uv) = eval(u) * eval(v).
inline SpElement eval(const TwistWord& w, const ClassResolver& resolve) {
    SpElement acc = SpElement::identity(w.genus);
    for (const TwistLetter& l : w.letters) {
        HomologyClass c = resolve(l.curve);
        if (c.genus != w.genus)
            throw dimension_error("twist word letter " + l.curve + " resolved to wrong genus");
        acc = mul(acc, transvection(c, Int(l.exp)));
    }
    acc.word = w;
    return acc;
}

/// The fixed involution of a doubled surface of genus 2k: swaps the
/// top-half and bottom-half handle blocks and negates the b-coordinates, so
/// that i^T J i = -J and i^2 = 1.
inline Mat involution(int genus) {
    if (genus % 2 != 0) throw domain_error("involution is defined on doubled (even genus) surfaces");
    const int k = genus / 2;
    Mat m(2 * genus);
    for (int i = 0; i < k; ++i) {
        m.at(2 * i, 2 * (k + i)) = 1;       // a_i <- a_{k+i}
        m.at(2 * i + 1, 2 * (k + i) + 1) = -1;
        m.at(2 * (k + i), 2 * i) = 1;       // a_{k+i} <- a_i
        m.at(2 * (k + i) + 1, 2 * i + 1) = -1;
    }
    return m;
}

} // namespace twistlab
