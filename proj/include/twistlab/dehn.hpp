#pragma once

#include "twistlab/errors.hpp"
#include "twistlab/words.hpp"

#include <string>
#include <vector>

namespace twistlab {

enum class WordVerdict { Trivial, Essential };

inline const char* to_string(WordVerdict v) {
    return v == WordVerdict::Trivial ? "Trivial" : "Essential";
}

/// The surface-group alphabet a_1, b_1, ..., a_k, b_k.
inline Alphabet surface_alphabet(int k) {
    std::vector<std::string> names;
    names.reserve(2 * k);
    for (int i = 1; i <= k; ++i) {
        names.push_back("a" + std::to_string(i));
        names.push_back("b" + std::to_string(i));
    }
    return Alphabet(std::move(names));
}

/// The defining relator [a_1,b_1]...[a_k,b_k] of the genus-k surface group,
/// of length 4k.
inline CyclicWord surface_relator(int k) {
    CyclicWord r;
    for (int i = 1; i <= k; ++i) {
        const std::string a = "a" + std::to_string(i);
        const std::string b = "b" + std::to_string(i);
        r.letters.push_back({a, 1});
        r.letters.push_back({b, 1});
        r.letters.push_back({a, -1});
        r.letters.push_back({b, -1});
    }
    return r;
}

namespace detail {

/// All 4k cyclic rotations of w as linear letter vectors.
inline std::vector<std::vector<Letter>> rotations(const CyclicWord& w) {
    const std::size_t n = w.size();
    std::vector<std::vector<Letter>> out;
    out.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<Letter> rot;
        rot.reserve(n);
        for (std::size_t i = 0; i < n; ++i) rot.push_back(w.letters[(s + i) % n]);
        out.push_back(std::move(rot));
    }
    return out;
}

} // namespace detail

/// Decides whether a cyclic word over a_1, b_1, ..., a_k, b_k represents the
/// identity in the fundamental group of the closed genus-k surface, k >= 2.
///
/// The procedure is Dehn's algorithm with the strict "more than half the
/// relator" criterion: repeatedly scan the cyclic word for a subword that
/// matches more than half (length > 2k) of some rotation of the relator or
/// its inverse, and replace it by the inverse of the shorter complement.
/// Each replacement strictly shortens the word; the word is trivial iff the
/// process terminates at the empty word. The genus-k relator satisfies the
/// small-cancellation condition that makes the criterion complete.
inline WordVerdict dehn_essential_test(int k, const CyclicWord& input) {
    if (k < 2)
        throw unsupported_error("the word problem is handled this way for genus >= 2 only; "
                                "the torus case is decided by homology");
    const Alphabet ab = surface_alphabet(k);
    if (!word_over(input, ab))
        throw data_error("word contains letters outside the genus-" + std::to_string(k) +
                         " surface alphabet");

    const CyclicWord relator = surface_relator(k);
    std::vector<std::vector<Letter>> pieces = detail::rotations(relator);
    {
        const std::vector<std::vector<Letter>> inv = detail::rotations(inverse(relator));
        pieces.insert(pieces.end(), inv.begin(), inv.end());
    }
    const std::size_t relator_len = 4 * static_cast<std::size_t>(k);
    const std::size_t half = 2 * static_cast<std::size_t>(k);

    CyclicWord w = reduce(input);
    while (!w.empty()) {
        const std::size_t n = w.size();
        const std::size_t max_match = n < relator_len ? n : relator_len;
        bool replaced = false;
        for (std::size_t len = max_match; len > half && !replaced; --len) {
            for (std::size_t start = 0; start < n && !replaced; ++start) {
                for (const auto& rot : pieces) {
                    bool match = true;
                    for (std::size_t i = 0; i < len; ++i)
                        if (!(w.letters[(start + i) % n] == rot[i])) {
                            match = false;
                            break;
                        }
                    if (!match) continue;
                    // w contains the prefix u of rot with |u| > |relator|/2.
                    // rot = u v in the group, so u = v^{-1}; substitute.
                    CyclicWord next;
                    for (std::size_t i = relator_len; i > len; --i)
                        next.letters.push_back(inverse(rot[i - 1]));
                    for (std::size_t i = len; i < n; ++i)
                        next.letters.push_back(w.letters[(start + i) % n]);
                    w = reduce(next);
                    replaced = true;
                    break;
                }
            }
        }
        if (!replaced) return WordVerdict::Essential;
    }
    return WordVerdict::Trivial;
}

} // namespace twistlab
