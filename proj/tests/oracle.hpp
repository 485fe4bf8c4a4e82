#pragma once

// Test-side oracles, kept independent of the library code paths they check.

#include "twistlab/dehn.hpp"
#include "twistlab/homology.hpp"
#include "twistlab/linalg.hpp"
#include "twistlab/words.hpp"

#include <deque>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using namespace twistlab;

/// Reduces a cyclic word by cancelling randomly chosen adjacent inverse
/// pairs (including across the wrap-around) until none remain. Used to
/// check that the deterministic reducer is confluent.
inline CyclicWord randomized_reduce(const CyclicWord& w, std::mt19937_64& rng) {
    std::vector<Letter> v = w.letters;
    while (v.size() >= 2) {
        std::vector<std::size_t> cancellable;
        const std::size_t n = v.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Letter& a = v[i];
            const Letter& b = v[(i + 1) % n];
            if (a.name == b.name && a.sign == -b.sign) cancellable.push_back(i);
        }
        if (cancellable.empty()) break;
        const std::size_t pick = cancellable[rng() % cancellable.size()];
        const std::size_t j = (pick + 1) % n;
        if (j > pick) {
            v.erase(v.begin() + static_cast<std::ptrdiff_t>(j));
            v.erase(v.begin() + static_cast<std::ptrdiff_t>(pick));
        } else {
            v.erase(v.begin() + static_cast<std::ptrdiff_t>(pick));
            v.erase(v.begin() + static_cast<std::ptrdiff_t>(j));
        }
    }
    return canonical_rotation(CyclicWord{v});
}

/// Builds the transvection matrix column by column from the twist formula,
/// independently of the library's outer-product construction.
inline Mat transvection_by_columns(const HomologyClass& a, const Int& q) {
    const int n = 2 * a.genus;
    Mat m(n);
    for (int j = 0; j < n; ++j) {
        const HomologyClass img = twist_homology(a, q, basis_class(a.genus, j));
        for (int i = 0; i < n; ++i) m.at(i, j) = img.coords[i];
    }
    return m;
}

/// Breadth-first enumeration of the trivial cyclic words of the genus-k
/// surface group with reduced length <= maxlen: starting from the empty
/// word, insert any rotation of the relator or its inverse at any position
/// and reduce. Every state is trivial; conversely any trivial word of
/// length <= maxlen is reached, because a shortening derivation can be
/// replayed backwards move by move without the reduced length ever
/// exceeding maxlen.
inline std::set<std::string> trivial_words_up_to(int k, std::size_t maxlen) {
    std::vector<std::vector<Letter>> rots;
    {
        const CyclicWord r = surface_relator(k);
        const CyclicWord ri = inverse(r);
        const std::size_t n = r.size();
        for (std::size_t s = 0; s < n; ++s) {
            std::vector<Letter> rot, roti;
            for (std::size_t i = 0; i < n; ++i) {
                rot.push_back(r.letters[(s + i) % n]);
                roti.push_back(ri.letters[(s + i) % n]);
            }
            rots.push_back(rot);
            rots.push_back(roti);
        }
    }
    std::set<std::string> seen;
    std::deque<CyclicWord> queue;
    seen.insert("");
    queue.push_back(CyclicWord{});
    while (!queue.empty()) {
        const CyclicWord w = queue.front();
        queue.pop_front();
        for (std::size_t pos = 0; pos <= w.size(); ++pos) {
            for (const auto& rot : rots) {
                CyclicWord nw;
                nw.letters.reserve(w.size() + rot.size());
                nw.letters.insert(nw.letters.end(), w.letters.begin(),
                                  w.letters.begin() + static_cast<std::ptrdiff_t>(pos));
                nw.letters.insert(nw.letters.end(), rot.begin(), rot.end());
                nw.letters.insert(nw.letters.end(),
                                  w.letters.begin() + static_cast<std::ptrdiff_t>(pos),
                                  w.letters.end());
                const CyclicWord red = reduce(nw);
                if (red.size() > maxlen) continue;
                if (seen.insert(print_word(red)).second) queue.push_back(red);
            }
        }
    }
    return seen;
}

/// Calls fn once for every canonical cyclically-reduced cyclic word over
/// the genus-k surface alphabet with 1 <= length <= maxlen. Canonical means
/// the word equals its lexicographically least rotation, so each cyclic
/// word is visited exactly once.
template <typename Fn>
inline void for_each_cyclic_word(int k, std::size_t maxlen, Fn&& fn) {
    const Alphabet ab = surface_alphabet(k);
    std::vector<Letter> letters;
    for (const std::string& n : ab.names) {
        letters.push_back({n, 1});
        letters.push_back({n, -1});
    }
    std::vector<Letter> cur;
    auto rec = [&](auto&& self, std::size_t remaining) -> void {
        if (!cur.empty()) {
            CyclicWord w{cur};
            if (is_cyclically_reduced(w) && canonical_rotation(w) == w) fn(w);
        }
        if (remaining == 0) return;
        for (const Letter& l : letters) {
            if (!cur.empty()) {
                const Letter& prev = cur.back();
                if (prev.name == l.name && prev.sign == -l.sign) continue;
            }
            cur.push_back(l);
            self(self, remaining - 1);
            cur.pop_back();
        }
    };
    rec(rec, maxlen);
}

/// Deterministically seeded generator helpers.
inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

inline CyclicWord random_word(std::mt19937_64& g, std::size_t max_len, std::size_t alphabet_size) {
    std::uniform_int_distribution<std::size_t> len_d(0, max_len);
    std::uniform_int_distribution<std::size_t> letter_d(0, alphabet_size - 1);
    std::uniform_int_distribution<int> sign_d(0, 1);
    CyclicWord w;
    const std::size_t len = len_d(g);
    for (std::size_t i = 0; i < len; ++i)
        w.letters.push_back({"x" + std::to_string(letter_d(g) + 1), sign_d(g) ? 1 : -1});
    return w;
}

/// A word that provably reduces to the empty word: built from nothing by
/// repeatedly inserting cancelling pairs at random positions.
inline CyclicWord random_trivial_word(std::mt19937_64& g, std::size_t pairs,
                                      std::size_t alphabet_size) {
    std::uniform_int_distribution<std::size_t> letter_d(0, alphabet_size - 1);
    std::uniform_int_distribution<int> sign_d(0, 1);
    std::vector<Letter> v;
    for (std::size_t i = 0; i < pairs; ++i) {
        const std::string name = "x" + std::to_string(letter_d(g) + 1);
        const int sign = sign_d(g) ? 1 : -1;
        std::uniform_int_distribution<std::size_t> pos_d(0, v.size());
        const std::size_t pos = pos_d(g);
        v.insert(v.begin() + static_cast<std::ptrdiff_t>(pos), {Letter{name, sign}, Letter{name, -sign}});
    }
    return CyclicWord{v};
}

inline HomologyClass random_class(std::mt19937_64& g, int genus, int max_abs) {
    std::uniform_int_distribution<int> d(-max_abs, max_abs);
    std::vector<Int> c(2 * static_cast<std::size_t>(genus));
    for (auto& v : c) v = d(g);
    return HomologyClass(genus, std::move(c));
}

} // namespace oracle
