#pragma once

#include "twistlab/errors.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace twistlab {

/// One letter of a word over a curve alphabet: a curve name and a sign
/// (+1 for the curve, -1 for its inverse).
struct Letter {
    std::string name;
    int sign = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter inverse(const Letter& l) { return Letter{l.name, -l.sign}; }

/// Serialized form of a single letter: the name, with a trailing apostrophe
/// marking the inverse, e.g. "x2'".
inline std::string letter_token(const Letter& l) {
    return l.sign < 0 ? l.name + "'" : l.name;
}

/// A cyclically-ordered word over a signed alphabet. The letter vector is a
/// chosen linearization; two words are equal as cyclic words iff their
/// reduced canonical forms coincide.
struct CyclicWord {
    std::vector<Letter> letters;

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }

    friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
};

/// Formal inverse: reverse the letters and flip every sign.
inline CyclicWord inverse(const CyclicWord& w) {
    CyclicWord out;
    out.letters.reserve(w.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back(inverse(*it));
    return out;
}

/// Word syntax: whitespace-separated letters, inverse marked by a trailing
/// apostrophe, e.g. "x1 x2' x1". Parsing round-trips bit-exactly with
/// print_word on canonical input.
inline CyclicWord parse_word(const std::string& text) {
    CyclicWord w;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        while (i < n && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) ++i;
        if (i >= n) break;
        std::size_t j = i;
        while (j < n && text[j] != ' ' && text[j] != '\t' && text[j] != '\n' && text[j] != '\r') ++j;
        std::string tok = text.substr(i, j - i);
        int sign = 1;
        if (tok.back() == '\'') {
            sign = -1;
            tok.pop_back();
        }
        if (tok.empty())
            throw parse_error("empty letter name in word: \"" + text + "\"");
        if (tok.find('\'') != std::string::npos)
            throw parse_error("apostrophe is only valid as a trailing inverse marker: \"" + tok + "'\"");
        w.letters.push_back(Letter{tok, sign});
        i = j;
    }
    return w;
}

inline std::string print_word(const CyclicWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += ' ';
        out += letter_token(w.letters[i]);
    }
    return out;
}

/// Free reduction of the linearized word (no wrap-around cancellation).
inline CyclicWord free_reduce(const CyclicWord& w) {
    CyclicWord out;
    for (const Letter& l : w.letters) {
        if (!out.letters.empty() && out.letters.back().name == l.name &&
            out.letters.back().sign == -l.sign) {
            out.letters.pop_back();
        } else {
            out.letters.push_back(l);
        }
    }
    return out;
}

inline bool less_letter(const Letter& a, const Letter& b) {
    return letter_token(a) < letter_token(b);
}

/// Lexicographically least rotation, comparing serialized letter tokens.
inline CyclicWord canonical_rotation(const CyclicWord& w) {
    const std::size_t n = w.size();
    if (n <= 1) return w;
    auto cmp_rot = [&](std::size_t a, std::size_t b) {
        for (std::size_t k = 0; k < n; ++k) {
            const std::string ta = letter_token(w.letters[(a + k) % n]);
            const std::string tb = letter_token(w.letters[(b + k) % n]);
            if (ta != tb) return ta < tb;
        }
        return false;
    };
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (cmp_rot(i, best)) best = i;
    CyclicWord out;
    out.letters.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.letters.push_back(w.letters[(best + k) % n]);
    return out;
}

/// Freely reduces, cyclically reduces (cancelling across the wrap-around),
/// then returns the lexicographically least rotation. The result is the
/// canonical representative of the cyclic word; it is independent of the
/// cancellation order and reduce(reduce(w)) == reduce(w).
inline CyclicWord reduce(const CyclicWord& w) {
    CyclicWord r = free_reduce(w);
    while (r.letters.size() >= 2 && r.letters.front().name == r.letters.back().name &&
           r.letters.front().sign == -r.letters.back().sign) {
        r.letters.pop_back();
        r.letters.erase(r.letters.begin());
    }
    return canonical_rotation(r);
}

/// A reduced cyclic word has no adjacent inverse pair, including across the
/// wrap-around.
inline bool is_cyclically_reduced(const CyclicWord& w) {
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Letter& a = w.letters[i];
        const Letter& b = w.letters[(i + 1) % n];
        if (n > 1 && a.name == b.name && a.sign == -b.sign) return false;
    }
    return true;
}

/// An ordered alphabet of distinct, nonempty curve names.
struct Alphabet {
    std::vector<std::string> names;

    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> ns) : names(std::move(ns)) {
        std::set<std::string> seen;
        for (const auto& n : names) {
            if (n.empty()) throw data_error("alphabet contains an empty name");
            if (!seen.insert(n).second)
                throw data_error("alphabet contains a duplicate name: " + n);
        }
    }

    bool contains(const std::string& n) const {
        return std::find(names.begin(), names.end(), n) != names.end();
    }
    std::size_t size() const { return names.size(); }
};

/// True iff every letter of w names a curve of the alphabet.
inline bool word_over(const CyclicWord& w, const Alphabet& x) {
    for (const Letter& l : w.letters)
        if (!x.contains(l.name)) return false;
    return true;
}

/// Signed count of occurrences of `name` in w (exponent sum).
inline long long exponent_sum(const CyclicWord& w, const std::string& name) {
    long long s = 0;
    for (const Letter& l : w.letters)
        if (l.name == name) s += l.sign;
    return s;
}

/// Unsigned count of occurrences of `name` in w.
inline long long letter_count(const CyclicWord& w, const std::string& name) {
    long long s = 0;
    for (const Letter& l : w.letters)
        if (l.name == name) ++s;
    return s;
}

} // namespace twistlab
