#include "twistlab/dehn.hpp"

#include "oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace twistlab;

TEST_CASE("relator and obvious cases") {
    const CyclicWord relator = surface_relator(2);
    CHECK(print_word(relator) == "a1 b1 a1' b1' a2 b2 a2' b2'");
    CHECK(dehn_essential_test(2, relator) == WordVerdict::Trivial);
    CHECK(dehn_essential_test(2, parse_word("a1")) == WordVerdict::Essential);
    CHECK(dehn_essential_test(2, parse_word("")) == WordVerdict::Trivial);
    CHECK(dehn_essential_test(2, parse_word("a1 b1 a1' b1'")) == WordVerdict::Essential);
    CHECK(dehn_essential_test(3, surface_relator(3)) == WordVerdict::Trivial);
    CHECK(dehn_essential_test(4, parse_word("a1 b1 a1' b1' a2 b2 a2' b2'")) ==
          WordVerdict::Essential);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(dehn_essential_test(1, parse_word("a1")), unsupported_error);
    CHECK_THROWS_AS(dehn_essential_test(2, parse_word("a3")), data_error);
}

TEST_CASE("conjugates and products of relators are trivial") {
    auto rng = oracle::rng(61);
    const CyclicWord relator = surface_relator(2);
    const Alphabet ab = surface_alphabet(2);
    for (int i = 0; i < 60; ++i) {
        // u r^{+-1} u^{-1}, inserted as a linear word, must come out trivial.
        std::vector<Letter> u;
        const std::size_t len = rng() % 5;
        for (std::size_t j = 0; j < len; ++j)
            u.push_back({ab.names[rng() % ab.names.size()], rng() % 2 ? 1 : -1});
        CyclicWord w;
        w.letters = u;
        const CyclicWord r = rng() % 2 ? relator : inverse(relator);
        w.letters.insert(w.letters.end(), r.letters.begin(), r.letters.end());
        for (auto it = u.rbegin(); it != u.rend(); ++it) w.letters.push_back(inverse(*it));
        CHECK(dehn_essential_test(2, w) == WordVerdict::Trivial);
    }
    // A product of two relator conjugates.
    CyclicWord w;
    const CyclicWord r = relator;
    w.letters = r.letters;
    w.letters.insert(w.letters.end(), r.letters.begin(), r.letters.end());
    CHECK(dehn_essential_test(2, w) == WordVerdict::Trivial);
}

TEST_CASE("agreement with the insertion oracle on short genus-2 words") {
    const std::size_t maxlen = 6;
    const auto trivial = oracle::trivial_words_up_to(2, maxlen);
    std::size_t checked = 0;
    oracle::for_each_cyclic_word(2, maxlen, [&](const CyclicWord& w) {
        const bool dehn_trivial = dehn_essential_test(2, w) == WordVerdict::Trivial;
        const bool oracle_trivial = trivial.count(print_word(reduce(w))) > 0;
        ++checked;
        if (dehn_trivial != oracle_trivial) {
            CAPTURE(print_word(w));
            CHECK(dehn_trivial == oracle_trivial);
        }
    });
    CHECK(checked > 1000);
    // The empty word is trivial and the oracle knows it.
    CHECK(trivial.count("") == 1);
}
