#include "doctest.h"
#include "qfa/constructions.hpp"
#include "qfa/language.hpp"
#include "support/random_machines.hpp"

using namespace qfa;
using qfa::testing::Rng;

namespace {

const Alphabet kAB{"a", "b"};

CutpointQuery strict(Rational l) { return {l, CutpointMode::Strict}; }
CutpointQuery nonstrict(Rational l) { return {l, CutpointMode::Nonstrict}; }

Mmqfa constant_mmqfa(Rational lambda) { return embed_moqfa_to_mmqfa(constant_moqfa(kAB, lambda)); }

/// MOQFA over {a, b} whose acceptance depends on the word: 'a' rotates by
/// theta, 'b' is the identity.
Moqfa rotation_moqfa(double theta) {
    Moqfa m;
    m.alphabet = kAB;
    m.dim = 2;
    m.initial = Vector{1.0, 0.0};
    m.unitaries = {Matrix{{std::cos(theta), -std::sin(theta)}, {std::sin(theta), std::cos(theta)}},
                   Matrix::identity(2)};
    m.accepting = {1};
    return m;
}

}  // namespace

TEST_CASE("membership verdicts") {
    const auto above = membership(0.75, nonstrict(Rational(1, 2)));
    CHECK(above.verdict == VerdictClass::Above);
    CHECK(above.strict_member());
    CHECK(above.nonstrict_member());
    CHECK(above.margin == 0.25);

    const auto boundary = membership(0.5, CutpointQuery{Rational(1, 2), CutpointMode::Strict, 1e-9});
    CHECK(boundary.verdict == VerdictClass::Boundary);
    CHECK(boundary.nonstrict_member());
    CHECK_FALSE(boundary.strict_member());

    const auto below = membership(0.25, nonstrict(Rational(1, 2)));
    CHECK(below.verdict == VerdictClass::Below);
    CHECK_FALSE(below.nonstrict_member());

    CHECK(membership(0.5 + 2e-9, nonstrict(Rational(1, 2))).verdict == VerdictClass::Above);
    CHECK(membership(0.5 - 2e-9, nonstrict(Rational(1, 2))).verdict == VerdictClass::Below);
    CHECK(membership(0.5 + 5e-10, nonstrict(Rational(1, 2))).verdict == VerdictClass::Boundary);
}

TEST_CASE("strict membership implies nonstrict membership") {
    Rng rng(12);
    for (int t = 0; t < 300; ++t) {
        const Mmqfa m = testing::random_mmqfa(rng, 5);
        const Word w = testing::random_word(m.alphabet, 6, rng);
        const Rational lambda(static_cast<std::int64_t>(testing::uniform(1, 20, rng)), 20);
        const auto v = membership(mmqfa_accept_prob(m, w), nonstrict(lambda));
        if (v.strict_member()) CHECK(v.nonstrict_member());
    }
}

TEST_CASE("word enumeration order and count") {
    std::vector<IndexedWord> seen;
    enumerate_words(2, 2, [&](const IndexedWord& w) {
        seen.push_back(w);
        return true;
    });
    const std::vector<IndexedWord> expected{{}, {0}, {1}, {0, 0}, {0, 1}, {1, 0}, {1, 1}};
    CHECK(seen == expected);

    for (std::size_t k = 1; k <= 3; ++k)
        for (std::size_t len = 0; len <= 5; ++len) {
            std::uint64_t n = 0;
            enumerate_words(k, len, [&](const IndexedWord&) { return ++n, true; });
            CHECK(n == words_up_to(k, len));
        }
    CHECK(words_up_to(2, 8) == 511);
    CHECK(words_up_to(1, 0) == 1);
    CHECK_THROWS_AS(words_up_to(2, 64), InputError);
}

TEST_CASE("bounded_witness_search") {
    SUBCASE("strict-empty gadget has no strict member") {
        const auto r = bounded_witness_search(empty_strict_mmqfa(kAB, Rational(3, 4), Rational(1, 4)),
                                              strict(Rational(3, 4)), 6);
        CHECK(r.exhausted());
        CHECK(r.words_checked == 127);
        CHECK(r.max_len == 6);
        CHECK(r.boundary_words.empty());
    }
    SUBCASE("universal gadget: epsilon is a member") {
        const auto r = bounded_witness_search(full_nonstrict_mmqfa(kAB, Rational(1, 2)), nonstrict(Rational(1, 2)), 3);
        REQUIRE(r.witness);
        CHECK(r.witness->word.empty());
        CHECK(r.witness->verdict.verdict == VerdictClass::Boundary);
        CHECK(r.words_checked == 1);
        CHECK(r.boundary_words.size() == 1);
    }
    SUBCASE("constant 9/10 beats 1/2 on epsilon") {
        const auto r = bounded_witness_search(constant_mmqfa(Rational(9, 10)), strict(Rational(1, 2)), 4);
        REQUIRE(r.witness);
        CHECK(r.witness->word.empty());
        CHECK(std::abs(r.witness->verdict.probability - 0.9) <= 1e-12);
    }
    SUBCASE("invalid cutpoint") {
        CHECK_THROWS_AS(bounded_witness_search(constant_mmqfa(Rational(1, 2)), strict(Rational(0)), 2), ParameterError);
        CHECK_THROWS_AS(bounded_witness_search(constant_mmqfa(Rational(1, 2)), strict(Rational(3, 2)), 2),
                        ParameterError);
    }
}

TEST_CASE("witness search is monotone in max_len and returns the minimum") {
    // P(a^k) = sin^2(k theta); with theta = 0.3 the first word above 1/2 is aaa.
    const Machine m = rotation_moqfa(0.3);
    const auto q = strict(Rational(1, 2));
    std::optional<Word> first;
    for (std::size_t len = 0; len <= 7; ++len) {
        const auto r = bounded_witness_search(m, q, len);
        if (r.witness) {
            if (!first) first = r.witness->word;
            CHECK(r.witness->word == *first);
        } else {
            CHECK_FALSE(first.has_value());
            CHECK(r.words_checked == words_up_to(2, len));
        }
    }
    REQUIRE(first);
    CHECK(*first == Word{"a", "a", "a"});

    // Independent check of minimality: nothing shorter-or-earlier qualifies.
    bool found_earlier = false;
    enumerate_words(2, 3, [&](const IndexedWord& w) {
        if (spell(kAB, w) == *first) return false;
        found_earlier |= membership(accept_prob(m, w), q).strict_member();
        return true;
    });
    CHECK_FALSE(found_earlier);
}

TEST_CASE("bounded_universality") {
    const auto full = bounded_universality(full_nonstrict_mmqfa(kAB, Rational(1, 2)), nonstrict(Rational(1, 2)), 6);
    CHECK(full.exhausted());
    CHECK(full.words_checked == 127);
    CHECK(full.boundary_words.size() == 127);

    const Mmqfa empty = empty_strict_mmqfa(kAB, Rational(3, 4), Rational(1, 4));
    // P = 1/2 everywhere: a Boundary verdict at 1/2 counts as a nonstrict member...
    CHECK(bounded_universality(empty, nonstrict(Rational(1, 2)), 6).exhausted());
    // ...but not as a strict one.
    const auto strict_half = bounded_universality(empty, strict(Rational(1, 2)), 6);
    REQUIRE(strict_half.witness);
    CHECK(strict_half.witness->word.empty());
    CHECK(strict_half.witness->verdict.verdict == VerdictClass::Boundary);
    // At 3/4 every word is below the cutpoint.
    const auto at_three_quarters = bounded_universality(empty, nonstrict(Rational(3, 4)), 6);
    REQUIRE(at_three_quarters.witness);
    CHECK(at_three_quarters.witness->word.empty());
    CHECK(at_three_quarters.witness->verdict.verdict == VerdictClass::Below);
}

TEST_CASE("bounded_equivalence") {
    const Mmqfa empty = empty_strict_mmqfa(kAB, Rational(3, 4), Rational(1, 4));
    const auto pair = strict_equivalence_reduction(empty, Rational(3, 4), Rational(1, 4));
    CHECK(bounded_equivalence(pair.left, pair.right, strict(Rational(3, 4)), 8).exhausted());

    const auto r = bounded_equivalence(constant_mmqfa(Rational(9, 10)), empty, strict(Rational(1, 2)), 8);
    REQUIRE(r.witness);
    CHECK(r.witness->word.empty());
    CHECK(r.witness->verdict.strict_member());
    CHECK_FALSE(r.witness->other->strict_member());

    Rng rng(21);
    for (int t = 0; t < 20; ++t) {
        const Machine m = testing::random_mmqfa(rng, 4, 2);
        for (auto mode : {CutpointMode::Strict, CutpointMode::Nonstrict})
            CHECK(bounded_equivalence(m, m, {Rational(1, 3), mode}, 5).exhausted());
    }

    const Machine other_alphabet = embed_moqfa_to_mmqfa(constant_moqfa(Alphabet{"x"}, Rational(1, 2)));
    CHECK_THROWS_AS(bounded_equivalence(empty, other_alphabet, strict(Rational(1, 2)), 2), InputError);
}

TEST_CASE("bounded_equivalence separates word-dependent machines") {
    const Machine slow = rotation_moqfa(0.3);
    const Machine fast = rotation_moqfa(0.6);
    const auto r = bounded_equivalence(slow, fast, strict(Rational(1, 2)), 4);
    REQUIRE(r.witness);
    // sin^2(0.6) < 1/2 < sin^2(1.2): 'aa' is the first word with different membership.
    CHECK(r.witness->word == Word{"a", "a"});
    CHECK(r.words_checked == 4);
}

TEST_CASE("bounded_containment") {
    const Mmqfa empty = empty_strict_mmqfa(kAB, Rational(3, 4), Rational(1, 4));
    const Mmqfa high = constant_mmqfa(Rational(9, 10));

    const auto from_empty = bounded_containment(empty, high, strict(Rational(3, 4)), 6);
    CHECK(from_empty.exhausted());
    CHECK(from_empty.proper_witness_found);
    CHECK(from_empty.proper_witness == Word{});

    const auto r = bounded_containment(high, empty, strict(Rational(1, 2)), 6);
    REQUIRE(r.witness);
    CHECK(r.witness->word.empty());

    const auto self = bounded_containment(high, high, strict(Rational(1, 2)), 5);
    CHECK(self.exhausted());
    CHECK_FALSE(self.proper_witness_found);

    const Machine other_alphabet = embed_moqfa_to_mmqfa(constant_moqfa(Alphabet{"x"}, Rational(1, 2)));
    CHECK_THROWS_AS(bounded_containment(empty, other_alphabet, strict(Rational(1, 2)), 2), InputError);
}

TEST_CASE("searches over PFAs and MOQFAs") {
    Pfa p;
    p.alphabet = kAB;
    p.dim = 2;
    p.initial = RealVector{1.0, 0.0};
    p.transitions = {RealMatrix{{0.0, 1.0}, {1.0, 0.0}}, RealMatrix::identity(2)};
    p.final = {1, 0};
    // P(w) = 1 iff w has an even number of a's.
    const auto r = bounded_universality(p, nonstrict(Rational(1, 2)), 3);
    REQUIRE(r.witness);
    CHECK(r.witness->word == Word{"a"});
    CHECK(bounded_witness_search(p, strict(Rational(1, 2)), 3).witness->word.empty());
}
