#include <catch2/catch_amalgamated.hpp>

#include "sympel/sympel.hpp"

#include "oracles.hpp"

using namespace sympel;

namespace {
SquareMatrix<RationalField> rq(std::string_view text) {
    return parse_matrix_file(text, RationalField{});
}
}  // namespace

TEST_CASE("empty transcript and identity scale leave the matrix unchanged") {
    RationalField f;
    auto m = rq("1 2\n3 4");
    Transcript<RationalField> t{1, {}};
    CHECK(conjugate_by_transcript(m, t, SquareMatrix<RationalField>::identity(f, 1)) == m);
}

TEST_CASE("conjugating by the identity is the identity map") {
    auto m = rq("1 2\n3 4");
    CHECK(conjugate_by_symplectic(m, SquareMatrix<RationalField>::identity({}, 1)) == m);
}

TEST_CASE("conjugating by the j form") {
    auto m = rq("1 2\n3 4");
    auto s = j_form(RationalField{}, 1);
    CHECK(conjugate_by_symplectic(m, s) == rq("4 -3\n-2 1"));
}

TEST_CASE("a single elementary factor matches the dense computation") {
    RationalField f;
    SplitMix64 rng(404);
    Generator<RationalField> g(GenKind::E, 0, 1, mpq_class(5, 2), 2, f);
    auto s = materialize(g);
    auto m = oracle::random_matrix(f, 2, rng);
    CHECK(conjugate_by_symplectic(m, s) == oracle::inverse(s) * m * s);
}

TEST_CASE("random conjugations match the dense oracle exactly") {
    RationalField f;
    SplitMix64 rng(515);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t ell = 1 + rng.below(3);
        auto m = oracle::random_matrix(f, ell, rng);
        auto s = random_symplectic(f, ell, 8 * ell, rng.next());
        auto got = conjugate_by_symplectic(m, s);
        CHECK(got == oracle::inverse(s) * m * s);
        CHECK(trace(got) == trace(m));
        CHECK(determinant(got) == determinant(m));
    }
}

TEST_CASE("conjugation composes over products of symplectic matrices") {
    RationalField f;
    SplitMix64 rng(616);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t ell = 1 + rng.below(2);
        auto m = oracle::random_matrix(f, ell, rng);
        auto s1 = random_symplectic(f, ell, 10, rng.next());
        auto s2 = random_symplectic(f, ell, 10, rng.next());
        auto stepwise = conjugate_by_symplectic(conjugate_by_symplectic(m, s1), s2);
        CHECK(stepwise == conjugate_by_symplectic(m, s1 * s2));
    }
}

TEST_CASE("the characteristic polynomial is invariant under conjugation") {
    RationalField f;
    SplitMix64 rng(717);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t ell = 1 + rng.below(3);
        auto m = oracle::random_matrix(f, ell, rng);
        auto s = random_symplectic(f, ell, 6 * ell, rng.next());
        auto before = oracle::char_poly(m);
        auto after = oracle::char_poly(conjugate_by_symplectic(m, s));
        REQUIRE(before.size() == after.size());
        for (std::size_t k = 0; k < before.size(); ++k) CHECK(before[k] == after[k]);
    }
}

TEST_CASE("conjugation over a prime field") {
    PrimeField f(11);
    SplitMix64 rng(818);
    for (int trial = 0; trial < 10; ++trial) {
        auto m = oracle::random_matrix(f, 2, rng, 0, 10);
        auto s = random_symplectic(f, 2, 16, rng.next());
        CHECK(conjugate_by_symplectic(m, s) == oracle::inverse(s) * m * s);
    }
}

TEST_CASE("preconditions") {
    auto m = rq("1 2\n3 4");
    CHECK_THROWS_AS(conjugate_by_symplectic(m, rq("2 0\n0 3")), error);  // not symplectic

    RationalField f;
    Transcript<RationalField> t{1, {}};
    auto zero_diag = SquareMatrix<RationalField>(f, 1);
    CHECK_THROWS_AS(conjugate_by_transcript(m, t, zero_diag), error);

    auto not_diag = rq("1 1\n0 1");
    CHECK_THROWS_AS(conjugate_by_transcript(m, t, not_diag), error);

    auto big = SquareMatrix<RationalField>::identity(f, 2);
    CHECK_THROWS_AS(conjugate_by_symplectic(m, big), error);
}

TEST_CASE("transcript plus diagonal reproduces the dense similarity transform") {
    RationalField f;
    SplitMix64 rng(919);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t ell = 1 + rng.below(2);
        auto s = random_symplectic(f, ell, 12, rng.next());
        auto m = oracle::random_matrix(f, ell, rng);
        auto factored = eliminate(s);
        auto got = conjugate_by_transcript(m, factored.transcript, factored.diagonal);
        CHECK(got == oracle::inverse(s) * m * s);
    }
}
