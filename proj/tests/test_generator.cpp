#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "sympel/sympel.hpp"

#include "oracles.hpp"

using namespace sympel;

namespace {

SquareMatrix<RationalField> rq(std::string_view text) {
    return parse_matrix_file(text, RationalField{});
}

template <FieldType F>
std::vector<Generator<F>> all_generators(const F& f, std::size_t ell,
                                         const std::vector<typename F::Element>& alphas) {
    std::vector<Generator<F>> gens;
    for (const auto& a : alphas) {
        for (std::size_t i = 0; i < ell; ++i)
            for (std::size_t j = 0; j < ell; ++j) {
                if (i != j) gens.emplace_back(GenKind::E, i, j, a, ell, f);
                if (i <= j) {
                    gens.emplace_back(GenKind::F, i, j, a, ell, f);
                    gens.emplace_back(GenKind::H, i, j, a, ell, f);
                }
            }
    }
    return gens;
}

}  // namespace

TEST_CASE("materialized generator shapes") {
    RationalField f;
    mpq_class a(5, 3);

    auto h = materialize(Generator<RationalField>(GenKind::H, 0, 0, a, 1, f));
    CHECK(h == rq("1 0\n5/3 1"));

    auto e = materialize(Generator<RationalField>(GenKind::E, 0, 1, a, 2, f));
    CHECK(e == rq("1 5/3 0 0\n"
                  "0 1 0 0\n"
                  "0 0 1 0\n"
                  "0 0 -5/3 1"));

    auto fg = materialize(Generator<RationalField>(GenKind::F, 0, 1, a, 2, f));
    auto expected = SquareMatrix<RationalField>::identity(f, 2);
    expected(0, 3) = a;  // (1, ell+2) and (2, ell+1), 1-based
    expected(1, 2) = a;
    CHECK(fg == expected);

    auto fd = materialize(Generator<RationalField>(GenKind::F, 1, 1, a, 2, f));
    auto expected_d = SquareMatrix<RationalField>::identity(f, 2);
    expected_d(1, 3) = a;
    CHECK(fd == expected_d);
}

TEST_CASE("generator construction validates its arguments") {
    RationalField f;
    CHECK_THROWS_AS(Generator<RationalField>(GenKind::E, 0, 0, mpq_class(1), 2, f), error);
    CHECK_THROWS_AS(Generator<RationalField>(GenKind::F, 0, 1, mpq_class(0), 2, f), error);
    CHECK_THROWS_AS(Generator<RationalField>(GenKind::H, 0, 2, mpq_class(1), 2, f), error);

    // F/H arguments normalize to i <= j
    Generator<RationalField> g(GenKind::H, 1, 0, mpq_class(3), 2, f);
    CHECK(g.i() == 0);
    CHECK(g.j() == 1);

    Generator<RationalField> e(GenKind::E, 1, 0, mpq_class(3), 2, f);
    CHECK(e.i() == 1);  // E keeps its order
    CHECK(e.j() == 0);
}

TEST_CASE("every generator is symplectic") {
    RationalField f;
    std::vector<mpq_class> alphas = {mpq_class(1), mpq_class(-2), mpq_class(3, 7)};
    for (std::size_t ell : {1, 2, 3})
        for (const auto& g : all_generators(f, ell, alphas)) CHECK(is_symplectic(materialize(g)));

    PrimeField f5(5);
    for (const auto& g : all_generators(f5, std::size_t{2}, {1ull, 2ull, 3ull, 4ull}))
        CHECK(is_symplectic(materialize(g)));
}

TEST_CASE("apply_left matches the dense product, exhaustively over GF(5)") {
    PrimeField f(5);
    for (std::size_t ell : {1, 2, 3}) {
        SplitMix64 rng(1000 + ell);
        for (const auto& g : all_generators(f, ell, {1ull, 2ull, 3ull, 4ull})) {
            auto dense = materialize(g);
            for (int trial = 0; trial < 3; ++trial) {
                auto m = oracle::random_matrix(f, ell, rng, 0, 4);
                auto expected = dense * m;
                auto actual = m;
                apply_left(g, actual);
                REQUIRE(actual == expected);
            }
        }
    }
}

TEST_CASE("apply_left matches the dense product for 100 random pairs over GF(7)") {
    PrimeField f(7);
    SplitMix64 rng(700);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t ell = 1 + rng.below(4);
        auto g = detail::random_generator(f, ell, rng);
        auto m = oracle::random_matrix(f, ell, rng, 0, 6);
        auto applied = m;
        apply_left(g, applied);
        REQUIRE(applied == materialize(g) * m);
    }
}

TEST_CASE("apply_left and apply_right match the dense product over rationals") {
    RationalField f;
    SplitMix64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t ell = 1 + rng.below(3);
        auto g = detail::random_generator(f, ell, rng);
        auto m = oracle::random_matrix(f, ell, rng);
        auto dense = materialize(g);

        auto left = m;
        apply_left(g, left);
        CHECK(left == dense * m);

        auto right = m;
        apply_right(g, right);
        CHECK(right == m * dense);
    }
}

TEST_CASE("single H generator acts as one bottom-row operation") {
    RationalField f;
    auto m = rq("1 0\n1 1");
    apply_left(Generator<RationalField>(GenKind::H, 0, 0, mpq_class(-1), 1, f), m);
    CHECK(m == SquareMatrix<RationalField>::identity(f, 1));
}

TEST_CASE("applying to the identity reproduces the dense form") {
    RationalField f;
    SplitMix64 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t ell = 1 + rng.below(4);
        auto g = detail::random_generator(f, ell, rng);
        auto m = SquareMatrix<RationalField>::identity(f, ell);
        apply_left(g, m);
        CHECK(m == materialize(g));
    }
}

TEST_CASE("generator inversion") {
    RationalField f;
    Generator<RationalField> e(GenKind::E, 0, 1, mpq_class(4), 2, f);
    auto ei = invert_generator(e);
    CHECK(ei.kind() == GenKind::E);
    CHECK(ei.alpha() == -4);
    CHECK(materialize(ei) * materialize(e) == SquareMatrix<RationalField>::identity(f, 2));

    Generator<RationalField> ff(GenKind::F, 0, 0, mpq_class(3), 1, f);
    CHECK(materialize(invert_generator(ff)) * materialize(ff) ==
          SquareMatrix<RationalField>::identity(f, 1));

    Generator<RationalField> h(GenKind::H, 0, 1, mpq_class(7, 2), 2, f);
    CHECK(materialize(invert_generator(h)) * materialize(h) ==
          SquareMatrix<RationalField>::identity(f, 2));

    SplitMix64 rng(15);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t ell = 1 + rng.below(3);
        auto g = detail::random_generator(f, ell, rng);
        auto m = oracle::random_matrix(f, ell, rng);
        auto roundtrip = m;
        apply_left(g, roundtrip);
        apply_left(invert_generator(g), roundtrip);
        CHECK(roundtrip == m);
    }
}

TEST_CASE("row exchange sequence") {
    RationalField f;

    SECTION("the triple product is the signed swap") {
        auto seq = row_exchange_sequence(0, 1, f);
        REQUIRE(seq.size() == 3);
        CHECK(seq.steps[0].kind() == GenKind::F);
        CHECK(seq.steps[1].kind() == GenKind::H);
        CHECK(seq.steps[2].kind() == GenKind::F);
        auto prod = materialize(seq.steps[2]) * materialize(seq.steps[1]) *
                    materialize(seq.steps[0]);
        CHECK(prod == rq("0 1\n-1 0"));
    }

    SECTION("applied to the j form it yields diag(-1, -1)") {
        auto m = j_form(f, 1);
        for (const auto& g : row_exchange_sequence(0, 1, f).steps) apply_left(g, m);
        CHECK(m == rq("-1 0\n0 -1"));
    }

    SECTION("applying it twice negates rows i and ell+i") {
        SplitMix64 rng(21);
        for (int trial = 0; trial < 20; ++trial) {
            std::size_t ell = 1 + rng.below(4);
            std::size_t i = rng.below(ell);
            auto m = oracle::random_matrix(f, ell, rng);
            auto twice = m;
            for (int rep = 0; rep < 2; ++rep)
                for (const auto& g : row_exchange_sequence(i, ell, f).steps) apply_left(g, twice);
            for (std::size_t r = 0; r < m.order(); ++r)
                for (std::size_t c = 0; c < m.order(); ++c) {
                    auto expected = (r == i || r == ell + i) ? f.neg(m(r, c)) : m(r, c);
                    REQUIRE(twice(r, c) == expected);
                }
        }
    }

    CHECK_THROWS_AS(row_exchange_sequence(3, 3, f), error);
}

TEST_CASE("random symplectic synthesis") {
    RationalField f;
    CHECK(random_symplectic(f, 3, 0, 123) == SquareMatrix<RationalField>::identity(f, 3));

    for (std::uint64_t seed : {1, 2, 3}) {
        auto g = random_symplectic(f, 3, 25, seed);
        CHECK(is_symplectic(g));
        CHECK(g == random_symplectic(f, 3, 25, seed));  // deterministic
    }
    CHECK_FALSE(random_symplectic(f, 3, 25, 1) == random_symplectic(f, 3, 25, 2));

    auto p = random_symplectic(PrimeField(11), 2, 30, 9);
    CHECK(is_symplectic(p));
    auto a = random_symplectic(ApproxField(), 2, 10, 9);
    CHECK(is_symplectic(a));

    SECTION("ell = 1 draws only F and H kinds") {
        auto g1 = random_symplectic(f, 1, 40, 4);
        CHECK(is_symplectic(g1));
    }
}
