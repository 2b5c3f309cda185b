#include <catch2/catch_amalgamated.hpp>

#include "sympel/field.hpp"
#include "sympel/prng.hpp"

using namespace sympel;

TEST_CASE("rational parsing normalizes to lowest terms") {
    RationalField f;
    CHECK(f.parse("3/6") == mpq_class(1, 2));
    CHECK(f.parse("-3/6") == mpq_class(-1, 2));
    CHECK(f.parse("007") == 7);
    CHECK(f.parse("-0") == 0);
    CHECK(f.parse("10/5") == 2);
    CHECK(f.to_string(f.parse("3/6")) == "1/2");
    CHECK(f.to_string(f.parse("-4/2")) == "-2");
}

TEST_CASE("rational parse rejects bad literals") {
    RationalField f;
    CHECK_THROWS_AS(f.parse("1/0"), error);
    CHECK_THROWS_AS(f.parse("1/00"), error);
    CHECK_THROWS_AS(f.parse("1/02"), error);  // denominator may not start with 0
    CHECK_THROWS_AS(f.parse("1/-2"), error);
    CHECK_THROWS_AS(f.parse("a"), error);
    CHECK_THROWS_AS(f.parse(""), error);
    CHECK_THROWS_AS(f.parse("1.5"), error);
    CHECK_THROWS_AS(f.parse("1/2/3"), error);
}

TEST_CASE("prime field parsing reduces mod p") {
    PrimeField f(5);
    CHECK(f.parse("7") == 2);
    CHECK(f.parse("-1") == 4);
    CHECK(f.parse("0") == 0);
    CHECK(f.parse("123456789012345678901234567890") == f.parse("0"));  // 10^29 * ... multiple of 5
    CHECK_THROWS_AS(f.parse("1/2"), error);
    CHECK_THROWS_AS(f.parse("x"), error);
}

TEST_CASE("prime field construction validates the modulus") {
    CHECK_NOTHROW(PrimeField(2));
    CHECK_NOTHROW(PrimeField(7919));
    CHECK_THROWS_AS(PrimeField(1), error);
    CHECK_THROWS_AS(PrimeField(4), error);
    CHECK_THROWS_AS(PrimeField(9), error);
    CHECK_THROWS_AS(PrimeField(std::uint64_t{1} << 33), error);
}

TEST_CASE("inversion examples") {
    RationalField q;
    CHECK(q.inv(mpq_class(2)) == mpq_class(1, 2));
    CHECK_THROWS_AS(q.inv(q.zero()), error);

    PrimeField f7(7);
    CHECK(f7.inv(3) == 5);  // 3*5 = 15 = 1 mod 7
    CHECK_THROWS_AS(f7.inv(0), error);

    ApproxField a(1e-12);
    CHECK(a.inv(4.0) == 0.25);
    CHECK_THROWS_AS(a.inv(1e-13), error);
}

TEST_CASE("zero tests") {
    RationalField q;
    CHECK(q.is_zero(q.parse("0/1")));
    CHECK_FALSE(q.is_zero(q.parse("1/3")));

    ApproxField a(1e-12);
    CHECK(a.is_zero(1e-14));
    CHECK_FALSE(a.is_zero(1e-10));
}

TEST_CASE("approx zero test is monotone in the tolerance") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        double v = (rng.unit() - 0.5) * 1e-8;
        double e1 = rng.unit() * 1e-9;
        double e2 = e1 + rng.unit() * 1e-9;
        if (ApproxField(e1).is_zero(v)) CHECK(ApproxField(e2).is_zero(v));
    }
}

TEST_CASE("rational field axioms on random values") {
    RationalField f;
    SplitMix64 rng(99);
    auto rand_q = [&] {
        long num = static_cast<long>(rng.below(39)) - 19;
        long den = 1 + static_cast<long>(rng.below(19));
        mpq_class q(num);
        q /= den;
        return q;
    };
    for (int trial = 0; trial < 300; ++trial) {
        auto a = rand_q(), b = rand_q(), c = rand_q();
        CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        if (!f.is_zero(b)) CHECK(f.mul(f.div(a, b), b) == a);
        if (!f.is_zero(a)) CHECK(f.mul(a, f.inv(a)) == f.one());
    }
}

TEST_CASE("prime field nonzero elements form a multiplicative group") {
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
        PrimeField f(p);
        for (std::uint64_t a = 1; a < p; ++a) {
            CHECK(f.mul(a, f.inv(a)) == 1);
            for (std::uint64_t b = 1; b < p; ++b) {
                auto prod = f.mul(a, b);
                CHECK(prod >= 1);
                CHECK(prod < p);
            }
        }
    }
}

TEST_CASE("float literals") {
    ApproxField a;
    CHECK(a.parse("1.5") == 1.5);
    CHECK(a.parse("-2") == -2.0);
    CHECK(a.parse("1e-3") == 1e-3);
    CHECK(a.parse("2.25E2") == 225.0);
    CHECK_THROWS_AS(a.parse(".5"), error);
    CHECK_THROWS_AS(a.parse("1."), error);
    CHECK_THROWS_AS(a.parse("1e+3"), error);
    CHECK_THROWS_AS(a.parse("1/2"), error);
    CHECK_THROWS_AS(a.parse("nan"), error);
}

TEST_CASE("float formatting round-trips and matches the literal grammar") {
    ApproxField a;
    SplitMix64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        double v = (rng.unit() - 0.5) * std::pow(10.0, static_cast<double>(rng.below(40)) - 20.0);
        std::string s = a.to_string(v);
        CHECK(s.find('+') == std::string::npos);
        CHECK(a.parse(s) == v);
    }
    CHECK(a.parse(a.to_string(1e300)) == 1e300);
}

TEST_CASE("field config specs") {
    auto r = FieldConfig::parse("rational");
    CHECK(r.kind == FieldConfig::Kind::rational);

    auto p = FieldConfig::parse("gfp:13");
    CHECK(p.kind == FieldConfig::Kind::prime);
    CHECK(p.prime == 13);
    CHECK(p.to_string() == "gfp:13");

    auto fl = FieldConfig::parse("float");
    CHECK(fl.kind == FieldConfig::Kind::approx);
    CHECK(fl.eps == default_pivot_eps);
    CHECK(fl.to_string() == "float");

    auto fl2 = FieldConfig::parse("float:1e-8");
    CHECK(fl2.eps == 1e-8);

    CHECK_THROWS_AS(FieldConfig::parse("gfp:4"), error);
    CHECK_THROWS_AS(FieldConfig::parse("gfp:x"), error);
    CHECK_THROWS_AS(FieldConfig::parse("float:-1"), error);
    CHECK_THROWS_AS(FieldConfig::parse("banana"), error);
}
