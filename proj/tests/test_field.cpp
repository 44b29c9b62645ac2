#include <random>

#include <catch_amalgamated.hpp>

#include "graphnil/field.hpp"

using namespace graphnil;

TEST_CASE("field spec parsing") {
    CHECK(FieldSpec::parse("q").kind == FieldSpec::Kind::Rationals);
    const auto fp = FieldSpec::parse("fp:17");
    CHECK(fp.kind == FieldSpec::Kind::PrimeField);
    CHECK(fp.p == 17);
    CHECK(FieldSpec::parse("q").to_string() == "q");
    CHECK(FieldSpec::parse("fp:3").to_string() == "fp:3");
    CHECK_THROWS_AS(FieldSpec::parse("r"), error);
    CHECK_THROWS_AS(FieldSpec::parse("fp:"), error);
    CHECK_THROWS_AS(FieldSpec::parse("fp:abc"), error);
    CHECK_THROWS_AS(FieldSpec::parse(""), error);
}

TEST_CASE("characteristic two and composite moduli are rejected") {
    CHECK_THROWS_WITH(PrimeField(2), "characteristic two not allowed");
    CHECK_THROWS_AS(PrimeField(9), error);
    CHECK_THROWS_AS(PrimeField(1), error);
    CHECK_THROWS_AS(PrimeField(0), error);
    CHECK_THROWS_AS(PrimeField(1ull << 33), error);
    CHECK_THROWS_AS(field_create({FieldSpec::Kind::PrimeField, 2}), error);
}

TEST_CASE("prime field arithmetic") {
    const PrimeField f3(3);
    CHECK(f3.inv(2) == 2); // 2*2 = 4 = 1 mod 3
    CHECK(f3.mul(2, 2) == 1);
    CHECK(f3.add(2, 2) == 1);
    CHECK(f3.neg(1) == 2);
    CHECK(f3.characteristic() == 3);

    const PrimeField f(101);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const auto a = f.random_nonzero(rng);
        CHECK(f.mul(a, f.inv(a)) == f.one());
    }
    CHECK(f.parse("-1") == 100);
    CHECK(f.parse("205") == 3);
    CHECK(f.to_string(42) == "42");
}

TEST_CASE("rational arithmetic stays reduced") {
    const Rationals q;
    const auto half = q.parse("1/2");
    CHECK(q.to_string(q.add(half, half)) == "1");
    CHECK(q.to_string(q.parse("2/4")) == "1/2");
    CHECK(q.to_string(q.parse("-3/-6")) == "1/2");
    CHECK(q.to_string(q.parse("3/-6")) == "-1/2");
    CHECK(q.to_string(q.parse("0/7")) == "0");
    CHECK(q.to_string(q.from_int(-5)) == "-5");
    CHECK(q.to_string(q.mul(q.parse("2/3"), q.parse("3/2"))) == "1");
    CHECK(q.to_string(q.inv(q.parse("-4/6"))) == "-3/2");
    CHECK_THROWS_AS(q.parse("1/0"), error);
    CHECK_THROWS_AS(q.parse("x"), error);
    CHECK_THROWS_AS(q.inv(q.zero()), error);
    CHECK(q.characteristic() == 0);
}

TEST_CASE("rationals never overflow") {
    const Rationals q;
    // 100! / 99! = 100, forcing intermediate values far beyond 64 bits
    auto big = q.one();
    for (int i = 1; i <= 100; ++i)
        big = q.mul(big, q.from_int(i));
    auto smaller = q.one();
    for (int i = 1; i <= 99; ++i)
        smaller = q.mul(smaller, q.from_int(i));
    CHECK(q.to_string(q.mul(big, q.inv(smaller))) == "100");
    const auto huge = q.parse("123456789012345678901234567890/2");
    CHECK(q.to_string(q.add(huge, huge)) == "123456789012345678901234567890");
}

TEMPLATE_TEST_CASE("field axioms on random triples", "", Rationals, PrimeField) {
    auto make = [] {
        if constexpr (std::is_same_v<TestType, Rationals>)
            return Rationals();
        else
            return PrimeField(13);
    };
    const auto f = make();
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const auto a = f.random(rng), b = f.random(rng), c = f.random(rng);
        CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        CHECK(f.add(a, f.neg(a)) == f.zero());
        if (!f.is_zero(a))
            CHECK(f.mul(a, f.inv(a)) == f.one());
        CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
    }
}

TEST_CASE("scalar strings round-trip") {
    const Rationals q;
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const auto a = q.random(rng);
        CHECK(q.parse(q.to_string(a)) == a);
    }
    const PrimeField f7(7);
    for (std::uint64_t r = 0; r < 7; ++r)
        CHECK(f7.parse(f7.to_string(r)) == r);
}
