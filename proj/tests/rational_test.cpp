#include "bzeta/rational.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using bzeta::BigInt;
using bzeta::BigRational;

TEST_CASE("factorial basics") {
    CHECK(bzeta::factorial(0) == 1);
    CHECK(bzeta::factorial(1) == 1);
    CHECK(bzeta::factorial(5) == 120);
    CHECK(bzeta::factorial(20) == BigInt("2432902008176640000"));
    CHECK_THROWS_AS(bzeta::factorial(-1), std::invalid_argument);
}

TEST_CASE("factorial against iterative u64 oracle") {
    for (int n = 0; n <= 20; ++n)
        CHECK(bzeta::factorial(n) == BigInt(std::to_string(oracles::factorial_u64(n))));
    for (int n = 1; n <= 64; ++n)
        CHECK(bzeta::factorial(n) == BigInt(n) * bzeta::factorial(n - 1));
}

TEST_CASE("binomial basics and conventions") {
    CHECK(bzeta::binomial(4, 1) == 4);
    CHECK(bzeta::binomial(6, 3) == 20);
    CHECK(bzeta::binomial(5, 7) == 0);
    CHECK(bzeta::binomial(5, -1) == 0);
    CHECK(bzeta::binomial(0, 0) == 1);
    CHECK_THROWS_AS(bzeta::binomial(-2, 1), std::invalid_argument);
}

TEST_CASE("binomial against Pascal-triangle oracle, symmetry, recurrence") {
    for (int n = 0; n <= 64; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(bzeta::binomial(n, k) == oracles::pascal_binomial(n, k));
            CHECK(bzeta::binomial(n, k) == bzeta::binomial(n, n - k));
            if (k >= 1 && k < n)
                CHECK(bzeta::binomial(n, k) ==
                      bzeta::binomial(n - 1, k - 1) + bzeta::binomial(n - 1, k));
        }
}

TEST_CASE("pow2 exact rational powers") {
    CHECK(bzeta::pow2(0) == BigRational(1));
    CHECK(bzeta::pow2(-4) == BigRational(1, 16));
    CHECK(bzeta::pow2(10) == BigRational(1024));
    CHECK(bzeta::pow2(-1) * bzeta::pow2(1) == BigRational(1));
}

TEST_CASE("canonical form at construction") {
    CHECK(BigRational(2, 4).str() == "1/2");
    CHECK(BigRational(-2, 4).str() == "-1/2");
    CHECK(BigRational(2, -4).str() == "-1/2");
    CHECK(BigRational(-2, -4).str() == "1/2");
    CHECK(BigRational(0, 5).str() == "0");
    CHECK(BigRational(5, 1).str() == "5");  // no "/1"
    CHECK(BigRational(6, 3).den() == 1);
    CHECK(BigRational(6, 3).is_integer());
    CHECK(BigRational(30, 42) == BigRational(5, 7));
    CHECK_THROWS_AS(BigRational(1, 0), std::invalid_argument);
}

TEST_CASE("cross-multiplied equality and ordering") {
    CHECK(BigRational(1, 3) == BigRational(2, 6));
    CHECK(BigRational(1, 3) != BigRational(1, 4));
    CHECK(BigRational(-1, 2) < BigRational(1, 3));
    CHECK(BigRational(1, 3) < BigRational(1, 2));
    CHECK(BigRational(-1, 2) < BigRational(-1, 3));
    CHECK(BigRational(1, 2) >= BigRational(1, 2));
}

TEST_CASE("arithmetic spot values") {
    CHECK(BigRational(1, 2) + BigRational(1, 3) == BigRational(5, 6));
    CHECK(BigRational(1, 2) - BigRational(1, 3) == BigRational(1, 6));
    CHECK(BigRational(2, 3) * BigRational(3, 4) == BigRational(1, 2));
    CHECK(BigRational(1, 2) / BigRational(1, 4) == BigRational(2));
    CHECK((-BigRational(1, 2)).str() == "-1/2");
    CHECK(BigRational(-7, 3).abs() == BigRational(7, 3));
    CHECK_THROWS_AS(BigRational(1) / BigRational(0), std::domain_error);
}

TEST_CASE("field laws on random rationals") {
    std::mt19937 rng(20260815);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 50);
    auto draw = [&] { return BigRational(num(rng), den(rng)); };
    for (int i = 0; i < 200; ++i) {
        const BigRational a = draw(), b = draw(), c = draw();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + BigRational(0) == a);
        CHECK(a * BigRational(1) == a);
        CHECK(a - a == BigRational(0));
        if (!a.is_zero())
            CHECK(a / a == BigRational(1));
    }
}

TEST_CASE("serialization round trip") {
    const char* cases[] = {"0", "1", "-1", "7", "1/6", "-1/2", "-691/2730", "123456789/987654321"};
    for (const char* s : cases) {
        const BigRational v = BigRational::parse(s);
        CHECK(v.str() == BigRational::parse(v.str()).str());
    }
    CHECK(BigRational::parse("-1/2") == BigRational(-1, 2));
    CHECK(BigRational::parse("4/6") == BigRational(2, 3));  // reduced on input
    CHECK(BigRational::parse("1/-2") == BigRational(-1, 2));
}

TEST_CASE("parse rejects malformed input") {
    for (const char* s : {"", "/", "1/", "/2", "1//2", "a", "1.5", " 1", "1 ", "1/0", "--1", "-"})
        CHECK_THROWS_AS(BigRational::parse(s), std::invalid_argument);
}

TEST_CASE("to_double") {
    CHECK(BigRational(1, 2).to_double() == 0.5);
    CHECK(BigRational(-1, 4).to_double() == -0.25);
    CHECK(BigRational(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}
