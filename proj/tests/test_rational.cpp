#include "gb/rational.hpp"

#include "doctest.h"

#include <random>

using gb::Rational;

namespace {

Rational random_rational(std::mt19937& rng, bool nonzero = false) {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 50);
    long n = num(rng);
    while (nonzero && n == 0) n = num(rng);
    return Rational(n, den(rng));
}

}  // namespace

TEST_CASE("canonical construction") {
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(4, -6).to_string() == "-2/3");
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("large operands reduce correctly") {
    // 200-digit numerator/denominator sharing a factor; checked by
    // cross-multiplication against the unreduced pair.
    mpz_class base(1);
    for (int i = 0; i < 200; ++i) base *= 10;
    mpz_class n = (base + 12345) * 7;
    mpz_class d = (base + 67891) * 7;
    Rational r{mpq_class(n) / mpq_class(d)};
    CHECK(r.numerator() * d == r.denominator() * n);
    CHECK(gcd(mpz_class(abs(r.numerator())), r.denominator()) == 1);
}

TEST_CASE("basic arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("mul by inverse is one") {
    std::mt19937 rng(1);
    for (int i = 0; i < 100; ++i) {
        Rational a = random_rational(rng, true);
        CHECK(a * a.inverse() == Rational(1));
    }
}

TEST_CASE("harmonic sum matches integer-only accumulation") {
    // Oracle: accumulate over the common denominator 20! with integer arithmetic.
    mpz_class fact(1);
    for (int k = 1; k <= 20; ++k) fact *= k;
    mpz_class num(0);
    for (int k = 1; k <= 20; ++k) num += fact / k;
    Rational sum(0);
    for (int k = 1; k <= 20; ++k) sum += Rational(1, k);
    CHECK(sum == Rational{mpq_class(num) / mpq_class(fact)});
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(2);
    for (int i = 0; i < 200; ++i) {
        Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("text round trip") {
    std::mt19937 rng(3);
    for (int i = 0; i < 100; ++i) {
        Rational a = random_rational(rng);
        CHECK(Rational::from_string(a.to_string()) == a);
    }
    CHECK(Rational::from_string("7") == Rational(7));
    CHECK(Rational::from_string("-3/9") == Rational(-1, 3));
    CHECK_THROWS(Rational::from_string("1/0"));
    CHECK_THROWS(Rational::from_string("abc"));
}
