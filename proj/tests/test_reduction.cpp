#include "gb/reduction.hpp"

#include "doctest.h"
#include "helpers.hpp"

using namespace gb;
using gbtest::P;
using gbtest::Ps;
using gbtest::random_poly;

namespace {
const TermOrder kLex{MonomialOrder::Lex, TermExtension::POT};
}

TEST_CASE("red_single reproduces the worked reductions") {
    VecPoly f1 = P(kLex, "x1^2"), f2 = P(kLex, "x0*x1 + x0^2");
    CHECK(red_single(kLex, P(kLex, "x0*x1^2"), f1, PowerProduct::variable(0)).is_zero());
    CHECK(red_single(kLex, P(kLex, "x0*x1^2"), f2, PowerProduct::variable(1)) ==
          P(kLex, "-x0^2*x1"));
    // p ->_{p,1} 0 always
    std::mt19937 rng(40);
    for (int i = 0; i < 50; ++i) {
        VecPoly p = random_poly(rng, kLex, 4);
        if (p.is_zero()) continue;
        CHECK(red_single(kLex, p, p, PowerProduct{}).is_zero());
    }
    CHECK_THROWS(red_single(kLex, P(kLex, "x0"), VecPoly{}, PowerProduct{}));
    CHECK_THROWS(red_single(kLex, P(kLex, "x0"), f1, PowerProduct{}));
}

TEST_CASE("red_single decreases the strict polynomial order") {
    std::mt19937 rng(41);
    for (int i = 0; i < 200; ++i) {
        VecPoly p = random_poly(rng, kLex, 5);
        VecPoly f = random_poly(rng, kLex, 3);
        if (p.is_zero() || f.is_zero()) continue;
        // choose a reducible term of p if any
        for (const auto& m : p.monomials()) {
            if (auto t = dvd_term(f.lt(), m.term)) {
                CHECK(compare_poly_strict(kLex, red_single(kLex, p, f, *t), p));
                break;
            }
        }
    }
}

TEST_CASE("find_reducer takes the first match") {
    auto fs = Ps(kLex, {"x1^2", "x0*x1 + x0^2", "x0^3"});
    Term v{PowerProduct::variable(0, 5), 0};
    auto step = find_reducer(v, fs);
    REQUIRE(step);
    CHECK(step->reducer_index == 2);
    CHECK(step->multiplier_pp == PowerProduct::variable(0, 2));

    auto fs2 = Ps(kLex, {"x1^2", "x0*x1 + x0^2"});
    CHECK(!find_reducer(v, fs2));
    CHECK(!find_reducer(v, std::span<const VecPoly>{}));
}

TEST_CASE("is_red") {
    auto F = Ps(kLex, {"x1^2", "x0*x1 + x0^2"});
    CHECK(!is_red(F, P(kLex, "x0^5")));
    CHECK(!is_red(F, VecPoly{}));
    CHECK(is_red(F, P(kLex, "x0*x1^2")));

    std::mt19937 rng(42);
    for (int i = 0; i < 100; ++i) {
        auto fs = Ps(kLex, {});
        for (int k = 0; k < 3; ++k) fs.push_back(random_poly(rng, kLex, 3));
        VecPoly p = random_poly(rng, kLex, 5);
        bool expected = false;
        for (const auto& m : p.monomials())
            if (find_reducer(m.term, fs)) expected = true;
        CHECK(is_red(fs, p) == expected);
    }
}

TEST_CASE("trd golden cases") {
    VecPoly f2 = P(kLex, "x0*x1 + x0^2"), f3 = P(kLex, "x0^3");
    std::vector<VecPoly> just_f2 = {f2}, just_f3 = {f3};
    CHECK(trd(kLex, just_f2, P(kLex, "-x0^2*x1")) == P(kLex, "x0^3"));
    CHECK(trd(kLex, just_f3, P(kLex, "x0^4")).is_zero());
    VecPoly p = P(kLex, "x0^2 - x1");
    CHECK(trd(kLex, std::span<const VecPoly>{}, p) == p);
}

TEST_CASE("trd zero entries in the reducer list are skipped") {
    std::vector<VecPoly> fs = {VecPoly{}, P(kLex, "x0")};
    CHECK(trd(kLex, fs, P(kLex, "x0^2")).is_zero());
}

TEST_CASE("trd postconditions with membership residual") {
    std::mt19937 rng(43);
    for (int i = 0; i < 150; ++i) {
        std::vector<VecPoly> fs;
        for (int k = 0; k < 3; ++k) fs.push_back(random_poly(rng, kLex, 3, 3, 2, 2));
        VecPoly p = random_poly(rng, kLex, 6, 3, 3, 2);
        Combination track;
        VecPoly r = trd(kLex, fs, p, &track);
        CHECK(!is_red(fs, r));
        // p - r = sum of tracked multiples of fs, exactly
        CHECK(track.evaluate(kLex, fs) == poly_sub(kLex, p, r));
    }
}

TEST_CASE("non-confluence witness of the two-element system") {
    // From x0*x1^2 two reduction paths reach 0 and x0^3; both irreducible.
    VecPoly f1 = P(kLex, "x1^2"), f2 = P(kLex, "x0*x1 + x0^2");
    std::vector<VecPoly> F = {f1, f2};
    VecPoly start = P(kLex, "x0*x1^2");

    VecPoly a = red_single(kLex, start, f1, PowerProduct::variable(0));
    CHECK(a.is_zero());

    VecPoly b = red_single(kLex, start, f2, PowerProduct::variable(1));
    b = red_single(kLex, b, f2, PowerProduct::variable(0));
    CHECK(b == P(kLex, "x0^3"));
    CHECK(!is_red(F, b));
    CHECK(!(a == b));
}
