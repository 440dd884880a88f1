#include "gb/text.hpp"

#include "doctest.h"
#include "gb/problem.hpp"
#include "gb/systems.hpp"
#include "helpers.hpp"

#include <cstdio>
#include <fstream>

using namespace gb;
using gbtest::P;
using gbtest::random_poly;

namespace {
const TermOrder kLex{MonomialOrder::Lex, TermExtension::POT};
const TermOrder kDrl{MonomialOrder::DegRevLex, TermExtension::POT};
}  // namespace

TEST_CASE("poly_to_string canonical form") {
    CHECK(poly_to_string(VecPoly{}) == "0");
    CHECK(poly_to_string(P(kLex, "x0")) == "x0");
    CHECK(poly_to_string(P(kLex, "-x0")) == "-x0");
    CHECK(poly_to_string(P(kLex, "x1^2 - x0*x1")) == "x1^2 - x0*x1");
    CHECK(poly_to_string(P(kLex, "3 + 2*x0 - 1/2*x1")) == "-1/2*x1 + 2*x0 + 3");
    CHECK(poly_to_string(P(kLex, "x0*x0*x0")) == "x0^3");
    // POT: higher components are greater, so the e(1) part prints first
    CHECK(poly_to_string(P(kLex, "x1^2 + 2*x0*e(1) + 3*e(1)")) ==
          "2*x0*e(1) + 3*e(1) + x1^2*e(0)");
    // named variables
    VarTable vars{{"x", "y"}};
    CHECK(poly_to_string(parse_poly(kLex, "x*y^2 - 2", vars), vars) == "x*y^2 - 2");
}

TEST_CASE("parser accepts grammar variations") {
    CHECK(P(kLex, "  - x0 ^ 2 * 3 ") == P(kLex, "-3*x0^2"));
    CHECK(P(kLex, "2*(x0 + 1)*(x0 - 1)") == P(kLex, "2*x0^2 - 2"));
    CHECK(P(kLex, "1/3*x0 + 1/6*x0") == P(kLex, "1/2*x0"));
    CHECK(P(kLex, "x0 - x0").is_zero());
    CHECK(P(kLex, "0").is_zero());
    CHECK(P(kLex, "(x0 + x1)*e(2)") == P(kLex, "x0*e(2) + x1*e(2)"));
    CHECK(P(kLex, "7/2") == VecPoly::constant(Rational(7, 2)));
}

TEST_CASE("parser error positions and rejections") {
    for (const char* bad : {"", "x0 +", "x0 ** x1", "e(0)*e(1)", "(x0", "x0^", "x^2",
                            "1/0", "x0*x1 x2", "e()", "e(x0)", "@"}) {
        CHECK_THROWS_AS(parse_poly(kLex, bad), ParseError);
    }
    // genuinely non-scalar * non-scalar products are rejected even via parentheses
    CHECK_THROWS_AS(parse_poly(kLex, "(x0 + e(1))*(x1 + e(2))"), ParseError);
    // but e(0) embeds the scalar unit, so these products are well-defined
    CHECK(P(kLex, "(x0 + e(1))*(x1 + e(0))") == P(kLex, "x0*x1 + x0 + x1*e(1) + e(1)"));
    CHECK(P(kLex, "(x0 + 1)*(e(0))*e(1)") == P(kLex, "x0*e(1) + e(1)"));
    // unknown names are rejected when a table is declared
    VarTable vars{{"x", "y"}};
    CHECK_THROWS_AS(parse_poly(kLex, "z + 1", vars), ParseError);
    // error location is reported
    try {
        parse_poly(kLex, "x0 + @");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 6);
    }
}

TEST_CASE("print/parse round trip on random polynomials") {
    std::mt19937 rng(90);
    for (int i = 0; i < 500; ++i) {
        TermOrder ord = (i % 2) ? kDrl : kLex;
        VecPoly p = random_poly(rng, ord, 5, 3, 3, i % 3 ? 1 : 3);
        std::string s = poly_to_string(p);
        CHECK(parse_poly(ord, s) == p);
        // the canonical form is a fixed point
        CHECK(poly_to_string(parse_poly(ord, s)) == s);
    }
}

TEST_CASE("order names") {
    CHECK(*parse_monomial_order("lex") == MonomialOrder::Lex);
    CHECK(*parse_monomial_order("dlex") == MonomialOrder::DegLex);
    CHECK(*parse_monomial_order("drlex") == MonomialOrder::DegRevLex);
    CHECK(!parse_monomial_order("grevlex"));
    CHECK(*parse_term_extension("pot") == TermExtension::POT);
    CHECK(*parse_term_extension("top") == TermExtension::TOP);
    CHECK(!parse_term_extension("bottom"));
    for (MonomialOrder o :
         {MonomialOrder::Lex, MonomialOrder::DegLex, MonomialOrder::DegRevLex})
        CHECK(*parse_monomial_order(order_name(o)) == o);
    for (TermExtension e : {TermExtension::POT, TermExtension::TOP})
        CHECK(*parse_term_extension(extension_name(e)) == e);
}

TEST_CASE("problem text parsing") {
    std::string text =
        "# three generators\n"
        "vars: x y z\n"
        "order: drlex\n"
        "term-order: pot\n"
        "\n"
        "x*y - z\n"
        "x*z - y\n"
        "y*z - x\n";
    Problem pr = parse_problem_text(text, kLex);
    CHECK(pr.order.base == MonomialOrder::DegRevLex);
    CHECK(pr.order.extension == TermExtension::POT);
    CHECK(pr.order_from_file);
    CHECK(pr.extension_from_file);
    REQUIRE(pr.generators.size() == 3);
    CHECK(pr.generators[0] == P(kDrl, "x0*x1 - x2"));
    CHECK(pr.scalar());

    // defaults apply when headers are absent
    Problem pr2 = parse_problem_text("x0^2 - x1\n", kLex);
    CHECK(pr2.order.base == MonomialOrder::Lex);
    CHECK(!pr2.order_from_file);
    CHECK(pr2.generators.size() == 1);

    Problem pr3 = parse_problem_text("x0*e(1) - e(0)\n", kLex);
    CHECK(!pr3.scalar());

    CHECK_THROWS_AS(parse_problem_text("order: fancy\n", kLex), ParseError);
    CHECK_THROWS_AS(parse_problem_text("x0 + (\n", kLex), ParseError);
}

TEST_CASE("problem file loading") {
    std::string path = "test_problem_tmp.gb";
    {
        std::ofstream out(path);
        out << "order: dlex\nx0^3 - 2*x0*x1 + 1\nx1 - x0\n";
    }
    Problem pr = load_problem(path, kLex);
    CHECK(pr.order.base == MonomialOrder::DegLex);
    CHECK(pr.generators.size() == 2);
    std::remove(path.c_str());
    CHECK_THROWS(load_problem("no_such_file.gb", kLex));
}

TEST_CASE("benchmark system generators") {
    // cyclic_3 = [x0+x1+x2, x0*x1+x1*x2+x2*x0, x0*x1*x2-1]
    auto c3 = cyclic_system(3, kDrl);
    REQUIRE(c3.size() == 3);
    CHECK(c3[0] == P(kDrl, "x0 + x1 + x2"));
    CHECK(c3[1] == P(kDrl, "x0*x1 + x1*x2 + x0*x2"));
    CHECK(c3[2] == P(kDrl, "x0*x1*x2 - 1"));
    CHECK(cyclic_system(5, kDrl).size() == 5);

    // katsura_2: linear relation plus the two convolution equations
    auto k2 = katsura_system(2, kDrl);
    REQUIRE(k2.size() == 3);
    CHECK(k2[0] == P(kDrl, "x0 + 2*x1 + 2*x2 - 1"));
    CHECK(k2[1] == P(kDrl, "x0^2 + 2*x1^2 + 2*x2^2 - x0"));
    CHECK(k2[2] == P(kDrl, "2*x0*x1 + 2*x1*x2 - x1"));
    // all generators vanish at the common root hint x1 = x2 = 0, x0 = 1
    for (const auto& f : katsura_system(3, kDrl)) {
        Rational value(0);
        for (const auto& m : f.monomials()) {
            bool uses_others = false;
            for (auto [v, e] : m.term.pp.factors())
                if (v != 0) uses_others = true;
            if (!uses_others) value = value + m.coeff;  // x0 = 1 contributes coeff
        }
        CHECK(value.is_zero());
    }
}
