#ifndef GB_TEST_HELPERS_HPP
#define GB_TEST_HELPERS_HPP

#include "gb/text.hpp"

#include <random>
#include <string>
#include <vector>

namespace gbtest {

inline gb::VecPoly P(gb::TermOrder ord, const std::string& src) {
    return gb::parse_poly(ord, src);
}

inline std::vector<gb::VecPoly> Ps(gb::TermOrder ord, std::initializer_list<std::string> srcs) {
    std::vector<gb::VecPoly> out;
    for (const auto& s : srcs) out.push_back(P(ord, s));
    return out;
}

inline gb::PowerProduct random_pp(std::mt19937& rng, gb::VarIndex nvars, gb::Exponent maxexp) {
    std::uniform_int_distribution<gb::Exponent> e(0, maxexp);
    std::vector<std::pair<gb::VarIndex, gb::Exponent>> fs;
    for (gb::VarIndex v = 0; v < nvars; ++v) {
        gb::Exponent x = e(rng);
        if (x) fs.push_back({v, x});
    }
    return gb::PowerProduct(std::move(fs));
}

inline gb::VecPoly random_poly(std::mt19937& rng, gb::TermOrder ord, int nterms,
                               gb::VarIndex nvars = 3, gb::Exponent maxexp = 3,
                               gb::ComponentIndex ncomps = 1) {
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::vector<gb::Monomial> ms;
    for (int i = 0; i < nterms; ++i) {
        long c = coeff(rng);
        if (c == 0) continue;
        ms.push_back({gb::Rational(c),
                      gb::Term{random_pp(rng, nvars, maxexp),
                               static_cast<gb::ComponentIndex>(rng() % ncomps)}});
    }
    return gb::VecPoly(ord, std::move(ms));
}

}  // namespace gbtest

#endif
