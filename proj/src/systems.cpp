#include "gb/systems.hpp"

#include <cstdlib>

namespace gb {

std::vector<VecPoly> cyclic_system(unsigned n, TermOrder ord) {
    std::vector<VecPoly> out;
    for (unsigned d = 1; d < n; ++d) {
        std::vector<Monomial> ms;
        for (unsigned i = 0; i < n; ++i) {
            std::vector<std::pair<VarIndex, Exponent>> factors;
            for (unsigned j = 0; j < d; ++j)
                factors.push_back({(i + j) % n, 1});
            ms.push_back({Rational(1), Term{PowerProduct(std::move(factors)), 0}});
        }
        out.push_back(VecPoly(ord, std::move(ms)));
    }
    std::vector<std::pair<VarIndex, Exponent>> all;
    for (unsigned i = 0; i < n; ++i) all.push_back({i, 1});
    out.push_back(VecPoly(ord, {{Rational(1), Term{PowerProduct(std::move(all)), 0}},
                                {Rational(-1), Term{}}}));
    return out;
}

std::vector<VecPoly> katsura_system(unsigned n, TermOrder ord) {
    auto u = [](int l) { return static_cast<VarIndex>(std::abs(l)); };
    std::vector<VecPoly> out;
    {
        std::vector<Monomial> ms;
        ms.push_back({Rational(1), Term{PowerProduct::variable(0), 0}});
        for (unsigned l = 1; l <= n; ++l)
            ms.push_back({Rational(2), Term{PowerProduct::variable(l), 0}});
        ms.push_back({Rational(-1), Term{}});
        out.push_back(VecPoly(ord, std::move(ms)));
    }
    for (unsigned m = 0; m < n; ++m) {
        std::vector<Monomial> ms;
        for (int l = -static_cast<int>(n); l <= static_cast<int>(n); ++l) {
            int k = static_cast<int>(m) - l;
            if (std::abs(k) > static_cast<int>(n)) continue;
            ms.push_back({Rational(1),
                          Term{pp_mul(PowerProduct::variable(u(l)),
                                      PowerProduct::variable(u(k))),
                               0}});
        }
        ms.push_back({Rational(-1), Term{PowerProduct::variable(m), 0}});
        out.push_back(VecPoly(ord, std::move(ms)));
    }
    return out;
}

}  // namespace gb
