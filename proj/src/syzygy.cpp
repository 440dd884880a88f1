#include "gb/syzygy.hpp"

#include <algorithm>
#include <stdexcept>

namespace gb {

std::vector<VecPoly> init_syzygy_list(TermOrder ord, std::span<const VecPoly> bs) {
    for (std::size_t i = 0; i < bs.size(); ++i)
        for (std::size_t j = i + 1; j < bs.size(); ++j)
            if (bs[i] == bs[j])
                throw std::invalid_argument("init_syzygy_list: duplicate generators");
    const auto m = static_cast<ComponentIndex>(bs.size());
    std::vector<VecPoly> out;
    out.reserve(bs.size());
    for (std::size_t i = 0; i < bs.size(); ++i) {
        VecPoly shifted = shift_components(bs[i], m);
        std::vector<Monomial> ms(shifted.monomials().begin(), shifted.monomials().end());
        ms.push_back({Rational(1), Term{PowerProduct{}, static_cast<ComponentIndex>(i)}});
        out.push_back(VecPoly(ord, std::move(ms)));
    }
    return out;
}

std::vector<VecPoly> filter_syzygy_basis(ComponentIndex m, std::span<const VecPoly> gs) {
    std::vector<VecPoly> out;
    for (const auto& g : gs) {
        bool low = std::all_of(g.monomials().begin(), g.monomials().end(),
                               [m](const Monomial& mo) { return mo.term.component < m; });
        if (low && !g.is_zero()) out.push_back(g);
    }
    return out;
}

SyzygyResult syzygy_basis(std::span<const VecPoly> bs, const GbConfig& cfg) {
    if (cfg.term_order.extension != TermExtension::POT)
        throw std::invalid_argument("syzygy_basis: a POT term order is required");
    std::vector<VecPoly> init = init_syzygy_list(cfg.term_order, bs);
    GbResult g = compute_gb(init, cfg);
    SyzygyResult res;
    res.augmented_basis = std::move(g.basis);
    res.syzygies =
        filter_syzygy_basis(static_cast<ComponentIndex>(bs.size()), res.augmented_basis);
    return res;
}

std::vector<CofactorEntry> cofactor_view(TermOrder ord, ComponentIndex m,
                                         std::span<const VecPoly> gs,
                                         std::span<const VecPoly> bs) {
    std::vector<CofactorEntry> out;
    for (const auto& g : gs) {
        CofactorEntry e;
        std::vector<Monomial> high;
        for (const auto& mo : g.monomials())
            if (mo.term.component >= m) high.push_back(mo);
        e.value = unshift_components(VecPoly(ord, std::move(high)), m);
        VecPoly check;
        for (ComponentIndex i = 0; i < m; ++i) {
            e.cofactors.push_back(proj_component(g, i));
            check = poly_add(ord, check, poly_mul(ord, e.cofactors.back(), bs[i]));
        }
        if (!(check == e.value))
            throw std::logic_error("cofactor_view: residual is nonzero");
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace gb
