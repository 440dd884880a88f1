#include "gb/reduced.hpp"

#include <algorithm>

namespace gb {

std::vector<VecPoly> comp_red_monic_basis(TermOrder ord, std::span<const VecPoly> xs) {
    // Step 1: keep the elements with divisibility-minimal leading terms;
    // within an equal-lt group the earliest survives.
    std::vector<const VecPoly*> alive;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i].is_zero()) continue;
        bool dead = false;
        for (std::size_t j = 0; j < xs.size() && !dead; ++j) {
            if (j == i || xs[j].is_zero()) continue;
            if (!dvd_term(xs[j].lt(), xs[i].lt())) continue;
            if (dvd_term(xs[i].lt(), xs[j].lt()))
                dead = j < i;  // equal leads: earlier one survives
            else
                dead = true;
        }
        if (!dead) alive.push_back(&xs[i]);
    }

    // Step 2: totally reduce each survivor modulo the others, in place.
    std::vector<VecPoly> work;
    work.reserve(alive.size());
    for (const VecPoly* p : alive) work.push_back(*p);
    for (std::size_t i = 0; i < work.size(); ++i) {
        std::vector<VecPoly> others;
        others.reserve(work.size() - 1);
        for (std::size_t j = 0; j < work.size(); ++j)
            if (j != i) others.push_back(work[j]);
        work[i] = trd(ord, others, work[i]);
    }
    std::erase_if(work, [](const VecPoly& p) { return p.is_zero(); });

    // Step 3: monic, then canonical order (leading term descending).
    for (auto& p : work) p = make_monic(p);
    std::sort(work.begin(), work.end(), [ord](const VecPoly& a, const VecPoly& b) {
        return compare_term(ord, a.lt(), b.lt()) == Cmp::GT;
    });
    return work;
}

std::vector<VecPoly> reduced_gb(std::span<const VecPoly> input, const GbConfig& cfg) {
    GbResult g = compute_gb(input, cfg);
    return comp_red_monic_basis(cfg.term_order, g.basis);
}

bool is_reduced_gb(TermOrder ord, std::span<const VecPoly> G) {
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (G[i].is_zero() || !G[i].lc().is_one()) return false;
        std::vector<VecPoly> others;
        for (std::size_t j = 0; j < G.size(); ++j)
            if (j != i) others.push_back(G[j]);
        if (is_red(others, G[i])) return false;
    }
    return is_groebner_basis(ord, G);
}

}  // namespace gb
