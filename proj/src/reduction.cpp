#include "gb/reduction.hpp"

#include <stdexcept>

namespace gb {

VecPoly red_single(TermOrder ord, const VecPoly& p, const VecPoly& f, const PowerProduct& t) {
    if (f.is_zero()) throw std::invalid_argument("red_single: zero reducer");
    Term target = stimes(t, f.lt());
    Rational c = coeff_lookup(p, target);
    if (c.is_zero())
        throw std::invalid_argument("red_single: target coefficient is zero");
    return poly_sub(ord, p, monom_mult(c / f.lc(), t, f));
}

std::optional<ReductionStep> find_reducer(const Term& v, std::span<const VecPoly> fs) {
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].is_zero()) continue;
        if (auto q = dvd_term(fs[i].lt(), v))
            return ReductionStep{i, std::move(*q), v};
    }
    return std::nullopt;
}

bool is_red(std::span<const VecPoly> fs, const VecPoly& p) {
    for (const auto& m : p.monomials())
        if (find_reducer(m.term, fs)) return true;
    return false;
}

VecPoly trd(TermOrder ord, std::span<const VecPoly> fs, VecPoly p,
            Combination* track, std::uint64_t step_cap) {
    // Terms above position `idx` are already irreducible; each red_single
    // only touches terms <= the current one, so idx never moves backwards.
    std::size_t idx = 0;
    std::uint64_t steps = 0;
    while (idx < p.size()) {
        const Monomial& m = p.monomials()[idx];
        auto step = find_reducer(m.term, fs);
        if (!step) {
            ++idx;
            continue;
        }
        if (++steps > step_cap)
            throw std::runtime_error("trd: step cap exceeded (implementation bug?)");
        const VecPoly& f = fs[step->reducer_index];
        Rational factor = m.coeff / f.lc();
        if (track)
            track->add(ord, step->reducer_index,
                       VecPoly::monomial(factor, Term{step->multiplier_pp, 0}));
        p = poly_sub(ord, p, monom_mult(factor, step->multiplier_pp, f));
    }
    return p;
}

}  // namespace gb
