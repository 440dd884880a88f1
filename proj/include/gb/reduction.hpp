#ifndef GB_REDUCTION_HPP
#define GB_REDUCTION_HPP

#include "gb/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <span>

namespace gb {

/// One applicable reduction step: reducers[reducer_index] eliminates
/// target_term via the multiplier power-product.
struct ReductionStep {
    std::size_t reducer_index;
    PowerProduct multiplier_pp;
    Term target_term;
};

/// Guard against implementation bugs; theory guarantees termination.
inline constexpr std::uint64_t kDefaultStepCap = 100'000'000;

/// Single reduction step: p minus (coeff(p, t*lt(f))/lc(f)) * t * f.
/// Requires f != 0 and coeff(p, stimes(t, lt f)) != 0.
VecPoly red_single(TermOrder ord, const VecPoly& p, const VecPoly& f, const PowerProduct& t);

/// First f in list order whose leading term divides v. Zero entries skipped.
std::optional<ReductionStep> find_reducer(const Term& v, std::span<const VecPoly> fs);

/// True iff some term of p is divisible by the leading term of some f in fs.
bool is_red(std::span<const VecPoly> fs, const VecPoly& p);

/// Total reduction to normal form, greatest term first, first-match reducer.
/// If `track` is given, it receives multipliers with
/// p - result = sum track_i * fs_i (exact).
VecPoly trd(TermOrder ord, std::span<const VecPoly> fs, VecPoly p,
            Combination* track = nullptr, std::uint64_t step_cap = kDefaultStepCap);

}  // namespace gb

#endif
