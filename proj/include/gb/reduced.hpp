#ifndef GB_REDUCED_HPP
#define GB_REDUCED_HPP

#include "gb/buchberger.hpp"

#include <span>
#include <vector>

namespace gb {

/// Auto-reduction in three steps: drop zeros and lead-divisible elements,
/// totally reduce each survivor modulo the others, make monic. Applied to a
/// Groebner basis this yields the reduced Groebner basis of the same
/// submodule. Output sorted by leading term descending.
std::vector<VecPoly> comp_red_monic_basis(TermOrder ord, std::span<const VecPoly> xs);

/// The unique reduced Groebner basis of the submodule generated by input.
std::vector<VecPoly> reduced_gb(std::span<const VecPoly> input, const GbConfig& cfg);

/// Nonzero, monic, auto-reduced, and a Groebner basis.
bool is_reduced_gb(TermOrder ord, std::span<const VecPoly> G);

}  // namespace gb

#endif
