#ifndef GB_SYZYGY_HPP
#define GB_SYZYGY_HPP

#include "gb/buchberger.hpp"

#include <span>
#include <vector>

namespace gb {

/// Element i becomes e_i plus b_i with all of b_i's components shifted up by
/// m, so the m new bookkeeping components come first. Throws on duplicates.
std::vector<VecPoly> init_syzygy_list(TermOrder ord, std::span<const VecPoly> bs);

/// Keeps the elements of gs all of whose terms live in components < m.
std::vector<VecPoly> filter_syzygy_basis(ComponentIndex m, std::span<const VecPoly> gs);

struct SyzygyResult {
    /// Groebner basis of the syzygy module of bs (components < m).
    std::vector<VecPoly> syzygies;
    /// The full augmented Groebner basis gs (for cofactor extraction).
    std::vector<VecPoly> augmented_basis;
};

/// Three-step syzygy computation. Requires a POT term order; throws
/// std::invalid_argument on TOP.
SyzygyResult syzygy_basis(std::span<const VecPoly> bs, const GbConfig& cfg);

struct CofactorEntry {
    /// Scalar cofactors s_0..s_{m-1} with value = sum s_i * b_i.
    std::vector<VecPoly> cofactors;
    VecPoly value;
};

/// Splits each element of gs into its cofactors (components < m) and its
/// value (components >= m, shifted back down). Verifies the cofactor
/// identity exactly; a nonzero residual raises std::logic_error.
std::vector<CofactorEntry> cofactor_view(TermOrder ord, ComponentIndex m,
                                         std::span<const VecPoly> gs,
                                         std::span<const VecPoly> bs);

}  // namespace gb

#endif
