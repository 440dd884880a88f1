#ifndef GB_BUCHBERGER_HPP
#define GB_BUCHBERGER_HPP

#include "gb/polynomial.hpp"
#include "gb/reduction.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace gb {

/// Basis element with its unique id. In the completion loop ids are dense:
/// id == position in the basis vector.
struct IdentifiedPoly {
    std::size_t id;
    VecPoly poly;
};

/// Unordered critical pair, stored with a < b.
struct CriticalPair {
    std::size_t a;
    std::size_t b;

    friend bool operator==(const CriticalPair&, const CriticalPair&) = default;
};

enum class Algorithm { Buchberger, F4 };
enum class Selection { Single, DegreeBatch };

struct GbConfig {
    TermOrder term_order;
    Algorithm algorithm = Algorithm::Buchberger;
    bool use_product_criterion = true;
    bool use_chain_criterion = true;
    /// Buchberger defaults to Single, f4 to DegreeBatch; nullopt = per-algorithm default.
    std::optional<Selection> selection;
    std::uint64_t iteration_cap = 1'000'000;
    bool track_cofactors = false;
    /// Max pairs per F4 batch; 0 = unlimited.
    std::size_t batch_cap = 0;
};

struct GbStats {
    std::uint64_t iterations = 0;
    std::uint64_t pairs_generated = 0;
    std::uint64_t component_skips = 0;  // pairs with unequal lead components
    std::uint64_t product_criterion_hits = 0;
    std::uint64_t chain_criterion_hits = 0;
    std::uint64_t zero_reductions = 0;
    std::uint64_t basis_additions = 0;
    /// Per-iteration Macaulay matrix shapes (F4 only): rows, cols, nonzeros.
    std::vector<std::array<std::uint64_t, 3>> matrix_shapes;
};

struct GbResult {
    std::vector<VecPoly> basis;
    /// Per basis element, a combination over the *input* list reconstructing
    /// it exactly. Filled only when cfg.track_cofactors.
    std::vector<Combination> certificates;
    GbStats stats;
};

/// S-polynomial; 0 when the lead components differ. Throws on zero input.
VecPoly spoly(TermOrder ord, const VecPoly& p, const VecPoly& q);

/// ps0 plus all pairs (h, b) for h in hs, b in bs, plus one orientation of
/// every pair within hs. Ids of hs must be fresh.
std::vector<CriticalPair> add_pairs(std::span<const IdentifiedPoly> bs,
                                    std::vector<CriticalPair> ps0,
                                    std::span<const IdentifiedPoly> hs);

/// Buchberger's product criterion: the pair is useless iff the leading
/// power-products are coprime. Scalar context only.
bool product_criterion(const VecPoly& p, const VecPoly& q);

/// Chain criterion: some r in bs, distinct from the pair, has lp(r) dividing
/// lcm(lp p, lp q) and both pairs (p,r), (r,q) are already settled.
/// `is_pending(i,j)` must report whether the id pair is still awaiting
/// processing (the pair under scrutiny counts as settled).
bool chain_criterion(const CriticalPair& pair, std::span<const VecPoly> bs,
                     const std::function<bool(std::size_t, std::size_t)>& is_pending);

/// True iff every component index appearing in bs has an element whose
/// leading term is that component's unit. Then bs generates the whole module.
bool gen_whole_module(std::span<const VecPoly> bs);

/// Completer parameter of the generic schema: given the current basis and the
/// selected (already criteria-filtered) pairs, returns the new elements. When
/// `combos` is non-null it must receive, per new element, a combination over
/// the current basis reconstructing it.
using CompleterFn = std::function<std::vector<VecPoly>(
    std::span<const VecPoly> basis, std::span<const CriticalPair> kept,
    std::vector<Combination>* combos, GbStats& stats)>;

/// The generic critical-pair completion loop with pluggable selection and
/// completion; returns a Groebner basis of the submodule generated by input.
GbResult gb_schema(std::span<const VecPoly> input, const GbConfig& cfg,
                   const CompleterFn& completer);

/// Buchberger instance: single-pair selection, completion by trd.
GbResult gb_buchberger(std::span<const VecPoly> input, const GbConfig& cfg);

/// Dispatches on cfg.algorithm (Buchberger or F4).
GbResult compute_gb(std::span<const VecPoly> input, const GbConfig& cfg);

/// Buchberger's criterion: all pairwise S-polynomials reduce to 0 modulo G.
bool is_groebner_basis(TermOrder ord, std::span<const VecPoly> G);

struct MembershipResult {
    bool member = false;
    VecPoly normal_form;
    /// p = sum certificate_i * fs_i when member and certification requested.
    std::optional<Combination> certificate;
};

/// Submodule membership: compute a GB of fs, reduce p, test for 0.
MembershipResult in_pmdl(const VecPoly& p, std::span<const VecPoly> fs, const GbConfig& cfg);

}  // namespace gb

#endif
