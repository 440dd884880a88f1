#ifndef GB_F4_HPP
#define GB_F4_HPP

#include "gb/buchberger.hpp"
#include "gb/polynomial.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace gb {

/// Sparse row: (column index, coefficient) pairs sorted by column, no zeros.
struct SparseRow {
    std::vector<std::pair<std::uint32_t, Rational>> entries;

    friend bool operator==(const SparseRow&, const SparseRow&) = default;
};

/// Sparse matrix whose columns are labelled by terms, strictly descending
/// under the active term order.
struct SparseMatrix {
    std::size_t ncols = 0;
    std::vector<SparseRow> rows;
    std::vector<Term> col_terms;

    std::uint64_t nonzeros() const {
        std::uint64_t n = 0;
        for (const auto& r : rows) n += r.entries.size();
        return n;
    }
};

/// All distinct terms appearing in fs, strictly descending.
std::vector<Term> keys_to_list(TermOrder ord, std::span<const VecPoly> fs);

/// A_{i,j} = coeff(fs_i, vs_j). Every term of fs must occur in vs.
SparseMatrix polys_to_mat(TermOrder ord, std::span<const Term> vs,
                          std::span<const VecPoly> fs);

/// Inverse of polys_to_mat: row i becomes the polynomial with coefficients
/// A_{i,j} at vs_j.
std::vector<VecPoly> mat_to_polys(TermOrder ord, std::span<const Term> vs,
                                  const SparseMatrix& A);

/// Reduced row echelon form over the rationals: pivots 1, pivot columns
/// otherwise 0, pivot columns strictly increasing, zero rows last. When
/// `tags` is given (one per row), every row operation is mirrored on it;
/// `ord` is then the ambient term order of the tag multipliers.
SparseMatrix row_echelon(SparseMatrix A, std::vector<Combination>* tags = nullptr,
                         TermOrder ord = {});

/// Row-reduces the Macaulay matrix of fs and keeps the nonzero result rows
/// whose leading terms are new (not leading terms of fs).
std::vector<VecPoly> macaulay_red(TermOrder ord, std::span<const VecPoly> fs);

/// Symbolic preprocessing: per selected pair the two scaled constituents
/// whose difference is the S-polynomial, followed by every reducer multiple
/// the worklist over descending unprocessed terms demands.
std::vector<VecPoly> sym_preproc(TermOrder ord, std::span<const VecPoly> bs,
                                 std::span<const CriticalPair> sps);

/// The F4 completer: macaulay_red over the symbolic preprocessing of the
/// selected pairs, with results whose leading terms are divisible by a basis
/// leading term filtered out. `combos`, when given, receives a combination
/// over bs per returned polynomial.
std::vector<VecPoly> f4_red(TermOrder ord, std::span<const VecPoly> bs,
                            std::span<const CriticalPair> sps,
                            std::vector<Combination>* combos = nullptr,
                            GbStats* stats = nullptr);

/// Faugere's F4: gb_schema with degree-batch selection and f4_red completion.
GbResult gb_f4(std::span<const VecPoly> input, const GbConfig& cfg);

}  // namespace gb

#endif
