#include "gb/f4.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gb {

std::vector<Term> keys_to_list(TermOrder ord, std::span<const VecPoly> fs) {
    auto desc = [ord](const Term& a, const Term& b) {
        return compare_term(ord, a, b) == Cmp::GT;
    };
    std::set<Term, decltype(desc)> terms(desc);
    for (const auto& f : fs)
        for (const auto& m : f.monomials()) terms.insert(m.term);
    return {terms.begin(), terms.end()};
}

SparseMatrix polys_to_mat(TermOrder ord, std::span<const Term> vs,
                          std::span<const VecPoly> fs) {
    SparseMatrix A;
    A.ncols = vs.size();
    A.col_terms.assign(vs.begin(), vs.end());
    A.rows.resize(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) {
        // Both the monomial list and vs are descending, so one merge pass.
        std::size_t j = 0;
        for (const auto& m : fs[i].monomials()) {
            while (j < vs.size() && !(vs[j] == m.term)) {
                if (compare_term(ord, vs[j], m.term) == Cmp::LT)
                    throw std::invalid_argument("polys_to_mat: term missing from vs");
                ++j;
            }
            if (j == vs.size())
                throw std::invalid_argument("polys_to_mat: term missing from vs");
            A.rows[i].entries.push_back({static_cast<std::uint32_t>(j), m.coeff});
        }
    }
    return A;
}

std::vector<VecPoly> mat_to_polys(TermOrder ord, std::span<const Term> vs,
                                  const SparseMatrix& A) {
    if (A.ncols != vs.size())
        throw std::invalid_argument("mat_to_polys: dimension mismatch");
    std::vector<VecPoly> out;
    out.reserve(A.rows.size());
    for (const auto& row : A.rows) {
        std::vector<Monomial> ms;
        ms.reserve(row.entries.size());
        for (const auto& [j, c] : row.entries) ms.push_back({c, vs[j]});
        out.push_back(VecPoly(ord, std::move(ms)));
    }
    return out;
}

namespace {

// row -= f * pivot (sparse merge); the entry at pivot's leading column cancels.
SparseRow row_axpy(const SparseRow& row, const Rational& f, const SparseRow& pivot) {
    SparseRow r;
    r.entries.reserve(row.entries.size() + pivot.entries.size());
    auto a = row.entries.begin(), ae = row.entries.end();
    auto b = pivot.entries.begin(), be = pivot.entries.end();
    while (a != ae && b != be) {
        if (a->first < b->first)
            r.entries.push_back(*a++);
        else if (b->first < a->first) {
            r.entries.push_back({b->first, -f * b->second});
            ++b;
        } else {
            Rational c = a->second - f * b->second;
            if (!c.is_zero()) r.entries.push_back({a->first, std::move(c)});
            ++a, ++b;
        }
    }
    r.entries.insert(r.entries.end(), a, ae);
    for (; b != be; ++b) r.entries.push_back({b->first, -f * b->second});
    return r;
}

void tag_scale(Combination& tag, const Rational& f) {
    for (auto& [i, m] : tag.entries) m = monom_mult(f, PowerProduct{}, m);
}

void tag_axpy(TermOrder ord, Combination& tag, const Rational& f, const Combination& src) {
    for (const auto& [i, m] : src.entries)
        tag.add(ord, i, monom_mult(-f, PowerProduct{}, m));
}

}  // namespace

SparseMatrix row_echelon(SparseMatrix A, std::vector<Combination>* tags, TermOrder ord) {
    std::size_t next = 0;  // position of the next pivot row
    for (std::uint32_t col = 0; col < A.ncols && next < A.rows.size(); ++col) {
        // Remaining rows all lead at >= col; candidates lead exactly at col.
        std::size_t best = A.rows.size();
        for (std::size_t i = next; i < A.rows.size(); ++i) {
            const auto& e = A.rows[i].entries;
            if (e.empty() || e.front().first != col) continue;
            if (best == A.rows.size() || e.size() < A.rows[best].entries.size()) best = i;
        }
        if (best == A.rows.size()) continue;
        std::swap(A.rows[next], A.rows[best]);
        if (tags) std::swap((*tags)[next], (*tags)[best]);

        Rational inv = A.rows[next].entries.front().second.inverse();
        if (!inv.is_one()) {
            for (auto& [j, c] : A.rows[next].entries) c *= inv;
            if (tags) tag_scale((*tags)[next], inv);
        }
        for (std::size_t i = 0; i < A.rows.size(); ++i) {
            if (i == next) continue;
            const auto& e = A.rows[i].entries;
            auto it = std::lower_bound(e.begin(), e.end(), col,
                                       [](const auto& p, std::uint32_t c) { return p.first < c; });
            if (it == e.end() || it->first != col) continue;
            Rational f = it->second;
            A.rows[i] = row_axpy(A.rows[i], f, A.rows[next]);
            if (tags) tag_axpy(ord, (*tags)[i], f, (*tags)[next]);
        }
        ++next;
    }
    // Zero rows last, pivot order preserved; tags follow their rows.
    std::vector<std::size_t> order;
    order.reserve(A.rows.size());
    for (std::size_t i = 0; i < A.rows.size(); ++i)
        if (!A.rows[i].entries.empty()) order.push_back(i);
    for (std::size_t i = 0; i < A.rows.size(); ++i)
        if (A.rows[i].entries.empty()) order.push_back(i);
    std::vector<SparseRow> reordered;
    std::vector<Combination> reordered_tags;
    reordered.reserve(A.rows.size());
    for (std::size_t i : order) {
        reordered.push_back(std::move(A.rows[i]));
        if (tags) reordered_tags.push_back(std::move((*tags)[i]));
    }
    A.rows = std::move(reordered);
    if (tags) *tags = std::move(reordered_tags);
    return A;
}

std::vector<VecPoly> macaulay_red(TermOrder ord, std::span<const VecPoly> fs) {
    std::vector<Term> vs = keys_to_list(ord, fs);
    SparseMatrix R = row_echelon(polys_to_mat(ord, vs, fs));
    std::vector<VecPoly> gs = mat_to_polys(ord, vs, R);
    std::vector<Term> lts;
    for (const auto& f : fs)
        if (!f.is_zero()) lts.push_back(f.lt());
    std::vector<VecPoly> out;
    for (auto& g : gs) {
        if (g.is_zero()) continue;
        if (std::find(lts.begin(), lts.end(), g.lt()) != lts.end()) continue;
        out.push_back(std::move(g));
    }
    return out;
}

namespace {

struct PreprocRow {
    VecPoly poly;       // monom_mult(c, t, bs[src])
    std::size_t src;
    Rational c;
    PowerProduct t;
};

std::vector<PreprocRow> sym_preproc_rows(TermOrder ord, std::span<const VecPoly> bs,
                                         std::span<const CriticalPair> sps) {
    auto desc = [ord](const Term& a, const Term& b) {
        return compare_term(ord, a, b) == Cmp::GT;
    };
    std::set<Term, decltype(desc)> unprocessed(desc);
    std::set<Term, decltype(desc)> seen(desc);
    std::vector<PreprocRow> rows;

    auto push_row = [&](std::size_t src, Rational c, PowerProduct t) {
        PreprocRow r{monom_mult(c, t, bs[src]), src, std::move(c), std::move(t)};
        for (const auto& m : r.poly.monomials()) {
            if (seen.insert(m.term).second) unprocessed.insert(m.term);
        }
        rows.push_back(std::move(r));
    };

    for (const auto& pair : sps) {
        const VecPoly& p = bs[pair.a];
        const VecPoly& q = bs[pair.b];
        PowerProduct l = pp_lcm(p.lp(), q.lp());
        push_row(pair.a, p.lc().inverse(), *pp_divides(p.lp(), l));
        push_row(pair.b, q.lc().inverse(), *pp_divides(q.lp(), l));
    }

    while (!unprocessed.empty()) {
        Term v = *unprocessed.begin();
        unprocessed.erase(unprocessed.begin());
        for (std::size_t i = 0; i < bs.size(); ++i) {
            if (bs[i].is_zero()) continue;
            if (auto t = dvd_term(bs[i].lt(), v)) {
                push_row(i, Rational(1), std::move(*t));
                break;
            }
        }
    }
    return rows;
}

}  // namespace

std::vector<VecPoly> sym_preproc(TermOrder ord, std::span<const VecPoly> bs,
                                 std::span<const CriticalPair> sps) {
    std::vector<VecPoly> out;
    for (auto& r : sym_preproc_rows(ord, bs, sps)) out.push_back(std::move(r.poly));
    return out;
}

std::vector<VecPoly> f4_red(TermOrder ord, std::span<const VecPoly> bs,
                            std::span<const CriticalPair> sps,
                            std::vector<Combination>* combos, GbStats* stats) {
    std::vector<PreprocRow> rows = sym_preproc_rows(ord, bs, sps);
    std::vector<VecPoly> fs;
    fs.reserve(rows.size());
    for (const auto& r : rows) fs.push_back(r.poly);

    std::vector<Term> vs = keys_to_list(ord, fs);
    SparseMatrix A = polys_to_mat(ord, vs, fs);
    if (stats)
        stats->matrix_shapes.push_back({A.rows.size(), A.ncols, A.nonzeros()});

    std::vector<Combination> tags;
    if (combos) {
        tags.resize(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            tags[i].add(ord, rows[i].src,
                        VecPoly::monomial(rows[i].c, Term{rows[i].t, 0}));
        // Keep tag/row alignment through elimination: do not let row_echelon
        // move zero rows past their tags. Re-pair afterwards by recomputing.
    }
    SparseMatrix R = row_echelon(std::move(A), combos ? &tags : nullptr, ord);
    std::vector<VecPoly> gs = mat_to_polys(ord, vs, R);

    std::vector<Term> lts;
    for (const auto& f : fs)
        if (!f.is_zero()) lts.push_back(f.lt());

    std::vector<VecPoly> out;
    if (combos) combos->clear();
    for (std::size_t i = 0; i < gs.size(); ++i) {
        if (gs[i].is_zero()) continue;
        if (std::find(lts.begin(), lts.end(), gs[i].lt()) != lts.end()) continue;
        bool divisible = false;
        for (const auto& b : bs) {
            if (!b.is_zero() && dvd_term(b.lt(), gs[i].lt())) {
                divisible = true;
                break;
            }
        }
        if (divisible) continue;
        if (combos) combos->push_back(tags[i]);
        out.push_back(std::move(gs[i]));
    }
    return out;
}

GbResult gb_f4(std::span<const VecPoly> input, const GbConfig& cfg) {
    const TermOrder ord = cfg.term_order;
    GbConfig c = cfg;
    c.algorithm = Algorithm::F4;
    return gb_schema(input, c,
                     [ord](std::span<const VecPoly> basis, std::span<const CriticalPair> kept,
                           std::vector<Combination>* combos, GbStats& stats) {
                         if (kept.empty()) {
                             if (combos) combos->clear();
                             return std::vector<VecPoly>{};
                         }
                         std::vector<VecPoly> hs = f4_red(ord, basis, kept, combos, &stats);
                         stats.zero_reductions += kept.size() > hs.size()
                                                      ? kept.size() - hs.size()
                                                      : 0;
                         return hs;
                     });
}

GbResult compute_gb(std::span<const VecPoly> input, const GbConfig& cfg) {
    return cfg.algorithm == Algorithm::F4 ? gb_f4(input, cfg) : gb_buchberger(input, cfg);
}

}  // namespace gb
