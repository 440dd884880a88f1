#include "gb/buchberger.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gb {

VecPoly spoly(TermOrder ord, const VecPoly& p, const VecPoly& q) {
    if (p.is_zero() || q.is_zero())
        throw std::invalid_argument("spoly: zero argument");
    if (p.lt().component != q.lt().component) return VecPoly{};
    PowerProduct l = pp_lcm(p.lp(), q.lp());
    PowerProduct up = *pp_divides(p.lp(), l);
    PowerProduct uq = *pp_divides(q.lp(), l);
    return poly_sub(ord, monom_mult(p.lc().inverse(), up, p),
                    monom_mult(q.lc().inverse(), uq, q));
}

std::vector<CriticalPair> add_pairs(std::span<const IdentifiedPoly> bs,
                                    std::vector<CriticalPair> ps0,
                                    std::span<const IdentifiedPoly> hs) {
    for (std::size_t i = 0; i < hs.size(); ++i) {
        for (const auto& b : bs)
            ps0.push_back({std::min(hs[i].id, b.id), std::max(hs[i].id, b.id)});
        for (std::size_t j = i + 1; j < hs.size(); ++j)
            ps0.push_back({std::min(hs[i].id, hs[j].id), std::max(hs[i].id, hs[j].id)});
    }
    return ps0;
}

bool product_criterion(const VecPoly& p, const VecPoly& q) {
    return pp_gcd(p.lp(), q.lp()).is_unit();
}

bool chain_criterion(const CriticalPair& pair, std::span<const VecPoly> bs,
                     const std::function<bool(std::size_t, std::size_t)>& is_pending) {
    const VecPoly& p = bs[pair.a];
    const VecPoly& q = bs[pair.b];
    if (p.lt().component != q.lt().component) return false;
    PowerProduct l = pp_lcm(p.lp(), q.lp());
    for (std::size_t r = 0; r < bs.size(); ++r) {
        if (r == pair.a || r == pair.b) continue;
        if (bs[r].lt().component != p.lt().component) continue;
        if (!pp_divides(bs[r].lp(), l)) continue;
        if (is_pending(std::min(r, pair.a), std::max(r, pair.a))) continue;
        if (is_pending(std::min(r, pair.b), std::max(r, pair.b))) continue;
        return true;
    }
    return false;
}

bool gen_whole_module(std::span<const VecPoly> bs) {
    std::set<ComponentIndex> components;
    for (const auto& b : bs)
        for (const auto& m : b.monomials()) components.insert(m.term.component);
    for (ComponentIndex i : components) {
        bool covered = false;
        for (const auto& b : bs) {
            if (!b.is_zero() && b.lt().component == i && b.lp().is_unit()) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

namespace {

void scale_combination(Combination& c, const Rational& factor) {
    for (auto& [i, m] : c.entries) m = monom_mult(factor, PowerProduct{}, m);
}

// Rewrites a combination over (basis @ hs) into one over basis alone, using
// the hs elements' own basis combinations.
Combination flatten_over_basis(TermOrder ord, const Combination& c, std::size_t nbasis,
                               const std::vector<Combination>& hs_combos) {
    Combination out;
    for (const auto& [i, mult] : c.entries) {
        if (i < nbasis) {
            out.add(ord, i, mult);
        } else {
            for (const auto& [j, m2] : hs_combos[i - nbasis].entries)
                out.add(ord, j, poly_mul(ord, mult, m2));
        }
    }
    return out;
}

// Combination over the pair constituents expressing spoly(p, q).
Combination spoly_combination(TermOrder ord, std::span<const VecPoly> basis,
                              const CriticalPair& pair) {
    const VecPoly& p = basis[pair.a];
    const VecPoly& q = basis[pair.b];
    PowerProduct l = pp_lcm(p.lp(), q.lp());
    Combination c;
    c.add(ord, pair.a,
          VecPoly::monomial(p.lc().inverse(), Term{*pp_divides(p.lp(), l), 0}));
    c.add(ord, pair.b,
          VecPoly::monomial(-q.lc().inverse(), Term{*pp_divides(q.lp(), l), 0}));
    return c;
}

std::vector<VecPoly> buchberger_complete(TermOrder ord, std::span<const VecPoly> basis,
                                         std::span<const CriticalPair> kept,
                                         std::vector<Combination>* combos, GbStats& stats) {
    std::vector<VecPoly> hs;
    std::vector<Combination> hs_combos;
    std::vector<VecPoly> extended;  // basis @ hs, built lazily for batch mode
    for (const auto& pair : kept) {
        VecPoly sp = spoly(ord, basis[pair.a], basis[pair.b]);
        std::span<const VecPoly> reducers = basis;
        if (!hs.empty()) {
            if (extended.empty())
                extended.assign(basis.begin(), basis.end());
            while (extended.size() < basis.size() + hs.size())
                extended.push_back(hs[extended.size() - basis.size()]);
            reducers = extended;
        }
        Combination track;
        VecPoly h = trd(ord, reducers, std::move(sp), combos ? &track : nullptr);
        if (h.is_zero()) {
            ++stats.zero_reductions;
            continue;
        }
        Rational inv = h.lc().inverse();
        if (combos) {
            Combination c = spoly_combination(ord, basis, pair);
            for (auto& [i, m] : track.entries) c.add(ord, i, poly_neg(m));
            c = flatten_over_basis(ord, c, basis.size(), hs_combos);
            scale_combination(c, inv);
            hs_combos.push_back(std::move(c));
        }
        hs.push_back(make_monic(h));
    }
    if (combos) *combos = std::move(hs_combos);
    return hs;
}

std::uint64_t pair_degree(std::span<const VecPoly> basis, const CriticalPair& p) {
    return pp_lcm(basis[p.a].lp(), basis[p.b].lp()).degree();
}

}  // namespace

GbResult gb_schema(std::span<const VecPoly> input, const GbConfig& cfg,
                   const CompleterFn& completer) {
    const TermOrder ord = cfg.term_order;
    const Selection selection = cfg.selection.value_or(
        cfg.algorithm == Algorithm::F4 ? Selection::DegreeBatch : Selection::Single);

    GbResult res;
    std::vector<VecPoly>& basis = res.basis;
    for (std::size_t i = 0; i < input.size(); ++i) {
        if (input[i].is_zero()) continue;
        basis.push_back(input[i]);
        if (cfg.track_cofactors) {
            Combination c;
            c.add(ord, i, VecPoly::constant(Rational(1)));
            res.certificates.push_back(std::move(c));
        }
    }

    const bool scalar_problem =
        std::all_of(basis.begin(), basis.end(), [](const VecPoly& p) { return p.is_scalar(); });

    std::vector<CriticalPair> ps;
    std::set<std::pair<std::size_t, std::size_t>> pending;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            ps.push_back({i, j});
            pending.insert({i, j});
            ++res.stats.pairs_generated;
        }
    }

    auto is_pending = [&](std::size_t a, std::size_t b) {
        return pending.count({a, b}) != 0;
    };

    while (!ps.empty() && !gen_whole_module(basis)) {
        if (++res.stats.iterations > cfg.iteration_cap)
            throw std::runtime_error("gb_schema: iteration cap exceeded");

        // Selection: minimal lcm degree, ties by (id_a, id_b).
        std::uint64_t min_deg = UINT64_MAX;
        for (const auto& p : ps) min_deg = std::min(min_deg, pair_degree(basis, p));
        std::vector<CriticalPair> sps;
        std::vector<CriticalPair> rest;
        for (const auto& p : ps) {
            if (pair_degree(basis, p) == min_deg)
                sps.push_back(p);
            else
                rest.push_back(p);
        }
        std::sort(sps.begin(), sps.end(), [](const CriticalPair& x, const CriticalPair& y) {
            return std::pair{x.a, x.b} < std::pair{y.a, y.b};
        });
        std::size_t take = sps.size();
        if (selection == Selection::Single)
            take = 1;
        else if (cfg.batch_cap != 0)
            take = std::min(take, cfg.batch_cap);
        rest.insert(rest.end(), sps.begin() + take, sps.end());
        sps.resize(take);
        ps = std::move(rest);

        // Criteria filter; a decided pair leaves the pending set.
        std::vector<CriticalPair> kept;
        for (const auto& pair : sps) {
            pending.erase({pair.a, pair.b});
            const VecPoly& p = basis[pair.a];
            const VecPoly& q = basis[pair.b];
            if (p.lt().component != q.lt().component) {
                ++res.stats.component_skips;
                continue;
            }
            if (scalar_problem && cfg.use_product_criterion && product_criterion(p, q)) {
                ++res.stats.product_criterion_hits;
                continue;
            }
            if (cfg.use_chain_criterion && chain_criterion(pair, basis, is_pending)) {
                ++res.stats.chain_criterion_hits;
                continue;
            }
            kept.push_back(pair);
        }

        std::vector<Combination> combos;
        std::vector<VecPoly> hs =
            completer(basis, kept, cfg.track_cofactors ? &combos : nullptr, res.stats);

        for (std::size_t k = 0; k < hs.size(); ++k) {
            std::size_t id = basis.size();
            if (cfg.track_cofactors) {
                Combination cert;
                for (const auto& [i, mult] : combos[k].entries)
                    for (const auto& [j, m2] : res.certificates[i].entries)
                        cert.add(ord, j, poly_mul(ord, mult, m2));
                res.certificates.push_back(std::move(cert));
            }
            basis.push_back(std::move(hs[k]));
            for (std::size_t j = 0; j < id; ++j) {
                ps.push_back({j, id});
                pending.insert({j, id});
                ++res.stats.pairs_generated;
            }
            ++res.stats.basis_additions;
        }
    }
    return res;
}

GbResult gb_buchberger(std::span<const VecPoly> input, const GbConfig& cfg) {
    const TermOrder ord = cfg.term_order;
    return gb_schema(input, cfg,
                     [ord](std::span<const VecPoly> basis, std::span<const CriticalPair> kept,
                           std::vector<Combination>* combos, GbStats& stats) {
                         return buchberger_complete(ord, basis, kept, combos, stats);
                     });
}

bool is_groebner_basis(TermOrder ord, std::span<const VecPoly> G) {
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (G[i].is_zero()) continue;
        for (std::size_t j = i + 1; j < G.size(); ++j) {
            if (G[j].is_zero()) continue;
            if (!trd(ord, G, spoly(ord, G[i], G[j])).is_zero()) return false;
        }
    }
    return true;
}

MembershipResult in_pmdl(const VecPoly& p, std::span<const VecPoly> fs, const GbConfig& cfg) {
    GbResult g = compute_gb(fs, cfg);
    MembershipResult res;
    Combination track;
    res.normal_form = trd(cfg.term_order, g.basis, p, cfg.track_cofactors ? &track : nullptr);
    res.member = res.normal_form.is_zero();
    if (cfg.track_cofactors && res.member) {
        // Compose the reduction multipliers over G with G's certificates over fs.
        Combination cert;
        for (const auto& [i, mult] : track.entries)
            for (const auto& [j, m2] : g.certificates[i].entries)
                cert.add(cfg.term_order, j, poly_mul(cfg.term_order, mult, m2));
        res.certificate = std::move(cert);
    }
    return res;
}

}  // namespace gb
