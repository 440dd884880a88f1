#include "gb/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace gb {

VecPoly::VecPoly(TermOrder ord, std::vector<Monomial> monomials)
    : monomials_(std::move(monomials)) {
    std::stable_sort(monomials_.begin(), monomials_.end(),
                     [&](const Monomial& a, const Monomial& b) {
                         return compare_term(ord, a.term, b.term) == Cmp::GT;
                     });
    std::vector<Monomial> merged;
    for (auto& m : monomials_) {
        if (!merged.empty() && merged.back().term == m.term)
            merged.back().coeff += m.coeff;
        else
            merged.push_back(std::move(m));
    }
    std::erase_if(merged, [](const Monomial& m) { return m.coeff.is_zero(); });
    monomials_ = std::move(merged);
}

VecPoly VecPoly::monomial(Rational c, Term t) {
    VecPoly p;
    if (!c.is_zero()) p.monomials_.push_back({std::move(c), std::move(t)});
    return p;
}

const Monomial& VecPoly::leading_monomial() const {
    if (monomials_.empty())
        throw std::domain_error("leading data of the zero polynomial");
    return monomials_.front();
}

bool VecPoly::valid(TermOrder ord) const {
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
        if (monomials_[i].coeff.is_zero()) return false;
        if (i > 0 && compare_term(ord, monomials_[i - 1].term, monomials_[i].term) != Cmp::GT)
            return false;
    }
    return true;
}

bool VecPoly::is_scalar() const {
    return std::all_of(monomials_.begin(), monomials_.end(),
                       [](const Monomial& m) { return m.term.component == 0; });
}

VecPoly poly_add(TermOrder ord, const VecPoly& p, const VecPoly& q) {
    VecPoly r;
    r.monomials_.reserve(p.size() + q.size());
    auto a = p.monomials().begin(), ae = p.monomials().end();
    auto b = q.monomials().begin(), be = q.monomials().end();
    while (a != ae && b != be) {
        Cmp c = compare_term(ord, a->term, b->term);
        if (c == Cmp::GT)
            r.monomials_.push_back(*a++);
        else if (c == Cmp::LT)
            r.monomials_.push_back(*b++);
        else {
            Rational s = a->coeff + b->coeff;
            if (!s.is_zero()) r.monomials_.push_back({std::move(s), a->term});
            ++a, ++b;
        }
    }
    r.monomials_.insert(r.monomials_.end(), a, ae);
    r.monomials_.insert(r.monomials_.end(), b, be);
    return r;
}

VecPoly poly_neg(const VecPoly& p) {
    VecPoly r = p;
    for (auto& m : r.monomials_) m.coeff = -m.coeff;
    return r;
}

VecPoly poly_sub(TermOrder ord, const VecPoly& p, const VecPoly& q) {
    return poly_add(ord, p, poly_neg(q));
}

VecPoly monom_mult(const Rational& c, const PowerProduct& t, const VecPoly& p) {
    VecPoly r;
    if (c.is_zero()) return r;
    r.monomials_.reserve(p.size());
    for (const auto& m : p.monomials())
        r.monomials_.push_back({c * m.coeff, stimes(t, m.term)});
    return r;
}

VecPoly poly_mul(TermOrder ord, const VecPoly& scalar, const VecPoly& q) {
    VecPoly r;
    for (const auto& m : scalar.monomials()) {
        if (m.term.component != 0)
            throw std::invalid_argument("poly_mul: left factor must be scalar");
        r = poly_add(ord, r, monom_mult(m.coeff, m.term.pp, q));
    }
    return r;
}

Rational coeff_lookup(const VecPoly& p, const Term& v) {
    for (const auto& m : p.monomials())
        if (m.term == v) return m.coeff;
    return Rational(0);
}

VecPoly poly_tail(const VecPoly& p) {
    if (p.is_zero()) throw std::domain_error("tail of the zero polynomial");
    VecPoly r;
    r.monomials_.assign(p.monomials().begin() + 1, p.monomials().end());
    return r;
}

VecPoly make_monic(const VecPoly& p) {
    Rational inv = p.lc().inverse();
    VecPoly r = p;
    for (auto& m : r.monomials_) m.coeff *= inv;
    return r;
}

VecPoly vec_inject(ComponentIndex i, const VecPoly& p) {
    if (!p.is_scalar())
        throw std::invalid_argument("vec_inject: input must be scalar");
    VecPoly r = p;
    for (auto& m : r.monomials_) m.term.component = i;
    return r;
}

VecPoly proj_component(const VecPoly& p, ComponentIndex i) {
    VecPoly r;
    for (const auto& m : p.monomials())
        if (m.term.component == i) r.monomials_.push_back({m.coeff, Term{m.term.pp, 0}});
    return r;
}

VecPoly shift_components(const VecPoly& p, ComponentIndex m) {
    VecPoly r = p;
    for (auto& mo : r.monomials_) mo.term.component += m;
    return r;
}

VecPoly unshift_components(const VecPoly& p, ComponentIndex m) {
    VecPoly r = p;
    for (auto& mo : r.monomials_) {
        if (mo.term.component < m)
            throw std::invalid_argument("unshift_components: component below shift");
        mo.term.component -= m;
    }
    return r;
}

bool compare_poly_strict(TermOrder ord, const VecPoly& p, const VecPoly& q) {
    // Walk both descending monomial lists; the first disagreement decides.
    auto a = p.monomials().begin(), ae = p.monomials().end();
    auto b = q.monomials().begin(), be = q.monomials().end();
    while (a != ae && b != be) {
        Cmp c = compare_term(ord, a->term, b->term);
        if (c == Cmp::GT) return false;  // coeff(q, lt) = 0 but coeff(p, lt) != 0
        if (c == Cmp::LT) return true;
        if (a->coeff != b->coeff) return false;  // differ at a common term
        ++a, ++b;
    }
    return a == ae && b != be;
}

VecPoly resort(TermOrder ord, const VecPoly& p) {
    return VecPoly(ord, p.monomials());
}

void Combination::add(TermOrder ord, std::size_t index, const VecPoly& multiplier) {
    if (multiplier.is_zero()) return;
    for (auto& [i, m] : entries) {
        if (i == index) {
            m = poly_add(ord, m, multiplier);
            return;
        }
    }
    entries.push_back({index, multiplier});
}

VecPoly Combination::evaluate(TermOrder ord, std::span<const VecPoly> generators) const {
    VecPoly r;
    for (const auto& [i, m] : entries)
        r = poly_add(ord, r, poly_mul(ord, m, generators[i]));
    return r;
}

}  // namespace gb
