#ifndef GB_POLYNOMIAL_HPP
#define GB_POLYNOMIAL_HPP

#include "gb/monomial.hpp"
#include "gb/order.hpp"
#include "gb/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace gb {

struct Monomial {
    Rational coeff;  // nonzero
    Term term;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Sparse vector-polynomial: monomials kept strictly descending under the
/// active term order, no zero coefficients. Empty = zero polynomial.
class VecPoly {
public:
    VecPoly() = default;
    /// Normalizes an arbitrary monomial list under `ord`: sorts descending,
    /// merges equal terms, drops zeros.
    VecPoly(TermOrder ord, std::vector<Monomial> monomials);

    static VecPoly monomial(Rational c, Term t);
    static VecPoly constant(Rational c) { return monomial(std::move(c), Term{}); }

    bool is_zero() const { return monomials_.empty(); }
    std::size_t size() const { return monomials_.size(); }
    const std::vector<Monomial>& monomials() const { return monomials_; }

    /// Leading data; throws std::domain_error on the zero polynomial.
    const Monomial& leading_monomial() const;
    const Term& lt() const { return leading_monomial().term; }
    const PowerProduct& lp() const { return leading_monomial().term.pp; }
    const Rational& lc() const { return leading_monomial().coeff; }

    /// Checks the representation invariant under `ord`.
    bool valid(TermOrder ord) const;

    /// True iff every term has component 0.
    bool is_scalar() const;

    friend bool operator==(const VecPoly&, const VecPoly&) = default;

private:
    std::vector<Monomial> monomials_;
    friend VecPoly poly_add(TermOrder, const VecPoly&, const VecPoly&);
    friend VecPoly poly_neg(const VecPoly&);
    friend VecPoly monom_mult(const Rational&, const PowerProduct&, const VecPoly&);
    friend VecPoly poly_tail(const VecPoly&);
    friend VecPoly make_monic(const VecPoly&);
    friend VecPoly vec_inject(ComponentIndex, const VecPoly&);
    friend VecPoly proj_component(const VecPoly&, ComponentIndex);
    friend VecPoly shift_components(const VecPoly&, ComponentIndex);
    friend VecPoly unshift_components(const VecPoly&, ComponentIndex);
};

VecPoly poly_add(TermOrder ord, const VecPoly& p, const VecPoly& q);
VecPoly poly_sub(TermOrder ord, const VecPoly& p, const VecPoly& q);
VecPoly poly_neg(const VecPoly& p);

/// Scales by c and multiplies every term's power-product by t. Admissibility
/// keeps the monomial order, so no re-sort is needed.
VecPoly monom_mult(const Rational& c, const PowerProduct& t, const VecPoly& p);

/// Full product of a scalar polynomial with a (possibly vector) polynomial.
VecPoly poly_mul(TermOrder ord, const VecPoly& scalar, const VecPoly& q);

/// Stored coefficient of term v, or 0.
Rational coeff_lookup(const VecPoly& p, const Term& v);

/// p minus its leading monomial; throws on zero.
VecPoly poly_tail(const VecPoly& p);

/// p scaled by 1/lc(p); throws on zero.
VecPoly make_monic(const VecPoly& p);

/// Sets every component of a scalar polynomial to i; throws if input is not scalar.
VecPoly vec_inject(ComponentIndex i, const VecPoly& p);

/// Scalar polynomial made of the component-i monomials of p.
VecPoly proj_component(const VecPoly& p, ComponentIndex i);

/// Adds m to every component index (used by the syzygy augmentation).
VecPoly shift_components(const VecPoly& p, ComponentIndex m);
/// Subtracts m from every component index; requires all components >= m.
VecPoly unshift_components(const VecPoly& p, ComponentIndex m);

/// Strict order p <_p q: some term v has coeff(p,v)=0, coeff(q,v)!=0 and all
/// terms above v agree.
bool compare_poly_strict(TermOrder ord, const VecPoly& p, const VecPoly& q);

/// Re-normalizes a polynomial under a different term order.
VecPoly resort(TermOrder ord, const VecPoly& p);

/// Linear combination over an indexed generator list: evaluates to
/// sum of multiplier_i * generators[index_i]. Multipliers are scalar.
struct Combination {
    std::vector<std::pair<std::size_t, VecPoly>> entries;

    void add(TermOrder ord, std::size_t index, const VecPoly& multiplier);
    VecPoly evaluate(TermOrder ord, std::span<const VecPoly> generators) const;
};

}  // namespace gb

#endif
