#ifndef GB_MONOMIAL_HPP
#define GB_MONOMIAL_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace gb {

using VarIndex = std::uint32_t;
using Exponent = std::uint32_t;
using ComponentIndex = std::uint32_t;

/// Power-product with finite support: sorted (variable index, exponent)
/// pairs, exponents strictly positive. The empty product is 1.
class PowerProduct {
public:
    PowerProduct() = default;
    /// Normalizes: sorts by variable, merges duplicates, drops zero exponents.
    explicit PowerProduct(std::vector<std::pair<VarIndex, Exponent>> factors);

    static PowerProduct variable(VarIndex v, Exponent e = 1);

    bool is_unit() const { return factors_.empty(); }
    Exponent exponent(VarIndex v) const;
    const std::vector<std::pair<VarIndex, Exponent>>& factors() const { return factors_; }

    std::uint64_t degree() const;

    friend bool operator==(const PowerProduct&, const PowerProduct&) = default;

private:
    std::vector<std::pair<VarIndex, Exponent>> factors_;
    friend PowerProduct pp_mul(const PowerProduct&, const PowerProduct&);
    friend std::optional<PowerProduct> pp_divides(const PowerProduct&, const PowerProduct&);
    friend PowerProduct pp_lcm(const PowerProduct&, const PowerProduct&);
    friend PowerProduct pp_gcd(const PowerProduct&, const PowerProduct&);
};

/// Pointwise exponent sum.
PowerProduct pp_mul(const PowerProduct& s, const PowerProduct& t);
/// Quotient q with s*q = t when s | t (pointwise <=), otherwise nullopt.
std::optional<PowerProduct> pp_divides(const PowerProduct& s, const PowerProduct& t);
/// Pointwise max.
PowerProduct pp_lcm(const PowerProduct& s, const PowerProduct& t);
/// Pointwise min.
PowerProduct pp_gcd(const PowerProduct& s, const PowerProduct& t);

/// A term t*e_j: power-product plus component index of the free module.
struct Term {
    PowerProduct pp;
    ComponentIndex component = 0;

    friend bool operator==(const Term&, const Term&) = default;
};

/// stimes: multiplies the power-product part, keeps the component.
inline Term stimes(const PowerProduct& t, const Term& v) {
    return Term{pp_mul(t, v.pp), v.component};
}

/// Term divisibility: components must match, then power-products must divide.
inline std::optional<PowerProduct> dvd_term(const Term& u, const Term& v) {
    if (u.component != v.component) return std::nullopt;
    return pp_divides(u.pp, v.pp);
}

}  // namespace gb

#endif
