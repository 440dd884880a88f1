#ifndef GB_ORDER_HPP
#define GB_ORDER_HPP

#include "gb/monomial.hpp"

namespace gb {

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

/// Admissible orders on power-products. The variable with the higher index
/// is the lex-larger one: x0 < x1 < x2 < ...
enum class MonomialOrder { Lex, DegLex, DegRevLex };

/// Extension of a monomial order to terms t*e_j.
enum class TermExtension { POT, TOP };

struct TermOrder {
    MonomialOrder base = MonomialOrder::DegRevLex;
    TermExtension extension = TermExtension::POT;

    friend bool operator==(const TermOrder&, const TermOrder&) = default;
};

Cmp compare_pp(MonomialOrder ord, const PowerProduct& s, const PowerProduct& t);
Cmp compare_term(TermOrder ord, const Term& u, const Term& v);

inline bool pp_less(MonomialOrder ord, const PowerProduct& s, const PowerProduct& t) {
    return compare_pp(ord, s, t) == Cmp::LT;
}
inline bool term_less(TermOrder ord, const Term& u, const Term& v) {
    return compare_term(ord, u, v) == Cmp::LT;
}

}  // namespace gb

#endif
