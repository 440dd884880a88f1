#include "gb/order.hpp"

namespace gb {

namespace {

// First difference scanning from the highest variable index downwards;
// the larger exponent there wins.
Cmp lex_cmp(const PowerProduct& s, const PowerProduct& t) {
    const auto& a = s.factors();
    const auto& b = t.factors();
    auto i = a.rbegin();
    auto j = b.rbegin();
    while (i != a.rend() || j != b.rend()) {
        VarIndex va = (i != a.rend()) ? i->first : 0;
        VarIndex vb = (j != b.rend()) ? j->first : 0;
        if (i == a.rend() || (j != b.rend() && vb > va)) return Cmp::LT;
        if (j == b.rend() || va > vb) return Cmp::GT;
        if (i->second != j->second) return i->second > j->second ? Cmp::GT : Cmp::LT;
        ++i, ++j;
    }
    return Cmp::EQ;
}

// First difference scanning from the lowest variable index upwards;
// the *smaller* exponent there wins (standard degrevlex tie-break).
Cmp revlex_cmp(const PowerProduct& s, const PowerProduct& t) {
    const auto& a = s.factors();
    const auto& b = t.factors();
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (i == a.end()) return Cmp::GT;   // s has exponent 0 at j->first
        if (j == b.end()) return Cmp::LT;
        if (i->first < j->first) return Cmp::LT;  // t has exponent 0 there
        if (j->first < i->first) return Cmp::GT;
        if (i->second != j->second) return i->second < j->second ? Cmp::GT : Cmp::LT;
        ++i, ++j;
    }
    return Cmp::EQ;
}

}  // namespace

Cmp compare_pp(MonomialOrder ord, const PowerProduct& s, const PowerProduct& t) {
    switch (ord) {
        case MonomialOrder::Lex:
            return lex_cmp(s, t);
        case MonomialOrder::DegLex: {
            auto ds = s.degree(), dt = t.degree();
            if (ds != dt) return ds < dt ? Cmp::LT : Cmp::GT;
            return lex_cmp(s, t);
        }
        case MonomialOrder::DegRevLex: {
            auto ds = s.degree(), dt = t.degree();
            if (ds != dt) return ds < dt ? Cmp::LT : Cmp::GT;
            return revlex_cmp(s, t);
        }
    }
    return Cmp::EQ;
}

Cmp compare_term(TermOrder ord, const Term& u, const Term& v) {
    if (ord.extension == TermExtension::POT) {
        if (u.component != v.component)
            return u.component < v.component ? Cmp::LT : Cmp::GT;
        return compare_pp(ord.base, u.pp, v.pp);
    }
    Cmp c = compare_pp(ord.base, u.pp, v.pp);
    if (c != Cmp::EQ) return c;
    if (u.component != v.component)
        return u.component < v.component ? Cmp::LT : Cmp::GT;
    return Cmp::EQ;
}

}  // namespace gb
