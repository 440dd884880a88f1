#include "gb/text.hpp"

#include <cctype>

namespace gb {

std::optional<VarIndex> VarTable::index_of(const std::string& name) const {
    if (names.empty()) {
        // Default scheme: x<digits>.
        if (name.size() < 2 || name[0] != 'x') return std::nullopt;
        VarIndex v = 0;
        for (std::size_t i = 1; i < name.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
            v = v * 10 + (name[i] - '0');
        }
        return v;
    }
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<VarIndex>(i);
    return std::nullopt;
}

std::string VarTable::name_of(VarIndex v) const {
    if (v < names.size()) return names[v];
    return "x" + std::to_string(v);
}

std::string pp_to_string(const PowerProduct& pp, const VarTable& vars) {
    if (pp.is_unit()) return "1";
    std::string s;
    for (const auto& [v, e] : pp.factors()) {
        if (!s.empty()) s += "*";
        s += vars.name_of(v);
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string term_to_string(const Term& t, const VarTable& vars, bool scalar) {
    std::string s = pp_to_string(t.pp, vars);
    if (!scalar) s += "*e(" + std::to_string(t.component) + ")";
    return s;
}

std::string poly_to_string(const VecPoly& p, const VarTable& vars) {
    if (p.is_zero()) return "0";
    const bool scalar = p.is_scalar();
    std::string s;
    bool first = true;
    for (const auto& m : p.monomials()) {
        Rational mag = m.coeff.abs();
        if (first) {
            if (m.coeff.sign() < 0) s += "-";
            first = false;
        } else {
            s += m.coeff.sign() < 0 ? " - " : " + ";
        }
        std::vector<std::string> parts;
        if (!mag.is_one()) parts.push_back(mag.to_string());
        if (!m.term.pp.is_unit()) parts.push_back(pp_to_string(m.term.pp, vars));
        if (!scalar || m.term.component != 0)
            parts.push_back("e(" + std::to_string(m.term.component) + ")");
        if (parts.empty()) parts.push_back("1");
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += "*";
            s += parts[i];
        }
    }
    return s;
}

namespace {

struct Lexer {
    const std::string& src;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= src.size();
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) const {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < pos && i < src.size(); ++i) {
            if (src[i] == '\n') ++line, col = 1;
            else ++col;
        }
        throw ParseError(msg, line, col);
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    std::string number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (start == pos) fail("expected a number");
        return src.substr(start, pos - start);
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        auto ok = [&](char c, bool lead) {
            return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
                   (!lead && std::isdigit(static_cast<unsigned char>(c)));
        };
        while (pos < src.size() && ok(src[pos], pos == start)) ++pos;
        if (start == pos) fail("expected an identifier");
        return src.substr(start, pos - start);
    }
};

struct Parser {
    Lexer lex;
    TermOrder ord;
    const VarTable& vars;

    VecPoly expr() {
        bool neg = false;
        if (lex.accept('-'))
            neg = true;
        else
            lex.accept('+');
        VecPoly p = product();
        if (neg) p = poly_neg(p);
        while (true) {
            if (lex.accept('+'))
                p = poly_add(ord, p, product());
            else if (lex.accept('-'))
                p = poly_sub(ord, p, product());
            else
                break;
        }
        return p;
    }

    VecPoly product() {
        bool saw_component = false;
        VecPoly p = factor(saw_component);
        while (lex.accept('*')) {
            bool is_component = false;
            VecPoly f = factor(is_component);
            if (is_component && saw_component)
                lex.fail("repeated component factor e(i) in one product");
            saw_component = saw_component || is_component;
            if (!p.is_scalar() && !f.is_scalar())
                lex.fail("product of two non-scalar factors");
            p = p.is_scalar() ? poly_mul(ord, p, f) : poly_mul(ord, f, p);
        }
        return p;
    }

    VecPoly factor(bool& is_component) {
        char c = lex.peek();
        if (c == '(') {
            lex.expect('(');
            VecPoly p = expr();
            lex.expect(')');
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = lex.number();
            if (lex.accept('/')) {
                std::string den = lex.number();
                if (den == "0" || den.find_first_not_of('0') == std::string::npos)
                    lex.fail("zero denominator");
                return VecPoly::constant(Rational::from_string(num + "/" + den));
            }
            return VecPoly::constant(Rational::from_string(num));
        }
        std::string name = lex.ident();
        if (name == "e" && lex.peek() == '(') {
            lex.expect('(');
            ComponentIndex j = static_cast<ComponentIndex>(std::stoul(lex.number()));
            lex.expect(')');
            is_component = true;
            return VecPoly::monomial(Rational(1), Term{PowerProduct{}, j});
        }
        auto v = vars.index_of(name);
        if (!v) lex.fail("unknown variable '" + name + "'");
        Exponent e = 1;
        if (lex.accept('^')) e = static_cast<Exponent>(std::stoul(lex.number()));
        return VecPoly::monomial(Rational(1), Term{PowerProduct::variable(*v, e), 0});
    }
};

}  // namespace

VecPoly parse_poly(TermOrder ord, const std::string& src, const VarTable& vars) {
    Parser p{Lexer{src}, ord, vars};
    VecPoly r = p.expr();
    if (!p.lex.eof()) p.lex.fail("unexpected trailing input");
    return r;
}

std::optional<MonomialOrder> parse_monomial_order(const std::string& name) {
    if (name == "lex") return MonomialOrder::Lex;
    if (name == "dlex") return MonomialOrder::DegLex;
    if (name == "drlex") return MonomialOrder::DegRevLex;
    return std::nullopt;
}

std::optional<TermExtension> parse_term_extension(const std::string& name) {
    if (name == "pot") return TermExtension::POT;
    if (name == "top") return TermExtension::TOP;
    return std::nullopt;
}

std::string order_name(MonomialOrder o) {
    switch (o) {
        case MonomialOrder::Lex: return "lex";
        case MonomialOrder::DegLex: return "dlex";
        case MonomialOrder::DegRevLex: return "drlex";
    }
    return "?";
}

std::string extension_name(TermExtension e) {
    return e == TermExtension::POT ? "pot" : "top";
}

}  // namespace gb
