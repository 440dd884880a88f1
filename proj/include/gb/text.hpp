#ifndef GB_TEXT_HPP
#define GB_TEXT_HPP

#include "gb/order.hpp"
#include "gb/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gb {

/// Name <-> index mapping for variables. With no declared names, variables
/// print as x<i> and identifiers of that shape parse back to their index.
struct VarTable {
    std::vector<std::string> names;

    std::optional<VarIndex> index_of(const std::string& name) const;
    std::string name_of(VarIndex v) const;
};

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(std::string msg, int line_, int col_)
        : std::runtime_error(std::move(msg)), line(line_), column(col_) {}
};

std::string pp_to_string(const PowerProduct& pp, const VarTable& vars = {});
/// scalar: omit the e(<j>) suffix (component must then be 0).
std::string term_to_string(const Term& t, const VarTable& vars = {}, bool scalar = false);

/// Canonical form: monomials descending, "c*x..*e(j)" joined by " + " / " - ".
/// The e(0) suffix is omitted for scalar polynomials; parse round-trips exactly.
std::string poly_to_string(const VecPoly& p, const VarTable& vars = {});

/// Grammar: expr := sign? term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := rational | var ('^' nat)? | 'e' '(' nat ')' | '(' expr ')'.
/// At most one component factor per product. Throws ParseError.
VecPoly parse_poly(TermOrder ord, const std::string& src, const VarTable& vars = {});

std::optional<MonomialOrder> parse_monomial_order(const std::string& name);
std::optional<TermExtension> parse_term_extension(const std::string& name);
std::string order_name(MonomialOrder o);
std::string extension_name(TermExtension e);

}  // namespace gb

#endif
