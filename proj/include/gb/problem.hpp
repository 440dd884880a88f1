#ifndef GB_PROBLEM_HPP
#define GB_PROBLEM_HPP

#include "gb/text.hpp"

#include <string>
#include <vector>

namespace gb {

/// Parsed problem file: optional variable declarations and order settings,
/// plus one generator expression per line. Lines starting with '#' are
/// comments.
struct Problem {
    VarTable vars;
    TermOrder order;
    bool order_from_file = false;
    bool extension_from_file = false;
    std::vector<VecPoly> generators;

    bool scalar() const;
};

Problem parse_problem_text(const std::string& text, TermOrder default_order);
Problem load_problem(const std::string& path, TermOrder default_order);

}  // namespace gb

#endif
