#include "gb/problem.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gb {

namespace {

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

bool Problem::scalar() const {
    return std::all_of(generators.begin(), generators.end(),
                       [](const VecPoly& p) { return p.is_scalar(); });
}

Problem parse_problem_text(const std::string& text, TermOrder default_order) {
    Problem prob;
    prob.order = default_order;

    std::vector<std::pair<int, std::string>> lines;
    {
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (auto hash = line.find('#'); hash != std::string::npos)
                line = line.substr(0, hash);
            line = strip(line);
            if (!line.empty()) lines.push_back({lineno, line});
        }
    }

    // Header pass, then generators.
    std::vector<std::pair<int, std::string>> body;
    for (const auto& [lineno, line] : lines) {
        if (line.rfind("vars:", 0) == 0) {
            // Comma- or whitespace-separated names.
            std::string rest = line.substr(5);
            for (auto& c : rest)
                if (c == ',') c = ' ';
            std::istringstream vs(rest);
            std::string name;
            bool any = false;
            while (vs >> name) {
                prob.vars.names.push_back(name);
                any = true;
            }
            if (!any) throw ParseError("empty vars: header", lineno, 1);
        } else if (line.rfind("order:", 0) == 0) {
            auto o = parse_monomial_order(strip(line.substr(6)));
            if (!o) throw ParseError("unknown order in order: header", lineno, 1);
            prob.order.base = *o;
            prob.order_from_file = true;
        } else if (line.rfind("term-order:", 0) == 0) {
            auto e = parse_term_extension(strip(line.substr(11)));
            if (!e) throw ParseError("unknown extension in term-order: header", lineno, 1);
            prob.order.extension = *e;
            prob.extension_from_file = true;
        } else {
            body.push_back({lineno, line});
        }
    }

    for (const auto& [lineno, line] : body) {
        try {
            prob.generators.push_back(parse_poly(prob.order, line, prob.vars));
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()) + " (generator on line " +
                                 std::to_string(lineno) + ")",
                             lineno, e.column);
        }
    }
    return prob;
}

Problem load_problem(const std::string& path, TermOrder default_order) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open problem file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem_text(ss.str(), default_order);
}

}  // namespace gb
