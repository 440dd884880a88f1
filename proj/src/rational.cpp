#include "gb/rational.hpp"

namespace gb {

Rational Rational::from_string(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (v.get_den() == 0)
        throw std::domain_error("Rational: zero denominator in '" + s + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace gb
