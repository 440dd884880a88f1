#include "gb/monomial.hpp"

#include <algorithm>

namespace gb {

PowerProduct::PowerProduct(std::vector<std::pair<VarIndex, Exponent>> factors)
    : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<VarIndex, Exponent>> merged;
    for (const auto& [v, e] : factors_) {
        if (!merged.empty() && merged.back().first == v)
            merged.back().second += e;
        else
            merged.push_back({v, e});
    }
    std::erase_if(merged, [](const auto& f) { return f.second == 0; });
    factors_ = std::move(merged);
}

PowerProduct PowerProduct::variable(VarIndex v, Exponent e) {
    PowerProduct p;
    if (e != 0) p.factors_.push_back({v, e});
    return p;
}

Exponent PowerProduct::exponent(VarIndex v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const auto& f, VarIndex x) { return f.first < x; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
}

std::uint64_t PowerProduct::degree() const {
    std::uint64_t d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

PowerProduct pp_mul(const PowerProduct& s, const PowerProduct& t) {
    PowerProduct r;
    r.factors_.reserve(s.factors_.size() + t.factors_.size());
    auto a = s.factors_.begin(), b = t.factors_.begin();
    while (a != s.factors_.end() && b != t.factors_.end()) {
        if (a->first < b->first)
            r.factors_.push_back(*a++);
        else if (b->first < a->first)
            r.factors_.push_back(*b++);
        else {
            r.factors_.push_back({a->first, a->second + b->second});
            ++a, ++b;
        }
    }
    r.factors_.insert(r.factors_.end(), a, s.factors_.end());
    r.factors_.insert(r.factors_.end(), b, t.factors_.end());
    return r;
}

std::optional<PowerProduct> pp_divides(const PowerProduct& s, const PowerProduct& t) {
    PowerProduct q;
    auto a = s.factors_.begin();
    auto b = t.factors_.begin();
    while (a != s.factors_.end()) {
        while (b != t.factors_.end() && b->first < a->first) q.factors_.push_back(*b++);
        if (b == t.factors_.end() || b->first != a->first || b->second < a->second)
            return std::nullopt;
        if (b->second > a->second) q.factors_.push_back({b->first, b->second - a->second});
        ++a, ++b;
    }
    q.factors_.insert(q.factors_.end(), b, t.factors_.end());
    return q;
}

PowerProduct pp_lcm(const PowerProduct& s, const PowerProduct& t) {
    PowerProduct r;
    auto a = s.factors_.begin(), b = t.factors_.begin();
    while (a != s.factors_.end() && b != t.factors_.end()) {
        if (a->first < b->first)
            r.factors_.push_back(*a++);
        else if (b->first < a->first)
            r.factors_.push_back(*b++);
        else {
            r.factors_.push_back({a->first, std::max(a->second, b->second)});
            ++a, ++b;
        }
    }
    r.factors_.insert(r.factors_.end(), a, s.factors_.end());
    r.factors_.insert(r.factors_.end(), b, t.factors_.end());
    return r;
}

PowerProduct pp_gcd(const PowerProduct& s, const PowerProduct& t) {
    PowerProduct r;
    auto a = s.factors_.begin(), b = t.factors_.begin();
    while (a != s.factors_.end() && b != t.factors_.end()) {
        if (a->first < b->first)
            ++a;
        else if (b->first < a->first)
            ++b;
        else {
            r.factors_.push_back({a->first, std::min(a->second, b->second)});
            ++a, ++b;
        }
    }
    return r;
}

}  // namespace gb
