#include "cuboid/rational.hpp"

#include <stdexcept>

namespace cuboid {

std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

Rational rational_from_string(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(Integer(std::string(text)));
        }
        Integer num{std::string(text.substr(0, slash))};
        Integer den{std::string(text.substr(slash + 1))};
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    }
}

Integer isqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("isqrt of negative integer");
    return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const Integer& n, Integer* root) {
    if (n < 0) return false;
    Integer r = boost::multiprecision::sqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

}  // namespace cuboid
