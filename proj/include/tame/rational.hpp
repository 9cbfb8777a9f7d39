#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace tame {

// Exact arbitrary-precision rational, always stored in lowest terms with a
// positive denominator. Value equality, total order.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Renders as "p/q", or plain "n" when the denominator is 1.
inline std::string rational_str(const Rational& q) { return q.str(); }

// Accepts "p/q" or a plain integer, with an optional leading sign.
inline std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    auto digits = [&](BigInt& out) -> bool {
        if (i >= text.size() || text[i] < '0' || text[i] > '9') return false;
        out = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            out = out * 10 + (text[i] - '0');
            ++i;
        }
        return true;
    };
    BigInt num;
    if (!digits(num)) return std::nullopt;
    BigInt den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        if (!digits(den) || den == 0) return std::nullopt;
    }
    if (i != text.size()) return std::nullopt;
    Rational value(num, den);
    return negative ? Rational(-value) : value;
}

} // namespace tame
