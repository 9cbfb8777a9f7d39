#pragma once

#include "tame/errors.hpp"
#include "tame/rational.hpp"

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace tame {

// Nonnegative extended real [0, inf], the codomain of every measure here.
// Follows the measure-theoretic product convention 0 * inf = 0. There is no
// subtraction: measures are only ever added and scaled, so inf - inf cannot
// arise.
class ExtReal {
public:
    ExtReal() = default; // zero

    static ExtReal finite(Rational v) {
        if (v < 0) throw domain_error("ExtReal: finite value must be nonnegative, got " + v.str());
        ExtReal r;
        r.value_ = std::move(v);
        return r;
    }

    static ExtReal infinity() {
        ExtReal r;
        r.infinite_ = true;
        return r;
    }

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }
    bool is_zero() const { return !infinite_ && value_ == 0; }

    // Finite payload; only meaningful when is_finite().
    const Rational& value() const { return value_; }

    friend ExtReal operator+(const ExtReal& a, const ExtReal& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return finite(a.value_ + b.value_);
    }

    friend ExtReal operator*(const ExtReal& a, const ExtReal& b) {
        if (a.is_zero() || b.is_zero()) return ExtReal(); // 0 * inf = 0
        if (a.infinite_ || b.infinite_) return infinity();
        return finite(a.value_ * b.value_);
    }

    friend bool operator==(const ExtReal& a, const ExtReal& b) {
        if (a.infinite_ != b.infinite_) return false;
        return a.infinite_ || a.value_ == b.value_;
    }
    friend bool operator!=(const ExtReal& a, const ExtReal& b) { return !(a == b); }

    // Infinity compares strictly greater than every finite value.
    friend bool operator<(const ExtReal& a, const ExtReal& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const ExtReal& a, const ExtReal& b) { return a < b || a == b; }
    friend bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
    friend bool operator>=(const ExtReal& a, const ExtReal& b) { return b <= a; }

    // "p/q" (or "n" when integral), "inf" for infinity.
    std::string str() const { return infinite_ ? "inf" : value_.str(); }

    friend std::ostream& operator<<(std::ostream& os, const ExtReal& v) { return os << v.str(); }

private:
    bool infinite_ = false;
    Rational value_ = 0;
};

// Left fold of +; the empty sum is 0.
template <typename Range>
ExtReal ext_sum(const Range& values) {
    ExtReal total;
    for (const ExtReal& v : values) total = total + v;
    return total;
}

inline ExtReal ext_sum(std::initializer_list<ExtReal> values) {
    return ext_sum<std::initializer_list<ExtReal>>(values);
}

} // namespace tame
