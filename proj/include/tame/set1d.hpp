#pragma once

#include "tame/extreal.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace tame {

// Interval endpoint on the extended line: -inf < every rational < +inf.
struct Endpoint {
    enum class Kind { NegInf, Finite, PosInf };

    Kind kind = Kind::Finite;
    Rational value; // meaningful only when kind == Finite

    static Endpoint neg_inf() { return {Kind::NegInf, 0}; }
    static Endpoint pos_inf() { return {Kind::PosInf, 0}; }
    static Endpoint at(Rational v) { return {Kind::Finite, std::move(v)}; }

    bool is_finite() const { return kind == Kind::Finite; }

    friend bool operator==(const Endpoint& a, const Endpoint& b) {
        if (a.kind != b.kind) return false;
        return a.kind != Kind::Finite || a.value == b.value;
    }
    friend bool operator!=(const Endpoint& a, const Endpoint& b) { return !(a == b); }
    friend bool operator<(const Endpoint& a, const Endpoint& b) {
        auto rank = [](Kind k) { return k == Kind::NegInf ? -1 : (k == Kind::PosInf ? 1 : 0); };
        if (rank(a.kind) != rank(b.kind)) return rank(a.kind) < rank(b.kind);
        return a.kind == Kind::Finite && a.value < b.value;
    }
    friend bool operator<=(const Endpoint& a, const Endpoint& b) { return a < b || a == b; }
    friend bool operator>(const Endpoint& a, const Endpoint& b) { return b < a; }
    friend bool operator>=(const Endpoint& a, const Endpoint& b) { return b <= a; }
};

// Nondegenerate interval: lo < hi strictly, and an infinite end is never
// closed. Degenerate [a,a] values live in Set1D's point list instead.
struct Interval {
    Endpoint lo, hi;
    bool lo_closed = false, hi_closed = false;

    Interval(Endpoint lo_, Endpoint hi_, bool lo_closed_, bool hi_closed_)
        : lo(std::move(lo_)), hi(std::move(hi_)), lo_closed(lo_closed_), hi_closed(hi_closed_) {
        if (!(lo < hi))
            throw domain_error("Interval: lower endpoint must be strictly below upper endpoint");
        if ((!lo.is_finite() && lo_closed) || (!hi.is_finite() && hi_closed))
            throw domain_error("Interval: an infinite endpoint cannot be closed");
    }

    static Interval closed(Rational a, Rational b) {
        return Interval(Endpoint::at(std::move(a)), Endpoint::at(std::move(b)), true, true);
    }
    static Interval open(Rational a, Rational b) {
        return Interval(Endpoint::at(std::move(a)), Endpoint::at(std::move(b)), false, false);
    }

    bool contains(const Rational& x) const {
        Endpoint p = Endpoint::at(x);
        if (p < lo || hi < p) return false;
        if (p == lo) return lo_closed;
        if (p == hi) return hi_closed;
        return true;
    }

    // Whether the whole open atom (a, b) lies inside this interval; assumes
    // a < b and that a, b occur among the sweep's critical endpoints.
    bool covers_open(const Endpoint& a, const Endpoint& b) const {
        return lo <= a && b <= hi;
    }

    ExtReal length() const {
        if (!lo.is_finite() || !hi.is_finite()) return ExtReal::infinity();
        return ExtReal::finite(hi.value - lo.value);
    }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi && a.lo_closed == b.lo_closed &&
               a.hi_closed == b.hi_closed;
    }
    friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }
};

namespace detail {

// Atom of an endpoint sweep: a critical point {at} or an open gap (lo, hi)
// between consecutive critical points. Any set whose endpoints all occur
// among the critical points is constant on each atom.
struct Atom {
    bool is_point;
    Rational at;      // point atom
    Endpoint lo, hi;  // open atom

    static Atom point(Rational q) { return {true, std::move(q), {}, {}}; }
    static Atom gap(Endpoint a, Endpoint b) { return {false, 0, std::move(a), std::move(b)}; }
};

inline std::vector<Atom> atoms_over(const std::vector<Rational>& critical_sorted) {
    std::vector<Atom> atoms;
    atoms.reserve(2 * critical_sorted.size() + 1);
    Endpoint prev = Endpoint::neg_inf();
    for (const Rational& q : critical_sorted) {
        atoms.push_back(Atom::gap(prev, Endpoint::at(q)));
        atoms.push_back(Atom::point(q));
        prev = Endpoint::at(q);
    }
    atoms.push_back(Atom::gap(prev, Endpoint::pos_inf()));
    return atoms;
}

} // namespace detail

// Canonical finite union of disjoint rational-endpoint intervals plus a
// finite point set. The representation is unique: two Set1D values denote
// the same point set iff they are structurally equal. Immutable.
class Set1D {
public:
    Set1D() = default; // empty set

    static Set1D empty() { return Set1D(); }

    static Set1D point(Rational p) { return points({std::move(p)}); }

    static Set1D points(std::vector<Rational> ps) { return normalized({}, std::move(ps)); }

    static Set1D interval(Interval iv) { return normalized({std::move(iv)}, {}); }

    static Set1D closed(Rational a, Rational b) {
        if (a == b) return point(std::move(a));
        return interval(Interval::closed(std::move(a), std::move(b)));
    }
    static Set1D open(Rational a, Rational b) { return interval(Interval::open(std::move(a), std::move(b))); }

    static Set1D unit() { return closed(0, 1); }

    static Set1D whole_line() {
        return interval(Interval(Endpoint::neg_inf(), Endpoint::pos_inf(), false, false));
    }

    // Unique canonical form of the union of the raw pieces: overlapping and
    // touching intervals merge, boundary and interior points are absorbed,
    // degenerate pieces land in the point list.
    static Set1D normalized(std::vector<Interval> raw_intervals, std::vector<Rational> raw_points) {
        std::vector<Rational> critical;
        critical.reserve(2 * raw_intervals.size() + raw_points.size());
        for (const Interval& iv : raw_intervals) {
            if (iv.lo.is_finite()) critical.push_back(iv.lo.value);
            if (iv.hi.is_finite()) critical.push_back(iv.hi.value);
        }
        for (const Rational& p : raw_points) critical.push_back(p);
        std::sort(critical.begin(), critical.end());
        critical.erase(std::unique(critical.begin(), critical.end()), critical.end());

        auto member = [&](const detail::Atom& atom) {
            if (atom.is_point) {
                for (const Rational& p : raw_points)
                    if (p == atom.at) return true;
                for (const Interval& iv : raw_intervals)
                    if (iv.contains(atom.at)) return true;
                return false;
            }
            for (const Interval& iv : raw_intervals)
                if (iv.covers_open(atom.lo, atom.hi)) return true;
            return false;
        };
        return rebuild(critical, member);
    }

    const std::vector<Interval>& intervals() const { return intervals_; }
    const std::vector<Rational>& points() const { return points_; }

    bool is_empty() const { return intervals_.empty() && points_.empty(); }
    bool pure_points() const { return intervals_.empty(); }
    bool is_bounded() const {
        for (const Interval& iv : intervals_)
            if (!iv.lo.is_finite() || !iv.hi.is_finite()) return false;
        return true;
    }

    bool contains(const Rational& x) const {
        if (std::binary_search(points_.begin(), points_.end(), x)) return true;
        const Interval* iv = interval_at(Endpoint::at(x));
        return iv != nullptr && iv->contains(x);
    }

    Set1D shifted(const Rational& c) const {
        // Translation preserves canonical form piecewise.
        Set1D out;
        out.intervals_.reserve(intervals_.size());
        for (const Interval& iv : intervals_) {
            Endpoint lo = iv.lo.is_finite() ? Endpoint::at(iv.lo.value + c) : iv.lo;
            Endpoint hi = iv.hi.is_finite() ? Endpoint::at(iv.hi.value + c) : iv.hi;
            out.intervals_.push_back(Interval(lo, hi, iv.lo_closed, iv.hi_closed));
        }
        out.points_.reserve(points_.size());
        for (const Rational& p : points_) out.points_.push_back(p + c);
        return out;
    }

    // Intervals only / points only; both remain canonical.
    Set1D interval_part() const {
        Set1D out;
        out.intervals_ = intervals_;
        return out;
    }
    Set1D point_part() const {
        Set1D out;
        out.points_ = points_;
        return out;
    }

    friend Set1D set_union(const Set1D& a, const Set1D& b) {
        return a.combine(b, [](bool x, bool y) { return x || y; });
    }
    friend Set1D set_intersect(const Set1D& a, const Set1D& b) {
        return a.combine(b, [](bool x, bool y) { return x && y; });
    }
    friend Set1D set_difference(const Set1D& a, const Set1D& b) {
        return a.combine(b, [](bool x, bool y) { return x && !y; });
    }

    bool subset_of(const Set1D& b) const {
        bool ok = true;
        sweep_with(b, [&](const detail::Atom&, bool in_a, bool in_b) {
            if (in_a && !in_b) ok = false;
        });
        return ok;
    }

    friend bool operator==(const Set1D& a, const Set1D& b) {
        return a.intervals_ == b.intervals_ && a.points_ == b.points_;
    }
    friend bool operator!=(const Set1D& a, const Set1D& b) { return !(a == b); }

    // Textual form in the query syntax: pieces joined by " | ", points as one
    // braces group, "empty" for the empty set.
    std::string str() const {
        if (is_empty()) return "empty";
        std::string out;
        auto ep = [](const Endpoint& e) {
            switch (e.kind) {
            case Endpoint::Kind::NegInf: return std::string("-inf");
            case Endpoint::Kind::PosInf: return std::string("inf");
            default: return e.value.str();
            }
        };
        for (const Interval& iv : intervals_) {
            if (!out.empty()) out += " | ";
            out += iv.lo_closed ? '[' : '(';
            out += ep(iv.lo) + "," + ep(iv.hi);
            out += iv.hi_closed ? ']' : ')';
        }
        if (!points_.empty()) {
            if (!out.empty()) out += " | ";
            out += '{';
            for (std::size_t i = 0; i < points_.size(); ++i) {
                if (i) out += ",";
                out += points_[i].str();
            }
            out += '}';
        }
        return out;
    }

    // All finite endpoint values and points, sorted and distinct.
    std::vector<Rational> critical_values() const {
        std::vector<Rational> crit;
        crit.reserve(2 * intervals_.size() + points_.size());
        for (const Interval& iv : intervals_) {
            if (iv.lo.is_finite()) crit.push_back(iv.lo.value);
            if (iv.hi.is_finite()) crit.push_back(iv.hi.value);
        }
        for (const Rational& p : points_) crit.push_back(p);
        std::sort(crit.begin(), crit.end());
        crit.erase(std::unique(crit.begin(), crit.end()), crit.end());
        return crit;
    }

    bool covers_atom(const detail::Atom& atom) const {
        if (atom.is_point) return contains(atom.at);
        const Interval* iv = interval_at(atom.lo);
        return iv != nullptr && iv->covers_open(atom.lo, atom.hi);
    }

private:
    std::vector<Interval> intervals_; // pairwise disjoint, sorted by lo, maximal
    std::vector<Rational> points_;    // strictly increasing, isolated from intervals

    // Last interval whose lo is <= e, or null. Disjointness makes it the only
    // candidate that can contain anything at or right of e.
    const Interval* interval_at(const Endpoint& e) const {
        auto it = std::upper_bound(intervals_.begin(), intervals_.end(), e,
                                   [](const Endpoint& v, const Interval& iv) { return v < iv.lo; });
        if (it == intervals_.begin()) return nullptr;
        return &*std::prev(it);
    }

    template <typename Fn>
    void sweep_with(const Set1D& b, Fn&& visit) const {
        std::vector<Rational> crit = critical_values();
        std::vector<Rational> crit_b = b.critical_values();
        std::vector<Rational> merged;
        merged.reserve(crit.size() + crit_b.size());
        std::merge(crit.begin(), crit.end(), crit_b.begin(), crit_b.end(),
                   std::back_inserter(merged));
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        for (const detail::Atom& atom : detail::atoms_over(merged))
            visit(atom, covers_atom(atom), b.covers_atom(atom));
    }

    template <typename Combine>
    Set1D combine(const Set1D& b, Combine&& keep) const {
        std::vector<Rational> crit = critical_values();
        std::vector<Rational> crit_b = b.critical_values();
        std::vector<Rational> merged;
        merged.reserve(crit.size() + crit_b.size());
        std::merge(crit.begin(), crit.end(), crit_b.begin(), crit_b.end(),
                   std::back_inserter(merged));
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        return rebuild(merged, [&](const detail::Atom& atom) {
            return keep(covers_atom(atom), b.covers_atom(atom));
        });
    }

    // Reassembles the canonical form from atom memberships: maximal runs of
    // member atoms become intervals, isolated point atoms become points.
    template <typename Member>
    static Set1D rebuild(const std::vector<Rational>& critical, Member&& member) {
        std::vector<detail::Atom> atoms = detail::atoms_over(critical);
        Set1D out;
        std::size_t i = 0;
        while (i < atoms.size()) {
            if (!member(atoms[i])) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j + 1 < atoms.size() && member(atoms[j + 1])) ++j;
            if (i == j && atoms[i].is_point) {
                out.points_.push_back(atoms[i].at);
            } else {
                const detail::Atom& first = atoms[i];
                const detail::Atom& last = atoms[j];
                Endpoint lo = first.is_point ? Endpoint::at(first.at) : first.lo;
                Endpoint hi = last.is_point ? Endpoint::at(last.at) : last.hi;
                out.intervals_.push_back(Interval(lo, hi, first.is_point, last.is_point));
            }
            i = j + 1;
        }
        return out;
    }
};

// Lebesgue measure: total interval length; points are null.
inline ExtReal lebesgue(const Set1D& s) {
    ExtReal total;
    for (const Interval& iv : s.intervals()) total = total + iv.length();
    return total;
}

// Counting measure on the factor space [0,1]. Any nonempty interval is
// uncountable. Rejects sets not contained in [0,1] rather than clamping.
inline ExtReal counting(const Set1D& s) {
    if (!s.subset_of(Set1D::unit()))
        throw domain_error("counting measure is defined on subsets of [0,1], got " + s.str());
    if (!s.intervals().empty()) return ExtReal::infinity();
    return ExtReal::finite(Rational(static_cast<unsigned long>(s.points().size())));
}

} // namespace tame
