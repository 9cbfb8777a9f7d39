#pragma once

#include "tame/set2d.hpp"

#include <string>
#include <utility>
#include <vector>

namespace tame {

// The evaluable measures on tame sets. Pi is the rectangle-cover outer
// measure, Rho the completely locally determined product measure, Xi the
// Lebesgue pullback onto the diagonal, Eta = Rho + Xi, and EtaT(t) the
// family Rho + t * Xi of product measures it generalizes to.
struct MeasureId {
    enum class Kind { Pi, Rho, Xi, Eta, EtaT };

    Kind kind;
    Rational weight; // EtaT only, >= 0

    static MeasureId pi() { return {Kind::Pi, 0}; }
    static MeasureId rho() { return {Kind::Rho, 0}; }
    static MeasureId xi() { return {Kind::Xi, 0}; }
    static MeasureId eta() { return {Kind::Eta, 0}; }
    static MeasureId eta_t(Rational t) {
        if (t < 0) throw domain_error("eta_t weight must be nonnegative, got " + t.str());
        return {Kind::EtaT, std::move(t)};
    }

    std::string str() const {
        switch (kind) {
        case Kind::Pi: return "pi";
        case Kind::Rho: return "rho";
        case Kind::Xi: return "xi";
        case Kind::Eta: return "eta";
        default: return "eta_t(" + weight.str() + ")";
        }
    }

    friend bool operator==(const MeasureId& a, const MeasureId& b) {
        return a.kind == b.kind && (a.kind != Kind::EtaT || a.weight == b.weight);
    }
};

namespace detail {

// Common core of pi and rho on the rectangle part: counting times Lebesgue,
// cell by cell over the disjoint column decomposition. Holes are ignored:
// a slope-1 hole removes one null point per vertical fiber, which moves
// neither measure.
inline ExtReal rect_product_mass(const Set2D& e) {
    ExtReal total;
    for (const Set2D::ColumnCell& cc : e.disjoint_columns())
        total = total + counting(cc.cell) * lebesgue(cc.columns);
    return total;
}

} // namespace detail

// Rectangle-cover outer measure. Any graph segment forces infinity: a
// positive-length slope-1 segment meets uncountably many vertical fibers in
// exactly one point each, and no countable rectangle cover of it has finite
// mass. Rectangle patches contribute counting x Lebesgue per column cell.
inline ExtReal pi_outer(const Set2D& e) {
    if (!e.graphs().empty()) return ExtReal::infinity();
    return detail::rect_product_mass(e);
}

// Completely locally determined product measure: the supremum of pi over
// restrictions to finite-counting x finite-Lebesgue rectangles. Graph
// segments and holes restrict to finitely many points there, so they
// contribute exactly zero.
inline ExtReal rho_cld(const Set2D& e) { return detail::rect_product_mass(e); }

// Lebesgue measure pulled back through x -> (x,x): nu of the diagonal trace.
// Always finite, at most 1.
inline ExtReal xi(const Set2D& e) { return lebesgue(e.diagonal_trace()); }

// The counterexample measure rho + xi.
inline ExtReal eta(const Set2D& e) { return rho_cld(e) + xi(e); }

// The one-parameter family rho + t * xi; each t >= 0 yields a product
// measure, and distinct t are separated by the diagonal.
inline ExtReal eta_family(const Rational& t, const Set2D& e) {
    if (t < 0) throw domain_error("eta_family weight must be nonnegative, got " + t.str());
    return rho_cld(e) + ExtReal::finite(t) * xi(e);
}

inline ExtReal evaluate(const MeasureId& m, const Set2D& e) {
    switch (m.kind) {
    case MeasureId::Kind::Pi: return pi_outer(e);
    case MeasureId::Kind::Rho: return rho_cld(e);
    case MeasureId::Kind::Xi: return xi(e);
    case MeasureId::Kind::Eta: return eta(e);
    default: return eta_family(m.weight, e);
    }
}

// Whether m assigns counting(A) * lebesgue(B) to the rectangle A x B — the
// defining identity of a product measure, checked exactly.
inline bool check_product_property(const MeasureId& m, const Set1D& a, const Set1D& b) {
    return evaluate(m, Set2D::rectangle(a, b)) == counting(a) * lebesgue(b);
}

struct ShiftComparison {
    ExtReal before, after;
    bool invariant;
};

// Evaluates m on e and on its vertical shift by c.
inline ShiftComparison shift_comparison(const MeasureId& m, const Set2D& e, const Rational& c) {
    ExtReal before = evaluate(m, e);
    ExtReal after = evaluate(m, e.vshifted(c));
    return {before, after, before == after};
}

// Evaluation table for one set expression.
struct MeasureReport {
    std::string expression;
    std::vector<std::pair<MeasureId, ExtReal>> values;
};

inline MeasureReport measure_report(const Set2D& e, std::string expression,
                                    const std::vector<Rational>& family_weights = {}) {
    MeasureReport report{std::move(expression), {}};
    report.values.emplace_back(MeasureId::pi(), pi_outer(e));
    report.values.emplace_back(MeasureId::rho(), rho_cld(e));
    report.values.emplace_back(MeasureId::xi(), xi(e));
    report.values.emplace_back(MeasureId::eta(), eta(e));
    for (const Rational& t : family_weights)
        report.values.emplace_back(MeasureId::eta_t(t), eta_family(t, e));
    return report;
}

} // namespace tame
