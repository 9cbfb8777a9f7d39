#pragma once

#include "tame/set1d.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tame {

// Slope-1 line segment bundle {(x, x + offset) : x in domain}, domain in [0,1].
struct GraphSpec {
    Rational offset;
    Set1D domain;

    friend bool operator==(const GraphSpec& a, const GraphSpec& b) {
        return a.offset == b.offset && a.domain == b.domain;
    }
    friend bool operator!=(const GraphSpec& a, const GraphSpec& b) { return !(a == b); }
};

// Product A x B minus a union of slope-1 graph segments (the holes). Holes are
// what keeps the algebra closed under difference: a rectangle minus a graph is
// not a finite union of rectangles and graphs.
struct RectPatch {
    Set1D x_factor; // nonempty subset of [0,1]
    Set1D y_factor; // nonempty
    std::vector<GraphSpec> holes; // distinct offsets, sorted; domains effective

    friend bool operator==(const RectPatch& a, const RectPatch& b) {
        return a.x_factor == b.x_factor && a.y_factor == b.y_factor && a.holes == b.holes;
    }
    friend bool operator!=(const RectPatch& a, const RectPatch& b) { return !(a == b); }
};

// Tame subset of [0,1] x R: a finite union of rectangle patches and graph
// segments. Closed under union, intersection, difference, and vertical shift.
// Patches may overlap; the set denoted is their union. Immutable.
class Set2D {
public:
    Set2D() = default; // empty set

    static Set2D empty() { return Set2D(); }

    // Measurable rectangle A x B with A inside the factor space [0,1].
    static Set2D rectangle(Set1D a, Set1D b) {
        require_in_unit(a, "rectangle x-factor");
        return make({RectPatch{std::move(a), std::move(b), {}}}, {});
    }

    // The diagonal {(x,x) : x in [0,1]}.
    static Set2D diagonal() { return make({}, {GraphSpec{0, Set1D::unit()}}); }

    // {(x, x+c) : x in d}; isolated domain points become point rectangles.
    static Set2D graph(Rational c, Set1D d) {
        require_in_unit(d, "graph domain");
        return make({}, {GraphSpec{std::move(c), std::move(d)}});
    }

    // Finite truncation of the nested construction whose limit is the
    // diagonal: intersection over n = 1..N of the n-square staircases
    // union_k [k/n,(k+1)/n]^2. Contains the diagonal for every N.
    static Set2D diagonal_approx(int n_max) {
        if (n_max < 1) throw domain_error("diagonal_approx requires N >= 1");
        Set2D acc = rectangle(Set1D::unit(), Set1D::unit());
        for (int n = 2; n <= n_max; ++n) {
            Set2D stair;
            for (int k = 0; k < n; ++k) {
                Set1D side = Set1D::closed(Rational(k, n), Rational(k + 1, n));
                stair = set_union(stair, rectangle(side, side));
            }
            acc = set_intersect(acc, stair);
        }
        return acc;
    }

    const std::vector<RectPatch>& rects() const { return rects_; }
    const std::vector<GraphSpec>& graphs() const { return graphs_; }

    // Normalization leaves no patch denoting the empty set.
    bool is_empty() const { return rects_.empty() && graphs_.empty(); }

    bool contains(const Rational& x, const Rational& y) const {
        for (const RectPatch& r : rects_) {
            if (!r.x_factor.contains(x) || !r.y_factor.contains(y)) continue;
            if (!hole_hits(r.holes, x, y)) return true;
        }
        for (const GraphSpec& g : graphs_)
            if (y == x + g.offset && g.domain.contains(x)) return true;
        return false;
    }

    // Vertical fiber {y : (x,y) in this} at a fixed x.
    Set1D fiber(const Rational& x) const {
        Set1D acc;
        for (const RectPatch& r : rects_) {
            if (!r.x_factor.contains(x)) continue;
            std::vector<Rational> removed;
            for (const GraphSpec& h : r.holes)
                if (h.domain.contains(x)) removed.push_back(x + h.offset);
            acc = set_union(acc, set_difference(r.y_factor, Set1D::points(std::move(removed))));
        }
        for (const GraphSpec& g : graphs_)
            if (g.domain.contains(x)) acc = set_union(acc, Set1D::point(x + g.offset));
        return acc;
    }

    // f^{-1}[E ∩ diagonal] for f(x) = (x,x): the x-set where E meets y = x.
    Set1D diagonal_trace() const {
        Set1D acc;
        for (const GraphSpec& g : graphs_)
            if (g.offset == 0) acc = set_union(acc, g.domain);
        for (const RectPatch& r : rects_) {
            Set1D t = set_intersect(r.x_factor, r.y_factor);
            if (const GraphSpec* h = find_offset(r.holes, 0)) t = set_difference(t, h->domain);
            acc = set_union(acc, t);
        }
        return acc;
    }

    // Vertical translation {(x, y+c) : (x,y) in this}. Structure-preserving:
    // every y-factor, hole offset, and graph offset moves by c.
    Set2D vshifted(const Rational& c) const {
        Set2D out;
        out.rects_.reserve(rects_.size());
        for (const RectPatch& r : rects_) {
            RectPatch moved{r.x_factor, r.y_factor.shifted(c), r.holes};
            for (GraphSpec& h : moved.holes) h.offset += c;
            out.rects_.push_back(std::move(moved));
        }
        out.graphs_.reserve(graphs_.size());
        for (const GraphSpec& g : graphs_) out.graphs_.push_back(GraphSpec{g.offset + c, g.domain});
        return out;
    }

    friend Set2D set_union(const Set2D& a, const Set2D& b) {
        std::vector<RectPatch> rects = a.rects_;
        rects.insert(rects.end(), b.rects_.begin(), b.rects_.end());
        std::vector<GraphSpec> graphs = a.graphs_;
        graphs.insert(graphs.end(), b.graphs_.begin(), b.graphs_.end());
        return make(std::move(rects), std::move(graphs));
    }

    friend Set2D set_intersect(const Set2D& a, const Set2D& b) {
        std::vector<RectPatch> rects;
        std::vector<GraphSpec> graphs;
        for (const RectPatch& r1 : a.rects_) {
            for (const RectPatch& r2 : b.rects_) {
                Set1D xi = set_intersect(r1.x_factor, r2.x_factor);
                if (xi.is_empty()) continue;
                Set1D yi = set_intersect(r1.y_factor, r2.y_factor);
                if (yi.is_empty()) continue;
                std::vector<GraphSpec> holes = r1.holes;
                holes.insert(holes.end(), r2.holes.begin(), r2.holes.end());
                rects.push_back(RectPatch{std::move(xi), std::move(yi), std::move(holes)});
            }
            for (const GraphSpec& g : b.graphs_) graphs.push_back(rect_graph_meet(r1, g));
        }
        for (const GraphSpec& g1 : a.graphs_) {
            for (const RectPatch& r2 : b.rects_) graphs.push_back(rect_graph_meet(r2, g1));
            for (const GraphSpec& g2 : b.graphs_)
                if (g1.offset == g2.offset)
                    graphs.push_back(GraphSpec{g1.offset, set_intersect(g1.domain, g2.domain)});
        }
        return make(std::move(rects), std::move(graphs));
    }

    friend Set2D set_difference(const Set2D& a, const Set2D& b) {
        Set2D acc = a;
        for (const RectPatch& r : b.rects_) acc = acc.minus_rect(r);
        for (const GraphSpec& g : b.graphs_) acc = acc.minus_graph(g);
        return acc;
    }

    bool subset_of(const Set2D& b) const { return set_difference(*this, b).is_empty(); }

    // Same denoted point set (representations may differ structurally).
    friend bool equivalent(const Set2D& a, const Set2D& b) {
        return a.subset_of(b) && b.subset_of(a);
    }

    friend bool operator==(const Set2D& a, const Set2D& b) {
        return a.rects_ == b.rects_ && a.graphs_ == b.graphs_;
    }
    friend bool operator!=(const Set2D& a, const Set2D& b) { return !(a == b); }

    // x-values with a nonempty fiber.
    Set1D x_footprint() const {
        Set1D acc;
        for (const RectPatch& r : rects_) acc = set_union(acc, r.x_factor);
        for (const GraphSpec& g : graphs_) acc = set_union(acc, g.domain);
        return acc;
    }

    struct YExtent {
        bool empty = true;
        bool bounded = true;
        Rational lo = 0, hi = 0; // meaningful when nonempty and bounded
    };

    YExtent y_extent() const {
        YExtent ext;
        auto widen = [&](const Endpoint& e, bool is_lo) {
            if (!e.is_finite()) {
                ext.bounded = false;
                ext.empty = false;
                return;
            }
            if (ext.empty) {
                ext.lo = ext.hi = e.value;
                ext.empty = false;
                return;
            }
            if (is_lo ? e.value < ext.lo : ext.hi < e.value) (is_lo ? ext.lo : ext.hi) = e.value;
        };
        auto widen_set = [&](const Set1D& s, const Rational& shift) {
            for (const Interval& iv : s.intervals()) {
                widen(iv.lo.is_finite() ? Endpoint::at(iv.lo.value + shift) : iv.lo, true);
                widen(iv.hi.is_finite() ? Endpoint::at(iv.hi.value + shift) : iv.hi, false);
            }
            for (const Rational& p : s.points()) {
                widen(Endpoint::at(p + shift), true);
                widen(Endpoint::at(p + shift), false);
            }
        };
        for (const RectPatch& r : rects_) widen_set(r.y_factor, 0);
        for (const GraphSpec& g : graphs_) widen_set(g.domain, g.offset);
        return ext;
    }

    // Partition of the rectangle footprint into x-cells on which the union of
    // covering y-factors is constant. Cells are the atoms of the common
    // refinement of all x-factors: maximal open intervals and singletons.
    // Holes and graphs are ignored.
    struct ColumnCell {
        Set1D cell;    // single open interval or single point
        Set1D columns; // union of y-factors of the patches covering the cell
    };

    std::vector<ColumnCell> disjoint_columns() const {
        std::vector<Rational> crit;
        for (const RectPatch& r : rects_)
            for (const Rational& v : r.x_factor.critical_values()) crit.push_back(v);
        std::sort(crit.begin(), crit.end());
        crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

        std::vector<ColumnCell> cells;
        for (const detail::Atom& atom : detail::atoms_over(crit)) {
            Set1D columns;
            bool covered = false;
            for (const RectPatch& r : rects_) {
                if (!r.x_factor.covers_atom(atom)) continue;
                covered = true;
                columns = set_union(columns, r.y_factor);
            }
            if (!covered) continue;
            Set1D cell = atom.is_point
                             ? Set1D::point(atom.at)
                             : Set1D::interval(Interval(atom.lo, atom.hi, false, false));
            cells.push_back(ColumnCell{std::move(cell), std::move(columns)});
        }
        return cells;
    }

    // Invariant audit used by generator soundness tests; throws on breach.
    void validate() const {
        for (const RectPatch& r : rects_) {
            if (r.x_factor.is_empty() || r.y_factor.is_empty())
                throw std::logic_error("Set2D: empty rectangle factor");
            if (!r.x_factor.subset_of(Set1D::unit()))
                throw std::logic_error("Set2D: rectangle x-factor escapes [0,1]");
            for (std::size_t i = 0; i < r.holes.size(); ++i) {
                const GraphSpec& h = r.holes[i];
                if (i > 0 && !(r.holes[i - 1].offset < h.offset))
                    throw std::logic_error("Set2D: holes not sorted by distinct offset");
                if (h.domain.is_empty()) throw std::logic_error("Set2D: empty-effect hole");
                Set1D effective = set_intersect(set_intersect(h.domain, r.x_factor),
                                                r.y_factor.shifted(-h.offset));
                if (effective != h.domain)
                    throw std::logic_error("Set2D: hole domain not effective");
            }
            if (r.y_factor.pure_points() && !r.holes.empty())
                throw std::logic_error("Set2D: holes on a point-row rectangle");
        }
        for (std::size_t i = 0; i < graphs_.size(); ++i) {
            const GraphSpec& g = graphs_[i];
            if (i > 0 && !(graphs_[i - 1].offset < g.offset))
                throw std::logic_error("Set2D: graphs not sorted by distinct offset");
            if (g.domain.intervals().empty())
                throw std::logic_error("Set2D: graph domain has no interval part");
            if (!g.domain.points().empty())
                throw std::logic_error("Set2D: graph domain carries isolated points");
            if (!g.domain.subset_of(Set1D::unit()))
                throw std::logic_error("Set2D: graph domain escapes [0,1]");
        }
    }

private:
    std::vector<RectPatch> rects_;
    std::vector<GraphSpec> graphs_; // pairwise distinct offsets, interval-only domains

    static void require_in_unit(const Set1D& s, const char* what) {
        if (!s.subset_of(Set1D::unit()))
            throw domain_error(std::string(what) + " must lie inside [0,1], got " + s.str());
    }

    static bool hole_hits(const std::vector<GraphSpec>& holes, const Rational& x, const Rational& y) {
        for (const GraphSpec& h : holes)
            if (y == x + h.offset && h.domain.contains(x)) return true;
        return false;
    }

    static const GraphSpec* find_offset(const std::vector<GraphSpec>& holes, const Rational& c) {
        for (const GraphSpec& h : holes)
            if (h.offset == c) return &h;
        return nullptr;
    }

    // Intersection of a rectangle patch with a graph: the graph restricted to
    // where the line y = x + c runs through A x B, minus the matching hole.
    static GraphSpec rect_graph_meet(const RectPatch& r, const GraphSpec& g) {
        Set1D dom = set_intersect(set_intersect(g.domain, r.x_factor),
                                  r.y_factor.shifted(-g.offset));
        if (const GraphSpec* h = find_offset(r.holes, g.offset))
            dom = set_difference(dom, h->domain);
        return GraphSpec{g.offset, std::move(dom)};
    }

    // this minus one rectangle patch q.
    Set2D minus_rect(const RectPatch& q) const {
        std::vector<RectPatch> rects;
        std::vector<GraphSpec> graphs;
        for (const RectPatch& r : rects_) {
            // Part of r outside q's product frame.
            rects.push_back(RectPatch{set_difference(r.x_factor, q.x_factor), r.y_factor, r.holes});
            rects.push_back(RectPatch{set_intersect(r.x_factor, q.x_factor),
                                      set_difference(r.y_factor, q.y_factor), r.holes});
            // Points of r inside the frame that q's holes gave back.
            Set1D xi = set_intersect(r.x_factor, q.x_factor);
            Set1D yi = set_intersect(r.y_factor, q.y_factor);
            for (const GraphSpec& h : q.holes) {
                Set1D dom = set_intersect(set_intersect(h.domain, xi), yi.shifted(-h.offset));
                if (const GraphSpec* mine = find_offset(r.holes, h.offset))
                    dom = set_difference(dom, mine->domain);
                graphs.push_back(GraphSpec{h.offset, std::move(dom)});
            }
        }
        for (const GraphSpec& g : graphs_) {
            Set1D frame = set_intersect(q.x_factor, q.y_factor.shifted(-g.offset));
            Set1D keep = set_difference(g.domain, frame);
            if (const GraphSpec* h = find_offset(q.holes, g.offset))
                keep = set_union(keep, set_intersect(g.domain, h->domain));
            graphs.push_back(GraphSpec{g.offset, std::move(keep)});
        }
        return make(std::move(rects), std::move(graphs));
    }

    // this minus one graph segment bundle.
    Set2D minus_graph(const GraphSpec& g) const {
        std::vector<RectPatch> rects;
        std::vector<GraphSpec> graphs;
        for (const RectPatch& r : rects_) {
            RectPatch cut = r;
            cut.holes.push_back(g);
            rects.push_back(std::move(cut));
        }
        for (const GraphSpec& mine : graphs_) {
            if (mine.offset == g.offset)
                graphs.push_back(GraphSpec{mine.offset, set_difference(mine.domain, g.domain)});
            else
                graphs.push_back(mine);
        }
        return make(std::move(rects), std::move(graphs));
    }

    // Canonicalization funnel: every constructor and operation lands here.
    //   - graph domains lose isolated points to point rectangles and merge
    //     per offset
    //   - hole domains shrink to their effective part, merge per offset,
    //     empty-effect holes vanish
    //   - point-row rectangles bake their holes in, so a patch with holes
    //     always has a y-interval and therefore denotes a nonempty set
    static Set2D make(std::vector<RectPatch> raw_rects, std::vector<GraphSpec> raw_graphs) {
        std::map<Rational, Set1D> graph_acc;
        for (GraphSpec& g : raw_graphs) {
            if (g.domain.is_empty()) continue;
            Set1D pts = g.domain.point_part();
            for (const Rational& p : pts.points())
                raw_rects.push_back(RectPatch{Set1D::point(p), Set1D::point(p + g.offset), {}});
            Set1D ints = g.domain.interval_part();
            if (ints.is_empty()) continue;
            auto [it, fresh] = graph_acc.emplace(g.offset, ints);
            if (!fresh) it->second = set_union(it->second, ints);
        }

        Set2D out;
        for (RectPatch& r : raw_rects) {
            if (r.x_factor.is_empty() || r.y_factor.is_empty()) continue;
            std::map<Rational, Set1D> hole_acc;
            for (const GraphSpec& h : r.holes) {
                Set1D eff = set_intersect(set_intersect(h.domain, r.x_factor),
                                          r.y_factor.shifted(-h.offset));
                if (eff.is_empty()) continue;
                auto [it, fresh] = hole_acc.emplace(h.offset, eff);
                if (!fresh) it->second = set_union(it->second, eff);
            }
            if (hole_acc.empty()) {
                out.push_rect(RectPatch{std::move(r.x_factor), std::move(r.y_factor), {}});
                continue;
            }
            if (r.y_factor.pure_points()) {
                // Bake holes into rows: each hole removes at most one x per row.
                std::vector<Rational> untouched;
                for (const Rational& p : r.y_factor.points()) {
                    std::vector<Rational> removed;
                    for (const auto& [c, dom] : hole_acc)
                        if (dom.contains(p - c)) removed.push_back(p - c);
                    if (removed.empty()) {
                        untouched.push_back(p);
                        continue;
                    }
                    Set1D trimmed = set_difference(r.x_factor, Set1D::points(std::move(removed)));
                    if (!trimmed.is_empty())
                        out.push_rect(RectPatch{std::move(trimmed), Set1D::point(p), {}});
                }
                if (!untouched.empty())
                    out.push_rect(RectPatch{r.x_factor, Set1D::points(std::move(untouched)), {}});
                continue;
            }
            std::vector<GraphSpec> holes;
            holes.reserve(hole_acc.size());
            for (auto& [c, dom] : hole_acc) holes.push_back(GraphSpec{c, std::move(dom)});
            out.push_rect(RectPatch{std::move(r.x_factor), std::move(r.y_factor), std::move(holes)});
        }

        for (auto& [c, dom] : graph_acc) out.graphs_.push_back(GraphSpec{c, std::move(dom)});
        return out;
    }

    void push_rect(RectPatch r) {
        for (const RectPatch& seen : rects_)
            if (seen == r) return; // drop exact duplicates
        rects_.push_back(std::move(r));
    }
};

} // namespace tame
