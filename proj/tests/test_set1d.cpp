#include <catch2/catch_amalgamated.hpp>

#include "tame/set1d.hpp"

#include <random>
#include <vector>

using namespace tame;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

// Random raw material for normalization and algebra properties. Endpoints
// are drawn from a small rational grid so collisions (shared endpoints,
// touching intervals, points on boundaries) are frequent.
struct RawGen {
    std::mt19937_64 rng;
    explicit RawGen(uint64_t seed) : rng(seed) {}

    Rational rat(long lo = -4, long hi = 4) {
        std::uniform_int_distribution<long> den(1, 6);
        long d = den(rng);
        std::uniform_int_distribution<long> num(lo * d, hi * d);
        return Rational(num(rng), d);
    }

    std::pair<std::vector<Interval>, std::vector<Rational>> raw() {
        std::uniform_int_distribution<int> n_iv(0, 3), n_pt(0, 3), flag(0, 1);
        std::vector<Interval> ivs;
        for (int i = n_iv(rng); i > 0; --i) {
            Rational a = rat(), b = rat();
            if (a == b) continue;
            if (b < a) std::swap(a, b);
            ivs.push_back(Interval(Endpoint::at(a), Endpoint::at(b), flag(rng) == 1, flag(rng) == 1));
        }
        std::vector<Rational> pts;
        for (int i = n_pt(rng); i > 0; --i) pts.push_back(rat());
        return {ivs, pts};
    }

    Set1D set() {
        auto [ivs, pts] = raw();
        return Set1D::normalized(ivs, pts);
    }
};

} // namespace

TEST_CASE("normalization merges touching closed intervals") {
    Set1D s = Set1D::normalized({Interval::closed(q(0), q(1, 2)), Interval::closed(q(1, 2), q(1))}, {});
    CHECK(s == Set1D::closed(q(0), q(1)));
}

TEST_CASE("normalization absorbs boundary and interior points") {
    Set1D a = Set1D::normalized({Interval::open(q(0), q(1))}, {q(1)});
    CHECK(a == Set1D::interval(Interval(Endpoint::at(q(0)), Endpoint::at(q(1)), false, true)));
    CHECK(a.points().empty());

    Set1D b = Set1D::normalized({Interval::closed(q(0), q(1))}, {q(1, 2)});
    CHECK(b == Set1D::closed(q(0), q(1)));
}

TEST_CASE("degenerate intervals are rejected, degenerate closed sets are points") {
    CHECK_THROWS_AS(Interval::closed(q(1), q(1)), domain_error);
    CHECK_THROWS_AS(Interval::closed(q(2), q(1)), domain_error);
    CHECK_THROWS_AS(Interval(Endpoint::neg_inf(), Endpoint::at(q(0)), true, true), domain_error);
    CHECK(Set1D::closed(q(1), q(1)) == Set1D::point(q(1)));
}

TEST_CASE("set algebra on endpoint-sharing inputs") {
    Set1D i01 = Set1D::closed(q(0), q(1));
    Set1D i12 = Set1D::closed(q(1), q(2));
    CHECK(set_intersect(i01, i12) == Set1D::point(q(1)));
    CHECK(set_difference(i01, Set1D::open(q(0), q(1))) == Set1D::points({q(0), q(1)}));
    Set1D u = set_union(i01, Set1D::point(q(2)));
    CHECK(set_intersect(u, Set1D::closed(q(3, 2), q(3))) == Set1D::point(q(2)));
}

TEST_CASE("shift translates endpoints and points") {
    CHECK(Set1D::closed(q(0), q(1)).shifted(q(1)) == Set1D::closed(q(1), q(2)));
    CHECK(Set1D::points({q(0), q(1, 2)}).shifted(q(-1, 2)) == Set1D::points({q(-1, 2), q(0)}));
    CHECK(Set1D::empty().shifted(q(7)) == Set1D::empty());
}

TEST_CASE("lebesgue measure sums interval lengths, ignores points") {
    CHECK(lebesgue(set_union(Set1D::closed(q(0), q(1)), Set1D::closed(q(2), q(5, 2)))) ==
          ExtReal::finite(q(3, 2)));
    CHECK(lebesgue(Set1D::points({q(0), q(1), q(2)})) == ExtReal::finite(0));
    CHECK(lebesgue(Set1D::interval(Interval(Endpoint::at(q(0)), Endpoint::pos_inf(), true, false))) ==
          ExtReal::infinity());
}

TEST_CASE("counting measure on subsets of the unit interval") {
    CHECK(counting(Set1D::points({q(0), q(1, 2), q(1)})) == ExtReal::finite(3));
    CHECK(counting(Set1D::closed(q(0), q(1, 2))) == ExtReal::infinity());
    CHECK(counting(Set1D::empty()) == ExtReal::finite(0));
    CHECK_THROWS_AS(counting(Set1D::closed(q(0), q(2))), domain_error);
    CHECK_THROWS_AS(counting(Set1D::point(q(-1, 2))), domain_error);
}

TEST_CASE("subset and emptiness predicates") {
    CHECK(Set1D::closed(q(0), q(1)).subset_of(Set1D::closed(q(0), q(2))));
    CHECK(Set1D::point(q(1, 2)).subset_of(Set1D::open(q(0), q(1))));
    CHECK_FALSE(Set1D::closed(q(0), q(1)).subset_of(
        Set1D::interval(Interval(Endpoint::at(q(0)), Endpoint::at(q(1)), false, true))));
    CHECK(Set1D::empty().subset_of(Set1D::empty()));
}

TEST_CASE("normalization is idempotent and canonical forms are unique") {
    RawGen gen(7);
    for (int i = 0; i < 300; ++i) {
        auto [ivs, pts] = gen.raw();
        Set1D s = Set1D::normalized(ivs, pts);
        CHECK(Set1D::normalized(s.intervals(), s.points()) == s);

        // Same set assembled from shuffled pieces normalizes identically.
        std::shuffle(ivs.begin(), ivs.end(), gen.rng);
        std::shuffle(pts.begin(), pts.end(), gen.rng);
        CHECK(Set1D::normalized(ivs, pts) == s);

        // Splitting an interval at an interior grid point changes nothing.
        if (!s.intervals().empty() && s.intervals()[0].lo.is_finite() &&
            s.intervals()[0].hi.is_finite()) {
            const Interval& iv = s.intervals()[0];
            Rational mid = (iv.lo.value + iv.hi.value) / 2;
            std::vector<Interval> split;
            split.push_back(Interval(iv.lo, Endpoint::at(mid), iv.lo_closed, true));
            split.push_back(Interval(Endpoint::at(mid), iv.hi, true, iv.hi_closed));
            for (std::size_t k = 1; k < s.intervals().size(); ++k) split.push_back(s.intervals()[k]);
            CHECK(Set1D::normalized(split, s.points()) == s);
        }
    }
}

TEST_CASE("membership agrees with boolean structure of operations") {
    RawGen gen(11);
    for (int i = 0; i < 200; ++i) {
        Set1D a = gen.set(), b = gen.set();
        Set1D u = set_union(a, b), n = set_intersect(a, b), d = set_difference(a, b);
        for (int k = 0; k < 20; ++k) {
            Rational x = gen.rat(-5, 5);
            CHECK(u.contains(x) == (a.contains(x) || b.contains(x)));
            CHECK(n.contains(x) == (a.contains(x) && b.contains(x)));
            CHECK(d.contains(x) == (a.contains(x) && !b.contains(x)));
        }
    }
}

TEST_CASE("boolean algebra laws") {
    RawGen gen(13);
    for (int i = 0; i < 150; ++i) {
        Set1D a = gen.set(), b = gen.set(), c = gen.set();
        CHECK(set_union(a, set_union(b, c)) == set_union(set_union(a, b), c));
        CHECK(set_intersect(a, set_intersect(b, c)) == set_intersect(set_intersect(a, b), c));
        CHECK(set_intersect(a, set_union(b, c)) ==
              set_union(set_intersect(a, b), set_intersect(a, c)));
        // De Morgan via difference within a bounded universe.
        Set1D univ = Set1D::closed(q(-5), q(5));
        CHECK(set_difference(univ, set_union(a, b)) ==
              set_intersect(set_difference(univ, a), set_difference(univ, b)));
        CHECK(set_difference(univ, set_intersect(a, b)) ==
              set_union(set_difference(univ, a), set_difference(univ, b)));
    }
}

TEST_CASE("lebesgue is finitely additive and translation invariant") {
    RawGen gen(17);
    for (int i = 0; i < 200; ++i) {
        Set1D a = gen.set(), b0 = gen.set();
        Set1D b = set_difference(b0, a); // force disjointness
        CHECK(lebesgue(set_union(a, b)) == lebesgue(a) + lebesgue(b));
        Rational c = gen.rat();
        CHECK(lebesgue(a.shifted(c)) == lebesgue(a));
    }
}

TEST_CASE("counting is finitely additive on subsets of [0,1]") {
    RawGen gen(19);
    for (int i = 0; i < 200; ++i) {
        Set1D unit = Set1D::unit();
        Set1D a = set_intersect(gen.set(), unit);
        Set1D b = set_difference(set_intersect(gen.set(), unit), a);
        CHECK(counting(set_union(a, b)) == counting(a) + counting(b));
    }
}

TEST_CASE("measures are monotone") {
    RawGen gen(23);
    for (int i = 0; i < 200; ++i) {
        Set1D a = gen.set(), extra = gen.set();
        Set1D b = set_union(a, extra);
        CHECK(lebesgue(a) <= lebesgue(b));
        Set1D unit = Set1D::unit();
        CHECK(counting(set_intersect(a, unit)) <= counting(set_intersect(b, unit)));
    }
}

TEST_CASE("textual form") {
    CHECK(Set1D::empty().str() == "empty");
    CHECK(Set1D::closed(q(0), q(1)).str() == "[0,1]");
    CHECK(set_union(Set1D::open(q(0), q(1)), Set1D::points({q(2), q(5, 2)})).str() ==
          "(0,1) | {2,5/2}");
}
