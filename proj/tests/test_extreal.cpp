#include <catch2/catch_amalgamated.hpp>

#include "tame/extreal.hpp"

#include <random>
#include <vector>

using tame::ExtReal;
using tame::Rational;

namespace {

ExtReal fin(long n, long d = 1) { return ExtReal::finite(Rational(n, d)); }

// Random nonnegative extended reals, infinity included with weight ~1/4.
struct ExtGen {
    std::mt19937_64 rng{20240811};
    ExtReal next() {
        std::uniform_int_distribution<int> pick(0, 3);
        if (pick(rng) == 0) return ExtReal::infinity();
        std::uniform_int_distribution<long> num(0, 40), den(1, 12);
        return fin(num(rng), den(rng));
    }
};

} // namespace

TEST_CASE("addition is exact and infinity absorbs") {
    CHECK(fin(1, 2) + fin(1, 3) == fin(5, 6));
    CHECK(ExtReal::infinity() + fin(0) == ExtReal::infinity());
    CHECK(fin(0) + fin(1) == fin(1));
}

TEST_CASE("multiplication follows the 0 * inf = 0 convention") {
    CHECK(ExtReal::infinity() * fin(0) == fin(0));
    CHECK(fin(0) * ExtReal::infinity() == fin(0));
    CHECK(ExtReal::infinity() * fin(2) == ExtReal::infinity());
    CHECK(fin(2) * ExtReal::infinity() == ExtReal::infinity());
    CHECK(ExtReal::infinity() * ExtReal::infinity() == ExtReal::infinity());
    CHECK(fin(3, 2) * fin(2, 3) == fin(1));
}

TEST_CASE("ext_sum folds with empty sum zero") {
    CHECK(tame::ext_sum(std::vector<ExtReal>{}) == fin(0));
    CHECK(tame::ext_sum({fin(1, 4), fin(3, 4)}) == fin(1));
    CHECK(tame::ext_sum({fin(1), ExtReal::infinity(), fin(2)}) == ExtReal::infinity());
}

TEST_CASE("negative finite values are rejected") {
    CHECK_THROWS_AS(ExtReal::finite(Rational(-1, 2)), tame::domain_error);
}

TEST_CASE("ordering puts infinity above every finite value") {
    CHECK(fin(1000000) < ExtReal::infinity());
    CHECK(ExtReal::infinity() <= ExtReal::infinity());
    CHECK(fin(1, 3) < fin(1, 2));
    CHECK_FALSE(ExtReal::infinity() < ExtReal::infinity());
}

TEST_CASE("formatting") {
    CHECK(fin(5, 10).str() == "1/2");
    CHECK(fin(4, 2).str() == "2");
    CHECK(ExtReal::infinity().str() == "inf");
}

TEST_CASE("add and mul are commutative and associative, mul distributes") {
    ExtGen gen;
    for (int i = 0; i < 500; ++i) {
        ExtReal a = gen.next(), b = gen.next(), c = gen.next();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}
