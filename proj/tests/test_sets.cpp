#include "cantorlab/cantor_measure.hpp"
#include "cantorlab/errors.hpp"
#include "cantorlab/missing_digit_set.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace cantorlab;

namespace {

Rational q(long n, long d) { return Rational(Integer(n), Integer(d)); }

const MissingDigitSet K = MissingDigitSet::middle_third();

std::vector<std::uint64_t> ints(std::initializer_list<std::uint64_t> v) { return v; }


} // namespace

TEST_SUITE("sets") {

TEST_CASE("set validation and parsing") {
    CHECK_THROWS_AS(MissingDigitSet(2, {0}), InvalidInput);
    CHECK_THROWS_AS(MissingDigitSet(3, {0, 1, 2}), InvalidInput);
    CHECK_THROWS_AS(MissingDigitSet(3, {1}), InvalidInput);
    CHECK_THROWS_AS(MissingDigitSet(3, {0, 3}), InvalidInput);
    CHECK_THROWS_AS(MissingDigitSet::parse("3:0,,2"), InvalidInput);
    const auto s = MissingDigitSet::parse("5:4,0,2");
    CHECK(s.base() == 5);
    CHECK(s.digits() == std::vector<int>{0, 2, 4});
    CHECK(s.str() == "5:0,2,4");
    CHECK(K.non_adjacent());
    CHECK_FALSE(MissingDigitSet(4, {1, 2}).non_adjacent());
}

TEST_CASE("rational membership uses both expansions") {
    CHECK(membership(q(1, 3), K, 10).verdict == Verdict::In);
    CHECK(membership(q(1, 2), K, 10).verdict == Verdict::Out);
    CHECK(membership(q(1, 4), K, 10).verdict == Verdict::In);
    CHECK(membership(q(3, 4), K, 10).verdict == Verdict::In);
    CHECK(membership(Rational(0), K, 10).verdict == Verdict::In);
    CHECK(membership(Rational(1), K, 10).verdict == Verdict::In);
    CHECK(membership(q(4, 9), K, 10).verdict == Verdict::Out);
    CHECK(membership(q(7, 9), K, 10).verdict == Verdict::In);
    const MissingDigitSet s(4, {0, 3});
    CHECK(membership(q(1, 4), s, 5).verdict == Verdict::In);
    CHECK(membership(q(1, 2), s, 5).verdict == Verdict::Out);
}

TEST_CASE("interval membership") {
    CHECK(membership(Interval(q(4, 10), q(6, 10)), K, 4).verdict == Verdict::Out);
    CHECK(membership(Interval::point(q(1, 3)), K, 4).verdict == Verdict::In);
    CHECK(membership(Interval(q(2, 9), q(7, 9)), K, 4).verdict == Verdict::Undetermined);
}

TEST_CASE("membership agrees with level approximations on b-adic rationals") {
    for (int n = 1; n <= 6; ++n) {
        const Integer den = ipow(Integer(3), static_cast<unsigned long>(n));
        for (Integer p = 0; p <= den; ++p) {
            const Rational x(p, den);
            const bool in = membership(x, K, 12).verdict == Verdict::In;
            const bool approx = membership(Interval::point(x), K, 12).verdict == Verdict::In;
            CHECK(in == approx);
        }
    }
}

TEST_CASE("center enumeration") {
    CHECK(enumerate_centers(K, 1, false) == ints({0, 1, 2, 3}));
    CHECK(enumerate_centers(K, 2, true) == ints({1, 2, 7, 8}));
    CHECK(enumerate_centers(MissingDigitSet(4, {0, 3}), 1, false) == ints({0, 1, 3, 4}));
    for (int n = 1; n <= 12; ++n) {
        CHECK(enumerate_centers(K, n, false).size() == (std::size_t{2} << n));
    }
    for (const auto& s : {MissingDigitSet(4, {1, 2}), MissingDigitSet(5, {0, 2, 4}), MissingDigitSet(4, {0, 3}),
                          MissingDigitSet(5, {0, 1, 4})}) {
        for (int n = 1; n <= 6; ++n) {
            const auto c = enumerate_centers(s, n, false);
            CHECK(Integer(static_cast<unsigned long>(c.size())) == count_centers(s, n));
            for (auto p : c) {
                const Rational x(Integer(static_cast<unsigned long>(p)), ipow(Integer(s.base()), static_cast<unsigned long>(n)));
                CHECK(membership(x, s, n).verdict == Verdict::In);
            }
        }
    }
    CHECK_THROWS_AS(enumerate_centers(K, 20, false, 1000), ResourceError);
    CHECK_THROWS_AS(enumerate_centers(K, 45, false), ResourceError);
}

TEST_CASE("measure examples") {
    CHECK(cantor_measure(K, RatInterval::unit()).value() == Rational(1));
    CHECK(cantor_measure(K, {Rational(0), q(1, 3)}).value() == q(1, 2));
    CHECK(cantor_measure(K, {q(2, 9), q(4, 9)}).value() == q(1, 4));
    CHECK(cantor_measure(K, {q(1, 3), q(2, 3)}).value() == Rational(0));
    CHECK(cantor_measure(K, {Rational(0), q(1, 4)}).value() == q(1, 3));
    CHECK(cantor_cdf(K, q(3, 4)) == q(2, 3));
}

TEST_CASE("cdf equals the shift-orbit linear system") {
    std::mt19937_64 rng(20240611);
    for (const auto& s : {K, MissingDigitSet(4, {0, 3}), MissingDigitSet(5, {1, 3}), MissingDigitSet(7, {0, 2, 5, 6})}) {
        for (int i = 0; i < 60; ++i) {
            std::uniform_int_distribution<long> den(1, 500);
            const Rational x = oracle::random_rational(rng, Integer(den(rng)));
            CHECK(cantor_cdf(s, x) == oracle::orbit_cdf(s, x));
        }
    }
}

TEST_CASE("measure equals level-10 cell counting on 3^-10 grid intervals") {
    std::mt19937_64 rng(7);
    const Integer den = ipow(Integer(3), 10);
    for (int i = 0; i < 25; ++i) {
        Rational a = oracle::random_rational(rng, den);
        Rational c = oracle::random_rational(rng, den);
        if (c < a) {
            std::swap(a, c);
        }
        CHECK(cantor_measure(K, {a, c}).value() == oracle::cell_count_measure(K, a, c, 10));
    }
}

TEST_CASE("basic intervals carry (#J)^-n") {
    std::mt19937_64 rng(3);
    for (const auto& s : {K, MissingDigitSet(4, {0, 3}), MissingDigitSet(5, {0, 2, 4}), MissingDigitSet(4, {1, 2})}) {
        std::uniform_int_distribution<std::size_t> pick(0, s.digits().size() - 1);
        for (int n = 1; n <= 12; ++n) {
            const Rational mass(Integer(1), ipow(Integer(s.size()), static_cast<unsigned long>(n)));
            for (int trial = 0; trial < 8; ++trial) {
                Integer k = 0;
                for (int i = 0; i < n; ++i) {
                    k = k * s.base() + s.digits()[pick(rng)];
                }
                const Rational lo(k, ipow(Integer(s.base()), static_cast<unsigned long>(n)));
                const Rational hi(k + 1, ipow(Integer(s.base()), static_cast<unsigned long>(n)));
                CHECK(cantor_measure(s, {lo, hi}).value() == mass);
            }
        }
    }
}

TEST_CASE("additivity and self-similarity") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 40; ++i) {
        std::vector<Rational> pts;
        for (int k = 0; k < 3; ++k) {
            pts.push_back(oracle::random_rational(rng, Integer(3 * 3 * 3 * 3 * 7)));
        }
        std::sort(pts.begin(), pts.end());
        const Rational left = cantor_measure(K, {pts[0], pts[1]}).value();
        const Rational right = cantor_measure(K, {pts[1], pts[2]}).value();
        CHECK(left + right == cantor_measure(K, {pts[0], pts[2]}).value());
    }
    for (int d : K.digits()) {
        for (int i = 0; i < 20; ++i) {
            Rational a = oracle::random_rational(rng, Integer(1000));
            Rational c = oracle::random_rational(rng, Integer(1000));
            if (c < a) {
                std::swap(a, c);
            }
            const Rational lo = (a + Rational(d)) / Rational(3);
            const Rational hi = (c + Rational(d)) / Rational(3);
            CHECK(cantor_measure(K, {lo, hi}).value() == cantor_measure(K, {a, c}).value() / Rational(2));
        }
    }
}

TEST_CASE("union measure and interval algebra") {
    const IntervalUnion u = merge_intervals({{Rational(0), q(1, 9)}, {q(1, 27), q(2, 9)}, {q(2, 3), Rational(1)}});
    REQUIRE(u.size() == 2);
    CHECK(u[0].hi == q(2, 9));
    CHECK(union_measure(K, u) == q(1, 4) + q(1, 2));
    CHECK(union_measure_serial(K, u) == union_measure(K, u));
    const IntervalUnion v = intersect(u, {{q(1, 9), q(7, 9)}});
    CHECK(union_measure(K, v) == cantor_measure(K, {q(1, 9), q(2, 9)}).value() + cantor_measure(K, {q(2, 3), q(7, 9)}).value());
    CHECK(clip(u, {q(1, 10), q(1, 5)}).size() == 1);
}

TEST_CASE("full cover") {
    CHECK(full_cover_check(K, 1, RatInterval::unit()));
    CHECK(full_cover_check(K, 8, RatInterval::unit()));
    CHECK(full_cover_check(K, 3, {q(2, 9), q(4, 9)}));
    CHECK(full_cover_check(MissingDigitSet(5, {1, 3}), 4, RatInterval::unit()));
}

}
