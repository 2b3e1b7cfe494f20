#include "cantorlab/calibration.hpp"
#include "cantorlab/errors.hpp"
#include "cantorlab/layer.hpp"
#include "cantorlab/series.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cantorlab;

namespace {

Rational q(long n, long d) { return Rational(Integer(n), Integer(d)); }

const MissingDigitSet K = MissingDigitSet::middle_third();
const WindowConfig unit = WindowConfig::for_window(K, RatInterval::unit());

ApproxFunction pw(const Rational& tau) { return ApproxFunction::power(Scalar(tau)); }

Scalar gamma_times(const Rational& c) { return Scalar::gamma(2, 3, c); }

} // namespace

TEST_SUITE("limsup") {

TEST_CASE("truncated approximation functions") {
    const auto half = truncate_psi(pw(q(1, 2)), q(1, 2));
    CHECK(half.at_level(K, 1).lo == q(1, 6));
    const auto sq = truncate_psi(pw(Rational(2)), q(1, 2));
    for (int n = 1; n <= 6; ++n) {
        CHECK(sq.at_level(K, n).lo == Rational(Integer(1), ipow(Integer(9), static_cast<unsigned long>(n))));
    }
    const auto table = truncate_psi(ApproxFunction::from_table({{1, Rational(1)}, {2, q(1, 100)}}), q(1, 2));
    CHECK(table.at_level(K, 1).lo == q(1, 6));
    CHECK(table.at_level(K, 2).lo == q(1, 100));
    CHECK_THROWS_AS(truncate_psi(pw(Rational(2)), Rational(0)), InvalidInput);
}

TEST_CASE("layers") {
    const Layer a = build_layer(K, pw(Rational(2)), 1, unit, true);
    REQUIRE(a.centers().size() == 2);
    CHECK(a.center(0) == q(1, 3));
    CHECK(a.center(1) == q(2, 3));
    CHECK(a.radius().lo == q(1, 9));
    CHECK(a.disjoint());
    CHECK(layer_measure(a).value() == q(1, 2));
    CHECK(comparability_ratio(a, pw(Rational(2))).lo == Rational(1));
    const Layer b = build_layer(K, pw(Rational(2)), 1, unit, false);
    CHECK(b.centers().size() == 4);
    CHECK(layer_measure(b).value() == Rational(1));
    const Layer c = build_layer(K, pw(Rational(2)), 2, unit, true);
    CHECK(c.centers() == std::vector<std::uint64_t>{1, 2, 7, 8});
    CHECK(layer_measure(c).value() == q(1, 4));
}

TEST_CASE("layer measure equals the orbit oracle on random layers") {
    for (const Rational& tau : {q(3, 2), Rational(2), q(5, 2)}) {
        for (int n = 1; n <= 5; ++n) {
            for (bool coprime : {true, false}) {
                const Layer l = build_layer(K, pw(tau), n, unit, coprime);
                if (!l.radius().exact()) {
                    continue;
                }
                std::vector<std::pair<Rational, Rational>> balls;
                for (std::size_t i = 0; i < l.centers().size(); ++i) {
                    balls.emplace_back(l.center(i) - l.radius().lo, l.center(i) + l.radius().lo);
                }
                CHECK(layer_measure(l).value() == oracle::orbit_union_measure(K, balls));
            }
        }
    }
}

TEST_CASE("pairwise measure") {
    const Layer a = build_layer(K, pw(Rational(2)), 1, unit, true);
    const Layer b = build_layer(K, pw(Rational(2)), 2, unit, true);
    CHECK(pairwise_measure(a, b).value() == q(1, 8));
    CHECK(pairwise_measure(b, b).value() == layer_measure(b).value());
    const auto table = ApproxFunction::from_table({{1, q(1, 100)}, {2, q(1, 200)}});
    const Layer ta = build_layer(K, table, 1, unit, true);
    const Layer tb = build_layer(K, table, 2, unit, true);
    CHECK(classify_pair(K, table, 1, 2) == PairCase::Disjoint);
    CHECK(pairwise_measure(ta, tb).value() == Rational(0));
}

TEST_CASE("quasi-independence scan") {
    const auto rep = quasi_independence_scan(K, pw(Rational(2)), unit, 8);
    CHECK(rep.rows.size() == 28);
    for (const auto& r : rep.rows) {
        REQUIRE(r.rho.has_value());
        if (r.m == 1 && r.n == 2) {
            CHECK(r.pair_case == PairCase::Overlapping);
            CHECK(r.rho->exact());
            CHECK(r.rho->lo == Rational(1));
        }
        if (r.pair_case == PairCase::Disjoint) {
            CHECK(r.mu_mn.value() == Rational(0));
        }
        // case (i) exactly when n <= 2m - 1 for psi = r^-2
        CHECK((r.pair_case == PairCase::Disjoint) == (r.n <= 2 * r.m - 1));
    }
    REQUIRE(rep.c_beyond_t0.has_value());
    CHECK(*rep.c_beyond_t0 <= calibration::c_fix);
    CHECK_THROWS_AS(quasi_independence_scan(K, pw(Rational(2)), unit, 1), InvalidInput);
}

TEST_CASE("quasi-independence constant holds beyond t0 for tau 2 and 3") {
    for (const Rational& tau : {Rational(2), Rational(3)}) {
        const auto rep = quasi_independence_scan(K, pw(tau), unit, 10, unit.t0 + 1);
        REQUIRE(rep.c_beyond_t0.has_value());
        CHECK(*rep.c_beyond_t0 <= calibration::c_fix);
    }
}

TEST_CASE("comparability envelope") {
    for (const Rational& tau : {q(3, 2), Rational(2), Rational(3)}) {
        for (int n = unit.t0 + 1; n <= 12; ++n) {
            const Interval r = comparability_ratio(build_layer(K, pw(tau), n, unit, true), pw(tau));
            CHECK(calibration::envelope_lo <= r.lo);
            CHECK(r.hi <= calibration::envelope_hi);
            if (tau == Rational(2)) {
                CHECK(r.exact());
                CHECK(r.lo == Rational(1));
            }
        }
    }
}

TEST_CASE("Borel-Cantelli ratio") {
    CHECK(borel_cantelli_ratio(K, pw(Rational(2)), unit, 1).ratio.lo == q(1, 2));
    const auto r2 = borel_cantelli_ratio(K, pw(Rational(2)), unit, 2);
    CHECK(r2.ratio.exact());
    CHECK(r2.ratio.lo == q(9, 16));
    for (int big = 1; big <= 8; ++big) {
        const auto r = borel_cantelli_ratio(K, pw(Rational(2)), unit, big);
        CHECK(r.ratio.hi <= r.union_mu.lo);
        CHECK(r.union_mu.hi <= Rational(1));
    }
    CHECK_THROWS_AS(borel_cantelli_ratio(K, pw(Rational(2)), unit, 0), InvalidInput);
}

TEST_CASE("box counting") {
    const auto e = box_dimension_estimate(K, Rational(2), 2, true);
    CHECK(e.level == 4);
    CHECK(e.count == 4);
    const auto one = box_dimension_estimate(K, Rational(1), 3, false);
    CHECK(one.count == 8);
    CHECK(one.estimate.lo < q(6309298, 10000000));
    CHECK(one.estimate.hi > q(6309297, 10000000));
    CHECK(box_dimension_estimate(K, Rational(3), 2, true).count == 4);
    CHECK(box_dimension_estimate(K, Rational(3), 2, true).level == 6);
    for (int n = 1; n <= 4; ++n) {
        for (const Rational& tau : {Rational(1), Rational(2), Rational(3)}) {
            for (bool coprime : {true, false}) {
                const auto b = box_dimension_estimate(K, tau, n, coprime);
                const int level = static_cast<int>((tau * Rational(n)).ceil().get_si());
                CHECK(b.count == Integer(static_cast<unsigned long>(oracle::brute_box_count(K, n, level, coprime))));
            }
        }
    }
    CHECK_THROWS_AS(box_dimension_estimate(K, q(1, 2), 2, true), InvalidInput);
}

TEST_CASE("series verdicts") {
    const auto d = series_classify(K, pw(Rational(3)), DimensionFunction::power(gamma_times(q(1, 3))), 50);
    CHECK(d.verdict == SeriesVerdictKind::Divergent);
    CHECK(d.prediction == MeasurePrediction::MeasureFull);
    CHECK(d.partial_sums.back().lo == Rational(50));
    const auto psi2 = ApproxFunction::power_log(Scalar(Rational(3)), Scalar::gamma(2, 3, Rational(6), -1));
    const auto c = series_classify(K, psi2, DimensionFunction::power(gamma_times(q(1, 3))), 30);
    CHECK(c.verdict == SeriesVerdictKind::Convergent);
    CHECK(c.prediction == MeasurePrediction::MeasureZero);
    const auto g = series_classify(K, pw(Rational(2)), DimensionFunction::power(gamma_times(Rational(1))), 10);
    CHECK(g.verdict == SeriesVerdictKind::Convergent);
    CHECK(g.partial_sums.back().lo == Rational(1) - Rational(Integer(1), Integer(1024)));
    const auto table = DimensionFunction::from_table({{1, q(1, 2)}}, false);
    CHECK_THROWS_AS(series_classify(K, pw(Rational(2)), table, 1), HypothesisViolation);
    const auto ok = DimensionFunction::from_table({{1, q(1, 2)}, {2, q(1, 4)}}, true);
    CHECK(series_classify(K, pw(Rational(2)), ok, 2).verdict == SeriesVerdictKind::Undetermined);
}

TEST_CASE("natural-cover tails") {
    const auto f = DimensionFunction::power(gamma_times(Rational(1)));
    const auto t = natural_cover_tail(K, pw(Rational(2)), f, 1, 12);
    REQUIRE(t.tails.size() == 12);
    for (std::size_t k = 0; k < t.tails.size(); ++k) {
        const int n0 = 1 + static_cast<int>(k);
        // sum_{n0 <= n <= 12} 2^(n+1) 4^-n = 2 (2^(1-n0) - 2^-12)
        const Rational expect = Rational(2) * (Rational(Integer(2), ipow(Integer(2), static_cast<unsigned long>(n0))) -
                                               Rational(Integer(1), Integer(4096)));
        CHECK(t.tails[k].lo == expect);
        if (k > 0) {
            CHECK(t.tails[k].hi <= t.tails[k - 1].lo);
        }
    }
    const auto single = natural_cover_tail(K, pw(Rational(2)), f, 5, 5);
    CHECK(single.tails.size() == 1);
    const auto flat = natural_cover_tail(K, pw(Rational(3)), DimensionFunction::power(gamma_times(q(1, 3))), 1, 10);
    CHECK(flat.verdict == SeriesVerdictKind::Divergent);
}

}
