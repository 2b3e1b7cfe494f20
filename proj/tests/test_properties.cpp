#include "cantorlab/continued_fraction.hpp"
#include "cantorlab/series.hpp"
#include "cantorlab/sparse_number.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

using namespace cantorlab;

namespace {

Rational q(long n, long d) { return Rational(Integer(n), Integer(d)); }

Rational random_q(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-100000, 100000);
    std::uniform_int_distribution<long> den(1, 5000);
    return q(num(rng), den(rng));
}

struct TestNumber {
    std::string name;
    std::function<Interval(int)> source;  // tighter with each step
    std::optional<Rational> exact;
};

TestNumber real_number(const std::string& name, RealSpec spec) {
    return {name, [spec](int step) { return enclose_at(spec, 128 << step); }, std::nullopt};
}

TestNumber sparse(const std::string& name, const ExponentRule& rule, int terms) {
    return {name, [rule, terms](int step) { return build_sparse_number(3, 2, rule, terms + step).enclosure(); },
            std::nullopt};
}

std::vector<TestNumber> test_numbers() {
    std::vector<TestNumber> v;
    for (const Rational& r : {q(2, 27), q(355, 1130), q(13, 21), q(5, 7), q(89, 144)}) {
        v.push_back({r.str(), [r](int) { return Interval::point(r); }, r});
    }
    v.push_back(real_number("golden", QuadraticSurd{q(-1, 2), q(1, 2), Integer(5)}));
    v.push_back(real_number("sqrt2-1", QuadraticSurd{Rational(-1), Rational(1), Integer(2)}));
    v.push_back(real_number("sqrt3-1", QuadraticSurd{Rational(-1), Rational(1), Integer(3)}));
    v.push_back(real_number("sqrt5-2", QuadraticSurd{Rational(-2), Rational(1), Integer(5)}));
    v.push_back(real_number("sqrt11-3", QuadraticSurd{Rational(-3), Rational(1), Integer(11)}));
    v.push_back(real_number("log2/log3", LogRatio{Rational(1), Integer(2), Integer(3)}));
    v.push_back(real_number("log2/log5", LogRatio{Rational(1), Integer(2), Integer(5)}));
    v.push_back(real_number("log3/log7", LogRatio{Rational(1), Integer(3), Integer(7)}));
    v.push_back(real_number("log5/log11", LogRatio{Rational(1), Integer(5), Integer(11)}));
    v.push_back(real_number("log2/log10", LogRatio{Rational(1), Integer(2), Integer(10)}));
    v.push_back(sparse("xi(3)", ExponentRule::power(Rational(3)), 4));
    v.push_back(sparse("xi(5/2)", ExponentRule::power(q(5, 2)), 5));
    v.push_back(sparse("xi(11/5)", ExponentRule::power(q(11, 5)), 6));
    v.push_back(sparse("xi(1+sqrt2)", ExponentRule::power(QuadraticSurd{Rational(1), Rational(1), Integer(2)}), 4));
    v.push_back(sparse("factorial", ExponentRule::factorial(), 4));
    return v;
}

int sign_of(const Interval& v) {
    const auto s = certified_sign(v);
    REQUIRE(s.has_value());
    return *s;
}

} // namespace

TEST_SUITE("properties") {

TEST_CASE("rational field laws") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 300; ++i) {
        const Rational a = random_q(rng);
        const Rational b = random_q(rng);
        const Rational c = random_q(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        if (a.sign() != 0) {
            CHECK(a * (Rational(1) / a) == Rational(1));
        }
        CHECK(Rational::parse(a.str()) == a);
        CHECK(gcd(a.num(), a.den()) == 1);
        CHECK(a.den() > 0);
        CHECK(Rational(a.floor()) <= a);
        CHECK(a < Rational(a.floor() + 1));
    }
}

TEST_CASE("interval operations contain pointwise results") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 200; ++i) {
        Rational a1 = random_q(rng);
        Rational a2 = random_q(rng);
        Rational b1 = random_q(rng);
        Rational b2 = random_q(rng);
        if (a2 < a1) {
            std::swap(a1, a2);
        }
        if (b2 < b1) {
            std::swap(b1, b2);
        }
        const Interval a(a1, a2);
        const Interval b(b1, b2);
        const Rational x = (a1 + a2) / Rational(2);
        const Rational y = b1;
        CHECK((a + b).contains(x + y));
        CHECK((a - b).contains(x - y));
        CHECK((a * b).contains(x * y));
        if (!b.contains(Rational(0))) {
            CHECK((a / b).contains(x / y));
        }
    }
}

TEST_CASE("enclosures nest under refinement") {
    const std::vector<RealSpec> specs{QuadraticSurd{q(-1, 2), q(1, 2), Integer(5)},
                                      LogRatio{Rational(1), Integer(2), Integer(3)},
                                      LogRatio{q(3, 7), Integer(10), Integer(7)}};
    for (const auto& spec : specs) {
        RealEnclosure e = enclose_real(spec, q(1, 1000));
        for (int k = 0; k < 5; ++k) {
            Rational target = e.bounds.width() / Rational(1000);
            if (target.sign() == 0) {
                break;
            }
            const RealEnclosure next = refine(e, target);
            CHECK(e.bounds.contains(next.bounds));
            e = next;
        }
    }
    Interval sparse = enclose_at(SparseSeries{3, 2, {3}, std::nullopt}, 64);
    std::vector<long> exps{3};
    for (long e = 9; e <= 243; e *= 3) {
        const Interval next = enclose_at(SparseSeries{3, 2, exps, e}, 64);
        CHECK(sparse.contains(next));
        sparse = next;
        exps.push_back(e);
    }
    for (int bits = 32; bits <= 1024; bits *= 2) {
        CHECK(log_enclose(Rational(3), bits).contains(log_enclose(Rational(3), bits * 2).mid()));
    }
}

TEST_CASE("continued-fraction invariants on twenty numbers") {
    const auto numbers = test_numbers();
    REQUIRE(numbers.size() == 20);
    for (const auto& t : numbers) {
        CAPTURE(t.name);
        ContinuedFraction cf;
        if (t.exact) {
            cf = continued_fraction_expand(*t.exact);
        } else {
            CfSession session(t.source, 6);
            cf = session.expand(t.name == "factorial" ? 8 : 25);
        }
        REQUIRE(cf.size() >= 2);
        const Interval x = t.exact ? Interval::point(*t.exact) : t.source(3);
        Integer p2 = 1;
        Integer q2 = 0;
        Integer p1 = 0;
        Integer q1 = 1;
        for (std::size_t i = 0; i < cf.size(); ++i) {
            const Integer& a = cf.quotients[i];
            CHECK(a >= 1);
            CHECK(cf.p[i] == a * p1 + p2);
            CHECK(cf.q[i] == a * q1 + q2);
            const Integer det = cf.q[i] * p1 - cf.p[i] * q1;
            CHECK(det == ((i % 2 == 0) ? -1 : 1));
            if (i >= 1) {
                CHECK(cf.q[i] > q1);
            }
            p2 = p1;
            q2 = q1;
            p1 = cf.p[i];
            q1 = cf.q[i];
        }
        CHECK(oracle::evaluate_cf(cf.quotients) == cf.convergent(cf.size()));
        const std::size_t last = t.exact ? cf.size() - 2 : cf.size() - 1;
        for (std::size_t n = 1; n <= last; ++n) {
            const Rational pq = cf.convergent(n);
            const Interval diff = x - Interval::point(pq);
            const Rational qn(cf.q[n - 1]);
            const Rational qn1(cf.q[n]);
            CHECK(sign_of(diff) == (n % 2 == 1 ? -1 : 1));
            const Rational dist_lo = n % 2 == 1 ? -diff.hi : diff.lo;
            const Rational dist_hi = n % 2 == 1 ? -diff.lo : diff.hi;
            CHECK(dist_lo > Rational(1) / (qn * (qn + qn1)));
            CHECK(dist_hi < Rational(1) / (qn * qn1));
        }
    }
}

TEST_CASE("series verdicts agree with the geometric closed form on a 50-point grid") {
    const MissingDigitSet K = MissingDigitSet::middle_third();
    const double gamma = std::log(2.0) / std::log(3.0);
    int points = 0;
    for (const Rational& tau : {Rational(1), q(3, 2), Rational(2), q(5, 2), Rational(3)}) {
        std::vector<Scalar> grid{Scalar::gamma(2, 3, Rational(1) / tau)};
        for (long k = 1; k <= 9; ++k) {
            grid.emplace_back(q(k, 10));
        }
        for (const Scalar& s : grid) {
            ++points;
            CAPTURE(s.str());
            CAPTURE(tau.str());
            const auto v = series_classify(K, ApproxFunction::power(Scalar(tau)), DimensionFunction::power(s), 12);
            const bool boundary = s.symbolic() && !s.rational();
            const double st = boundary ? gamma : s.rational()->to_double() * tau.to_double();
            if (boundary) {
                CHECK(v.verdict == SeriesVerdictKind::Divergent);
                CHECK(v.partial_sums.back().exact());
                CHECK(v.partial_sums.back().lo == Rational(12));
                continue;
            }
            const bool converges = st > gamma;
            CHECK(v.verdict == (converges ? SeriesVerdictKind::Convergent : SeriesVerdictKind::Divergent));
            CHECK(v.prediction == (converges ? MeasurePrediction::MeasureZero : MeasurePrediction::MeasureFull));
            const double r = std::pow(3.0, gamma - st);
            const double closed = r * (std::pow(r, 12) - 1) / (r - 1);
            const double got = v.partial_sums.back().mid().to_double();
            CHECK(std::abs(got - closed) <= 1e-9 * closed);
        }
    }
    CHECK(points == 50);
}

}
