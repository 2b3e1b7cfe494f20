#include "cantorlab/cantor_measure.hpp"

#include "cantorlab/errors.hpp"
#include "cantorlab/parallel.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace cantorlab {

namespace {

// sum_{k<=L} c_k m^{-k} + m^{-L} (sum_{i<=P} c_{L+i} m^{-i}) / (1 - m^{-P})
Rational close_series(const std::vector<int>& ranks, std::size_t cycle_start, bool periodic, long m) {
    const Integer mm = m;
    Integer a = 0;
    const std::size_t pre = periodic ? cycle_start : ranks.size();
    for (std::size_t k = 0; k < pre; ++k) {
        a = a * mm + ranks[k];
    }
    Rational f(a, ipow(mm, pre));
    if (periodic) {
        Integer b = 0;
        for (std::size_t k = cycle_start; k < ranks.size(); ++k) {
            b = b * mm + ranks[k];
        }
        const std::size_t period = ranks.size() - cycle_start;
        if (b != 0) {
            f += Rational(b, ipow(mm, pre) * (ipow(mm, period) - 1));
        }
    }
    return f;
}

template <class Rem>
Rational cdf_digits(const MissingDigitSet& set, Rem rem, const Rem& den) {
    const int base = set.base();
    std::vector<int> ranks;
    std::unordered_map<Rem, std::size_t> seen;
    for (;;) {
        if (rem == 0) {
            return close_series(ranks, 0, false, set.size());
        }
        auto [it, inserted] = seen.emplace(rem, ranks.size());
        if (!inserted) {
            return close_series(ranks, it->second, true, set.size());
        }
        rem *= base;
        const Rem d = rem / den;
        rem -= d * den;
        const int digit = static_cast<int>(d);
        ranks.push_back(set.rank_below(digit));
        if (!set.allows(digit)) {
            return close_series(ranks, 0, false, set.size());
        }
    }
}

struct IntegerHash {
    std::size_t operator()(const Integer& v) const { return std::hash<std::string>{}(v.get_str(16)); }
};

Rational cdf_big(const MissingDigitSet& set, const Rational& x) {
    const int base = set.base();
    const Integer den = x.den();
    Integer rem = x.num();
    std::vector<int> ranks;
    std::unordered_map<Integer, std::size_t, IntegerHash> seen;
    for (;;) {
        if (rem == 0) {
            return close_series(ranks, 0, false, set.size());
        }
        auto [it, inserted] = seen.emplace(rem, ranks.size());
        if (!inserted) {
            return close_series(ranks, it->second, true, set.size());
        }
        rem *= base;
        const Integer d = rem / den;
        rem -= d * den;
        const int digit = static_cast<int>(d.get_si());
        ranks.push_back(set.rank_below(digit));
        if (!set.allows(digit)) {
            return close_series(ranks, 0, false, set.size());
        }
    }
}

} // namespace

Rational cantor_cdf(const MissingDigitSet& set, const Rational& x) {
    if (x.sign() <= 0) {
        return Rational(0);
    }
    if (x >= Rational(1)) {
        return Rational(1);
    }
    if (bit_length(x.den()) + bit_length(set.base()) <= 62) {
        return cdf_digits<std::uint64_t>(set, x.num().get_ui(), x.den().get_ui());
    }
    return cdf_big(set, x);
}

CantorMeasureValue cantor_measure(const MissingDigitSet& set, const RatInterval& iv) {
    return CantorMeasureValue::of(cantor_cdf(set, iv.hi) - cantor_cdf(set, iv.lo));
}

IntervalUnion merge_intervals(std::vector<RatInterval> ivs) {
    std::sort(ivs.begin(), ivs.end(), [](const RatInterval& a, const RatInterval& b) { return a.lo < b.lo; });
    IntervalUnion out;
    for (auto& iv : ivs) {
        if (!out.empty() && iv.lo <= out.back().hi) {
            out.back().hi = std::max(out.back().hi, iv.hi);
        } else {
            out.push_back(std::move(iv));
        }
    }
    return out;
}

IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b) {
    IntervalUnion out;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        const Rational lo = std::max(a[i].lo, b[j].lo);
        const Rational hi = std::min(a[i].hi, b[j].hi);
        if (lo <= hi) {
            out.emplace_back(lo, hi);
        }
        if (a[i].hi < b[j].hi) {
            ++i;
        } else {
            ++j;
        }
    }
    return out;
}

IntervalUnion clip(const IntervalUnion& u, const RatInterval& window) { return intersect(u, IntervalUnion{window}); }

Rational union_measure_serial(const MissingDigitSet& set, const IntervalUnion& u) {
    Rational total(0);
    for (const auto& iv : u) {
        total += cantor_measure(set, iv).value();
    }
    return total;
}

Rational union_measure(const MissingDigitSet& set, const IntervalUnion& u) {
    std::vector<Rational> parts(u.size());
    const auto n = static_cast<long>(u.size());
    parallel_for(n, [&](long i) {
        parts[static_cast<std::size_t>(i)] = cantor_measure(set, u[static_cast<std::size_t>(i)]).value();
    });
    Rational total(0);
    for (const auto& p : parts) {
        total += p;
    }
    return total;
}

bool full_cover_check(const MissingDigitSet& set, int n, const RatInterval& window) {
    const Integer q = checked_level_denominator(set, n);
    const Rational r(Integer(1), q);
    std::vector<RatInterval> balls;
    const auto count = q.get_ui();
    balls.reserve(count + 1);
    for (std::uint64_t p = 0; p <= count; ++p) {
        const Rational c(Integer(static_cast<unsigned long>(p)), q);
        balls.emplace_back(c - r, c + r);
    }
    const IntervalUnion covered = clip(merge_intervals(std::move(balls)), window);
    return union_measure(set, covered) == cantor_measure(set, window).value();
}

} // namespace cantorlab
