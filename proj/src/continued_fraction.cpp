#include "cantorlab/continued_fraction.hpp"

#include "cantorlab/errors.hpp"
#include "cantorlab/real.hpp"

#include <algorithm>

namespace cantorlab {

void ContinuedFraction::push(const Integer& a) {
    const std::size_t n = quotients.size();
    const Integer p1 = n >= 1 ? p[n - 1] : Integer(0);
    const Integer q1 = n >= 1 ? q[n - 1] : Integer(1);
    const Integer p2 = n >= 2 ? p[n - 2] : (n == 1 ? Integer(0) : Integer(1));
    const Integer q2 = n >= 2 ? q[n - 2] : (n == 1 ? Integer(1) : Integer(0));
    quotients.push_back(a);
    p.push_back(a * p1 + p2);
    q.push_back(a * q1 + q2);
    certified_depth = static_cast<int>(quotients.size());
}

ContinuedFraction continued_fraction_expand(const Rational& x, int depth) {
    if (x.sign() <= 0 || x >= Rational(1)) {
        throw InvalidInput("continued fraction expansion expects x in (0, 1)");
    }
    ContinuedFraction cf;
    Integer num = x.num();
    Integer den = x.den();
    // x = num/den; a = floor(den/num)
    while (num != 0 && static_cast<int>(cf.size()) < depth) {
        const Integer a = den / num;
        const Integer r = den - a * num;
        cf.push(a);
        den = num;
        num = r;
    }
    cf.terminated = num == 0;
    return cf;
}

ContinuedFraction continued_fraction_expand(const Interval& x, int depth) {
    if (x.exact()) {
        return continued_fraction_expand(x.lo, depth);
    }
    if (x.lo.sign() <= 0 || x.hi >= Rational(1)) {
        throw InvalidInput("continued fraction expansion expects an enclosure inside (0, 1)");
    }
    ContinuedFraction cf;
    Rational lo = x.lo;
    Rational hi = x.hi;
    while (static_cast<int>(cf.size()) < depth) {
        const Rational a_side = Rational(1) / hi;  // smaller reciprocal
        const Rational b_side = Rational(1) / lo;
        const Integer a = a_side.floor();
        if (b_side.floor() != a || a_side == Rational(a)) {
            break;
        }
        cf.push(a);
        lo = a_side - Rational(a);
        hi = b_side - Rational(a);
        if (lo == hi) {
            if (lo.sign() == 0) {
                cf.terminated = true;
                break;
            }
            auto rest = continued_fraction_expand(lo, depth - static_cast<int>(cf.size()));
            for (const auto& r : rest.quotients) {
                cf.push(r);
            }
            cf.terminated = rest.terminated;
            break;
        }
    }
    return cf;
}

const Interval& CfSession::enclosure() {
    if (!current_) {
        current_ = source_(0);
    }
    return *current_;
}

ContinuedFraction CfSession::expand(int depth) {
    ContinuedFraction best = continued_fraction_expand(enclosure(), depth);
    while (static_cast<int>(best.size()) < depth && !best.terminated) {
        if (step_ + 1 >= max_steps_) {
            best.partial = true;
            return best;
        }
        ++step_;
        Interval next = source_(step_);
        // keep the session's enclosures nested
        current_ = Interval(std::max(next.lo, current_->lo), std::min(next.hi, current_->hi));
        ContinuedFraction cf = continued_fraction_expand(*current_, depth);
        if (cf.size() < best.size() ||
            !std::equal(best.quotients.begin(), best.quotients.end(), cf.quotients.begin())) {
            throw PrecisionError("refinement changed a certified quotient");
        }
        best = std::move(cf);
    }
    return best;
}

std::string to_string(LegendreVerdict v) { return v == LegendreVerdict::Yes ? "Yes" : "NotImplied"; }

LegendreVerdict legendre_is_convergent(const Integer& p, const Integer& q, const Interval& x) {
    if (q < 1 || gcd(p, q) != 1) {
        throw InvalidInput("Legendre criterion needs q >= 1 and gcd(p, q) = 1");
    }
    const Rational pq(p, q);
    const Rational bound(Integer(1), 2 * q * q);
    const Interval diff = x - Interval::point(pq);
    const Rational dist_hi = std::max(diff.hi.abs(), diff.lo.abs());
    Rational dist_lo(0);
    if (diff.lo.sign() > 0) {
        dist_lo = diff.lo;
    } else if (diff.hi.sign() < 0) {
        dist_lo = -diff.hi;
    }
    if (dist_hi < bound) {
        return LegendreVerdict::Yes;
    }
    if (dist_lo >= bound) {
        return LegendreVerdict::NotImplied;
    }
    throw PrecisionError("enclosure too wide to decide |x - p/q| < 1/(2q^2)");
}

std::optional<std::size_t> find_convergent(const ContinuedFraction& cf, const Integer& p, const Integer& q) {
    for (std::size_t i = 0; i < cf.size(); ++i) {
        if (cf.p[i] == p && cf.q[i] == q) {
            return i + 1;
        }
    }
    return std::nullopt;
}

ExponentEstimate irrationality_exponent_estimate(const ContinuedFraction& cf, const Integer& min_denominator) {
    if (cf.size() < 3) {
        throw InvalidInput("exponent estimate needs at least 3 convergents");
    }
    ExponentEstimate est;
    est.min_denominator = std::max(min_denominator, Integer(2));
    std::optional<Interval> best;
    for (std::size_t i = 0; i + 1 < cf.size(); ++i) {
        if (cf.q[i] < est.min_denominator) {
            continue;
        }
        const Interval r = enclose_at(LogRatio{Rational(1), cf.q[i + 1], cf.q[i]}, 96);
        ++est.window;
        if (!best || r.hi > best->hi) {
            est.witness = i + 1;
            est.witness_q = cf.q[i];
            est.witness_q_next = cf.q[i + 1];
        }
        best = best ? max(*best, r) : r;
    }
    if (!best) {
        throw InvalidInput("no convergent denominator reaches the window minimum");
    }
    est.estimate = Interval::point(Rational(1)) + *best;
    return est;
}

CfPrefixInterval cf_prefix_interval(const std::vector<Integer>& quotients) {
    if (quotients.empty()) {
        throw InvalidInput("prefix needs at least one quotient");
    }
    ContinuedFraction cf;
    for (const auto& a : quotients) {
        if (a < 1) {
            throw InvalidInput("partial quotients must be positive");
        }
        cf.push(a);
    }
    const std::size_t n = cf.size();
    const Integer pm = n >= 2 ? cf.p[n - 2] : Integer(0);
    const Integer qm = n >= 2 ? cf.q[n - 2] : Integer(1);
    const Rational included(cf.p[n - 1], cf.q[n - 1]);
    const Rational excluded(cf.p[n - 1] + pm, cf.q[n - 1] + qm);
    CfPrefixInterval iv;
    if (included < excluded) {
        iv = {included, excluded, true, false};
    } else {
        iv = {excluded, included, false, true};
    }
    return iv;
}

namespace {

// Level-`depth` basic cells (as integer indices) meeting the closed [lo, hi].
void cells_meeting(const MissingDigitSet& set, const Rational& lo, const Rational& hi, int depth, int level,
                   const Integer& prefix, std::vector<Integer>& out, std::size_t budget) {
    if (level == depth) {
        out.push_back(prefix);
        if (out.size() > budget) {
            throw ResourceError("too many basic intervals meet the prefix interval");
        }
        return;
    }
    const Rational width(Integer(1), ipow(set.base(), static_cast<unsigned long>(level + 1)));
    for (int d : set.digits()) {
        const Integer idx = prefix * set.base() + d;
        const Rational a = Rational(idx) * width;
        const Rational z = a + width;
        if (z < lo || a > hi) {
            continue;
        }
        cells_meeting(set, lo, hi, depth, level + 1, idx, out, budget);
    }
}

} // namespace

bool disjoint_from(const CfPrefixInterval& iv, const MissingDigitSet& set, int depth, std::size_t budget) {
    if (depth < 1) {
        throw InvalidInput("depth must be >= 1");
    }
    std::vector<Integer> cells;
    cells_meeting(set, iv.lo, iv.hi, depth, 0, Integer(0), cells, budget);
    const Rational width(Integer(1), ipow(set.base(), static_cast<unsigned long>(depth)));
    for (const auto& c : cells) {
        const Rational a = Rational(c) * width;
        const Rational z = a + width;
        const bool left_ok = iv.lo_closed ? z >= iv.lo : z > iv.lo;
        const bool right_ok = iv.hi_closed ? a <= iv.hi : a < iv.hi;
        if (left_ok && right_ok) {
            return false;
        }
    }
    return true;
}

} // namespace cantorlab
