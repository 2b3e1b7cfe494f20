#pragma once

#include "cantorlab/interval.hpp"
#include "cantorlab/missing_digit_set.hpp"
#include "cantorlab/rational.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cantorlab {

/// x = [0; a_1, a_2, ...] for x in (0, 1). Convergents p_n / q_n are stored
/// from n = 1; p_0 / q_0 = 0 / 1 is implicit.
struct ContinuedFraction {
    std::vector<Integer> quotients;
    std::vector<Integer> p;
    std::vector<Integer> q;
    /// Every stored quotient is certified; this is their number.
    int certified_depth = 0;
    /// The expansion of a rational ended exactly.
    bool terminated = false;
    /// Refinement was exhausted before the requested depth.
    bool partial = false;

    std::size_t size() const { return quotients.size(); }
    Rational convergent(std::size_t n) const { return Rational(p[n - 1], q[n - 1]); }  // 1-based
    void push(const Integer& a);
};

/// Exact Euclidean expansion of a rational in (0, 1), up to `depth` quotients.
ContinuedFraction continued_fraction_expand(const Rational& x, int depth = 1 << 20);

/// Quotients shared by every point of the enclosure, at most `depth`.
ContinuedFraction continued_fraction_expand(const Interval& x, int depth);

/// Refinement session: asks `source(step)` for successively tighter
/// enclosures until `depth` quotients are certified or `max_steps` runs out
/// (then the certified prefix is returned with `partial` set). Not thread-safe;
/// confine a session to one worker.
class CfSession {
public:
    using Source = std::function<Interval(int step)>;

    CfSession(Source source, int max_steps = 16) : source_(std::move(source)), max_steps_(max_steps) {}

    ContinuedFraction expand(int depth);
    /// Tightest enclosure fetched so far.
    const Interval& enclosure();
    int steps_used() const { return step_; }

private:
    Source source_;
    int max_steps_;
    int step_ = 0;
    std::optional<Interval> current_;
};

enum class LegendreVerdict { Yes, NotImplied };
std::string to_string(LegendreVerdict v);

/// Yes when |x - p/q| < 1/(2 q^2) is certified (then p/q is a convergent of
/// x); throws PrecisionError when the enclosure cannot decide.
LegendreVerdict legendre_is_convergent(const Integer& p, const Integer& q, const Interval& x);

/// Index (1-based) of p/q among the convergents, if present.
std::optional<std::size_t> find_convergent(const ContinuedFraction& cf, const Integer& p, const Integer& q);

struct ExponentEstimate {
    Interval estimate;       // 1 + max log q_{n+1} / log q_n over the window
    std::size_t witness = 0; // n (1-based) attaining the max
    Integer witness_q;
    Integer witness_q_next;
    std::size_t window = 0;  // number of ratios examined
    Integer min_denominator;
};

/// Finite-window estimate of the exact order. Convergents with q_n below
/// `min_denominator` are skipped: their log ratios reflect the first few
/// quotients rather than the approximation order.
ExponentEstimate irrationality_exponent_estimate(const ContinuedFraction& cf, const Integer& min_denominator = 10);

/// Reals in (0, 1) whose expansion starts with the given quotients: the
/// convergent p_N/q_N is included, the mediant (p_N + p_{N-1})/(q_N + q_{N-1})
/// is excluded.
struct CfPrefixInterval {
    Rational lo;
    Rational hi;
    bool lo_closed = true;
    bool hi_closed = true;
};

CfPrefixInterval cf_prefix_interval(const std::vector<Integer>& quotients);

/// True when no level-`depth` basic interval of the set meets the prefix
/// interval (open ends respected).
bool disjoint_from(const CfPrefixInterval& iv, const MissingDigitSet& set, int depth,
                   std::size_t budget = std::size_t{1} << 22);

} // namespace cantorlab
