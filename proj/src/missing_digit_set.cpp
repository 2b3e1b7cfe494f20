#include "cantorlab/missing_digit_set.hpp"

#include "cantorlab/digits.hpp"
#include "cantorlab/errors.hpp"
#include "cantorlab/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cantorlab {

MissingDigitSet::MissingDigitSet(int base, std::vector<int> digits) : base_(base), digits_(std::move(digits)) {
    if (base_ < 3) {
        throw InvalidInput("missing-digit set needs base >= 3");
    }
    std::sort(digits_.begin(), digits_.end());
    digits_.erase(std::unique(digits_.begin(), digits_.end()), digits_.end());
    if (digits_.size() < 2 || static_cast<int>(digits_.size()) >= base_) {
        throw InvalidInput("digit set must satisfy 2 <= #J <= b - 1");
    }
    if (digits_.front() < 0 || digits_.back() >= base_) {
        throw InvalidInput("digits must lie in [0, b - 1]");
    }
    allowed_.assign(static_cast<std::size_t>(base_), false);
    rank_.assign(static_cast<std::size_t>(base_) + 1, 0);
    for (int d : digits_) {
        allowed_[static_cast<std::size_t>(d)] = true;
    }
    for (int d = 0; d < base_; ++d) {
        rank_[static_cast<std::size_t>(d) + 1] = rank_[static_cast<std::size_t>(d)] + (allowed_[static_cast<std::size_t>(d)] ? 1 : 0);
    }
}

MissingDigitSet MissingDigitSet::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw InvalidInput("set must look like 'b:d1,d2,...', got '" + text + "'");
    }
    try {
        const int base = std::stoi(text.substr(0, colon));
        std::vector<int> digits;
        std::stringstream ss(text.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::size_t used = 0;
            digits.push_back(std::stoi(item, &used));
            if (used != item.size()) {
                throw InvalidInput("bad digit '" + item + "'");
            }
        }
        return MissingDigitSet(base, std::move(digits));
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const InvalidInput*>(&e) != nullptr) {
            throw;
        }
        throw InvalidInput("set must look like 'b:d1,d2,...', got '" + text + "'");
    }
}

bool MissingDigitSet::non_adjacent() const {
    for (std::size_t i = 1; i < digits_.size(); ++i) {
        if (digits_[i] == digits_[i - 1] + 1) {
            return false;
        }
    }
    // 0 and b-1 both allowed lets (..d,b-1,b-1) meet (..d+1,0,0) only if d,d+1 in J.
    return true;
}

std::string MissingDigitSet::str() const {
    std::string s = std::to_string(base_) + ":";
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        s += (i ? "," : "") + std::to_string(digits_[i]);
    }
    return s;
}

RatInterval::RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo) {
        throw InvalidInput("interval with lo > hi");
    }
    lo = std::max(lo, Rational(0));
    hi = std::min(hi, Rational(1));
    if (hi < lo) {
        throw InvalidInput("interval does not meet [0, 1]");
    }
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::In:
        return "In";
    case Verdict::Out:
        return "Out";
    case Verdict::Undetermined:
        return "Undetermined";
    }
    return "Undetermined";
}

MembershipResult membership(const Rational& x, const MissingDigitSet& set, int depth) {
    if (depth < 1) {
        throw InvalidInput("membership depth must be >= 1");
    }
    if (x.sign() < 0 || x > Rational(1)) {
        return {Verdict::Out, depth};
    }
    for (const auto& e : expansions(x, set.base())) {
        const bool ok = std::all_of(e.prefix.begin(), e.prefix.end(), [&](int d) { return set.allows(d); }) &&
                        std::all_of(e.period.begin(), e.period.end(), [&](int d) { return set.allows(d); });
        if (ok) {
            return {Verdict::In, depth};
        }
    }
    return {Verdict::Out, depth};
}

namespace {

// Position of [lo, hi] (scaled to the unit cell) relative to the level-k
// approximation. `all` asks whether every point is covered, otherwise whether
// any point is. A point on a cell boundary belongs to both neighbouring cells.
bool level_cover(const MissingDigitSet& set, const Rational& lo, const Rational& hi, int remaining, bool all) {
    if (remaining == 0) {
        return true;
    }
    if (lo.sign() == 0 && hi == Rational(1)) {
        // A whole cell holds points of the set and, since J is proper, gaps.
        return !all;
    }
    const int b = set.base();
    const Rational rb(b);
    const long first = std::max<long>(0, Integer((lo * rb).ceil() - 1).get_si());
    const long last = std::min<long>(b - 1, (hi * rb).floor().get_si());
    const bool point = lo == hi;
    bool any_point_cover = false;
    for (long d = first; d <= last; ++d) {
        const Rational a = std::max(lo, Rational(d) / rb);
        const Rational z = std::min(hi, Rational(d + 1) / rb);
        if (z < a) {
            continue;
        }
        const bool degenerate = a == z;
        const int digit = static_cast<int>(d);
        const bool covered = set.allows(digit) &&
                             level_cover(set, a * rb - Rational(d), z * rb - Rational(d), remaining - 1, all);
        if (!all) {
            if (covered) {
                return true;
            }
            continue;
        }
        if (point) {
            any_point_cover = any_point_cover || covered;
        } else if (!degenerate && !covered) {
            return false;
        }
    }
    return all ? (!point || any_point_cover) : false;
}

} // namespace

MembershipResult membership(const Interval& x, const MissingDigitSet& set, int depth) {
    if (depth < 1) {
        throw InvalidInput("membership depth must be >= 1");
    }
    if (x.exact()) {
        return membership(x.lo, set, depth);
    }
    if (x.hi.sign() < 0 || x.lo > Rational(1)) {
        return {Verdict::Out, depth};
    }
    const Rational lo = std::max(x.lo, Rational(0));
    const Rational hi = std::min(x.hi, Rational(1));
    const bool inside = x.lo.sign() >= 0 && x.hi <= Rational(1);
    if (inside && level_cover(set, lo, hi, depth, true)) {
        return {Verdict::In, depth};
    }
    if (!level_cover(set, lo, hi, depth, false)) {
        return {Verdict::Out, depth};
    }
    return {Verdict::Undetermined, depth};
}

Integer checked_level_denominator(const MissingDigitSet& set, int n) {
    if (n < 1) {
        throw InvalidInput("level must be >= 1");
    }
    const Integer q = ipow(set.base(), static_cast<unsigned long>(n));
    if (bit_length(q) > 62) {
        throw ResourceError("level " + std::to_string(n) + " exceeds the 64-bit center encoding");
    }
    return q;
}

namespace {

std::uint64_t coprime_radical(int base) {
    std::uint64_t r = 1;
    int b = base;
    for (int p = 2; p * p <= b; ++p) {
        if (b % p == 0) {
            r *= static_cast<std::uint64_t>(p);
            while (b % p == 0) {
                b /= p;
            }
        }
    }
    if (b > 1) {
        r *= static_cast<std::uint64_t>(b);
    }
    return r;
}

void check_budget(const MissingDigitSet& set, int n, std::size_t budget) {
    const Integer endpoints = 2 * ipow(set.size(), static_cast<unsigned long>(n));
    if (endpoints > Integer(static_cast<unsigned long>(budget))) {
        throw ResourceError("enumeration at level " + std::to_string(n) + " exceeds the center budget");
    }
}

void finish_centers(std::vector<std::uint64_t>& out, std::uint64_t rad, bool coprime) {
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (coprime) {
        std::erase_if(out, [rad](std::uint64_t p) { return std::gcd(p, rad) != 1; });
    }
}

// Left endpoints of the level-n basic intervals below a level-k prefix.
std::vector<std::uint64_t> expand_prefix(const MissingDigitSet& set, std::uint64_t prefix, int levels) {
    std::vector<std::uint64_t> cur{prefix};
    std::vector<std::uint64_t> next;
    const auto b = static_cast<std::uint64_t>(set.base());
    for (int k = 0; k < levels; ++k) {
        next.clear();
        next.reserve(cur.size() * set.digits().size());
        for (std::uint64_t l : cur) {
            for (int d : set.digits()) {
                next.push_back(l * b + static_cast<std::uint64_t>(d));
            }
        }
        cur.swap(next);
    }
    return cur;
}

// A left endpoint lies in the set through its 0-tail expansion, a right
// endpoint through its (b-1)-tail expansion.
void push_endpoints(const MissingDigitSet& set, const std::vector<std::uint64_t>& lefts,
                    std::vector<std::uint64_t>& out) {
    const bool left = set.allows(0);
    const bool right = set.allows(set.base() - 1);
    for (std::uint64_t l : lefts) {
        if (left) {
            out.push_back(l);
        }
        if (right) {
            out.push_back(l + 1);
        }
    }
}

} // namespace

std::vector<std::uint64_t> enumerate_centers_serial(const MissingDigitSet& set, int n, bool coprime, std::size_t budget) {
    checked_level_denominator(set, n);
    check_budget(set, n, budget);
    std::vector<std::uint64_t> out;
    push_endpoints(set, expand_prefix(set, 0, n), out);
    finish_centers(out, coprime_radical(set.base()), coprime);
    return out;
}

std::vector<std::uint64_t> enumerate_centers(const MissingDigitSet& set, int n, bool coprime, std::size_t budget) {
    checked_level_denominator(set, n);
    check_budget(set, n, budget);
    const int split = std::min(n, 4);
    const std::vector<std::uint64_t> prefixes = expand_prefix(set, 0, split);
    std::vector<std::vector<std::uint64_t>> chunks(prefixes.size());
    parallel_for(static_cast<long>(prefixes.size()), [&](long i) {
        push_endpoints(set, expand_prefix(set, prefixes[static_cast<std::size_t>(i)], n - split),
                       chunks[static_cast<std::size_t>(i)]);
    });
    std::vector<std::uint64_t> out;
    for (auto& c : chunks) {
        out.insert(out.end(), c.begin(), c.end());
    }
    finish_centers(out, coprime_radical(set.base()), coprime);
    return out;
}

Integer count_centers(const MissingDigitSet& set, int n) {
    if (n < 1) {
        throw InvalidInput("level must be >= 1");
    }
    const Integer m = set.size();
    int adjacent = 0;
    for (std::size_t i = 1; i < set.digits().size(); ++i) {
        if (set.digits()[i] == set.digits()[i - 1] + 1) {
            ++adjacent;
        }
    }
    const bool left = set.allows(0);
    const bool right = set.allows(set.base() - 1);
    const Integer words = ipow(m, static_cast<unsigned long>(n));
    if (!left || !right) {
        return (left || right) ? words : Integer(0);
    }
    // Shared endpoint between u d (b-1)^j and u (d+1) 0^j.
    Integer shared = 0;
    for (int j = 0; j < n; ++j) {
        shared += ipow(m, static_cast<unsigned long>(n - 1 - j)) * adjacent;
    }
    return 2 * words - shared;
}

} // namespace cantorlab
