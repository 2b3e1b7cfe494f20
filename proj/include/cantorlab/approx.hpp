#pragma once

#include "cantorlab/interval.hpp"
#include "cantorlab/missing_digit_set.hpp"
#include "cantorlab/scalar.hpp"

#include <map>
#include <optional>
#include <string>

namespace cantorlab {

/// Approximation function psi, only ever evaluated on the grid r = b^n.
///
///   Power:    psi(r) = r^-tau
///   PowerLog: psi(r) = r^-alpha (log r)^-beta   (natural log)
///   Table:    explicit psi(b^n) per level n
///
/// With a truncation constant c the function becomes Psi(r) = min(c/r, psi(r)).
struct ApproxFunction {
    enum class Kind { Power, PowerLog, Table };

    Kind kind = Kind::Power;
    Scalar exponent;      // tau or alpha
    Scalar log_exponent;  // beta (PowerLog only)
    std::map<int, Rational> table;
    std::optional<Rational> truncation;

    static ApproxFunction power(const Scalar& tau);
    static ApproxFunction power_log(const Scalar& alpha, const Scalar& beta);
    static ApproxFunction from_table(std::map<int, Rational> values);

    /// psi(b^n) (or Psi(b^n) when truncated). Exact whenever the value is
    /// rational; otherwise an enclosure at ~`bits` relative precision.
    Interval at_level(const MissingDigitSet& set, int n, int bits = 128) const;

    /// log_b psi(b^n) as a scalar, when symbolic (untruncated Power only).
    std::optional<Scalar> log_base_at_level(int n) const;

    std::string str() const;
};

/// Psi(r) = min(c/r, psi(r)); c > 0.
ApproxFunction truncate_psi(ApproxFunction psi, const Rational& c);

/// Dimension function f, applied to psi values. Power: f(r) = r^s. Table:
/// explicit f(psi(b^n)) per level n.
struct DimensionFunction {
    enum class Kind { Power, Table };

    Kind kind = Kind::Power;
    Scalar s;
    std::map<int, Rational> table;
    /// r^-gamma* f(r) is monotonic on the evaluation set. Always true for
    /// Power; must be asserted explicitly for tables.
    bool monotonicity_witness = true;

    static DimensionFunction power(const Scalar& s);
    static DimensionFunction from_table(std::map<int, Rational> values, bool monotone);

    std::string str() const;
};

/// f(psi(b^n)), exact where possible.
Interval apply_at_level(const DimensionFunction& f, const ApproxFunction& psi, const MissingDigitSet& set, int n,
                        int bits = 128);

} // namespace cantorlab
