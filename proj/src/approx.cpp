#include "cantorlab/approx.hpp"

#include "cantorlab/errors.hpp"

namespace cantorlab {

ApproxFunction ApproxFunction::power(const Scalar& tau) {
    ApproxFunction f;
    f.kind = Kind::Power;
    f.exponent = tau;
    return f;
}

ApproxFunction ApproxFunction::power_log(const Scalar& alpha, const Scalar& beta) {
    ApproxFunction f;
    f.kind = Kind::PowerLog;
    f.exponent = alpha;
    f.log_exponent = beta;
    return f;
}

ApproxFunction ApproxFunction::from_table(std::map<int, Rational> values) {
    for (const auto& [n, v] : values) {
        if (n < 1 || v.sign() <= 0) {
            throw InvalidInput("psi table needs levels >= 1 and positive values");
        }
    }
    ApproxFunction f;
    f.kind = Kind::Table;
    f.table = std::move(values);
    return f;
}

Interval ApproxFunction::at_level(const MissingDigitSet& set, int n, int bits) const {
    if (n < 1) {
        throw InvalidInput("psi is evaluated at levels n >= 1");
    }
    const int b = set.base();
    Interval v;
    switch (kind) {
    case Kind::Power:
        v = base_power(b, -(Scalar(Rational(n)) * exponent), bits);
        break;
    case Kind::PowerLog: {
        const Interval lead = base_power(b, -(Scalar(Rational(n)) * exponent), bits);
        const Interval logr = Interval::point(Rational(n)) * log_enclose(Rational(b), bits + 32);
        Interval tail;
        if (auto beta = log_exponent.rational(); beta && beta->is_integer()) {
            tail = pow(logr, -beta->num().get_si());
        } else {
            tail = pow(logr, -log_exponent.enclose(bits + 32), bits);
        }
        v = round_outward(lead * tail, bits + 16);
        break;
    }
    case Kind::Table: {
        const auto it = table.find(n);
        if (it == table.end()) {
            throw InvalidInput("psi table has no value at level " + std::to_string(n));
        }
        v = Interval::point(it->second);
        break;
    }
    }
    if (truncation) {
        const Rational cap = *truncation / Rational(ipow(b, static_cast<unsigned long>(n)));
        if (cap <= v.lo) {
            return Interval::point(cap);
        }
        if (v.hi <= cap) {
            return v;
        }
        return min(Interval::point(cap), v);
    }
    return v;
}

std::optional<Scalar> ApproxFunction::log_base_at_level(int n) const {
    if (kind != Kind::Power || truncation) {
        return std::nullopt;
    }
    return -(Scalar(Rational(n)) * exponent);
}

std::string ApproxFunction::str() const {
    std::string s;
    switch (kind) {
    case Kind::Power:
        s = "r^-(" + exponent.str() + ")";
        break;
    case Kind::PowerLog:
        s = "r^-(" + exponent.str() + ") (log r)^-(" + log_exponent.str() + ")";
        break;
    case Kind::Table:
        s = "table(" + std::to_string(table.size()) + " levels)";
        break;
    }
    if (truncation) {
        s = "min(" + truncation->str() + "/r, " + s + ")";
    }
    return s;
}

ApproxFunction truncate_psi(ApproxFunction psi, const Rational& c) {
    if (c.sign() <= 0) {
        throw InvalidInput("truncation constant must be positive");
    }
    psi.truncation = psi.truncation ? std::min(*psi.truncation, c) : c;
    return psi;
}

DimensionFunction DimensionFunction::power(const Scalar& s) {
    if (s.sign() <= 0) {
        throw InvalidInput("dimension function exponent must be positive");
    }
    DimensionFunction f;
    f.kind = Kind::Power;
    f.s = s;
    f.monotonicity_witness = true;
    return f;
}

DimensionFunction DimensionFunction::from_table(std::map<int, Rational> values, bool monotone) {
    DimensionFunction f;
    f.kind = Kind::Table;
    f.table = std::move(values);
    f.monotonicity_witness = monotone;
    return f;
}

std::string DimensionFunction::str() const {
    if (kind == Kind::Power) {
        return "r^(" + s.str() + ")";
    }
    return "table(" + std::to_string(table.size()) + " levels)";
}

Interval apply_at_level(const DimensionFunction& f, const ApproxFunction& psi, const MissingDigitSet& set, int n,
                        int bits) {
    if (f.kind == DimensionFunction::Kind::Table) {
        const auto it = f.table.find(n);
        if (it == f.table.end()) {
            throw InvalidInput("dimension function table has no value at level " + std::to_string(n));
        }
        return Interval::point(it->second);
    }
    if (auto lb = psi.log_base_at_level(n)) {
        return base_power(set.base(), f.s * *lb, bits);
    }
    const Interval v = psi.at_level(set, n, bits + 32);
    if (auto s = f.s.rational(); s && s->is_integer()) {
        return pow(v, s->num().get_si());
    }
    return pow(v, f.s.enclose(bits + 32), bits);
}

} // namespace cantorlab
