#include "cantorlab/series.hpp"

#include "cantorlab/errors.hpp"

namespace cantorlab {

std::string to_string(SeriesVerdictKind v) {
    switch (v) {
    case SeriesVerdictKind::Convergent:
        return "Convergent";
    case SeriesVerdictKind::Divergent:
        return "Divergent";
    case SeriesVerdictKind::Undetermined:
        return "Undetermined";
    }
    return "Undetermined";
}

std::string to_string(MeasurePrediction p) {
    switch (p) {
    case MeasurePrediction::MeasureZero:
        return "MeasureZero";
    case MeasurePrediction::MeasureFull:
        return "MeasureFull";
    case MeasurePrediction::NotApplicable:
        return "NotApplicable";
    }
    return "NotApplicable";
}

namespace {

Scalar set_gamma(const MissingDigitSet& set) { return Scalar::gamma(set.size(), set.base()); }

struct Decision {
    SeriesVerdictKind verdict;
    std::string rule;
};

// Exponent of the psi power that dominates for large n once a truncation
// min(c/r, psi) is active: max(tau, 1), or the pure 1/r power.
struct Effective {
    Scalar power;
    std::optional<Scalar> log_power;
};

Effective effective_shape(const ApproxFunction& psi, const PrecisionPolicy& policy) {
    if (!psi.truncation) {
        if (psi.kind == ApproxFunction::Kind::PowerLog) {
            return {psi.exponent, psi.log_exponent};
        }
        return {psi.exponent, std::nullopt};
    }
    const int above = (psi.exponent - Scalar(Rational(1))).sign(policy);
    if (above > 0) {
        if (psi.kind == ApproxFunction::Kind::PowerLog) {
            return {psi.exponent, psi.log_exponent};
        }
        return {psi.exponent, std::nullopt};
    }
    if (above == 0 && psi.kind == ApproxFunction::Kind::PowerLog && psi.log_exponent.sign(policy) > 0) {
        return {psi.exponent, psi.log_exponent};
    }
    return {Scalar(Rational(1)), std::nullopt};
}

Decision decide(const MissingDigitSet& set, const ApproxFunction& psi, const DimensionFunction& f,
                const PrecisionPolicy& policy) {
    if (psi.kind == ApproxFunction::Kind::Table || f.kind == DimensionFunction::Kind::Table) {
        return {SeriesVerdictKind::Undetermined, "table input: no finite computation decides divergence"};
    }
    const Effective eff = effective_shape(psi, policy);
    // term_n ~ b^(n (gamma* - s tau)) * (n log b)^(-s beta)
    const int lead = (set_gamma(set) - f.s * eff.power).sign(policy);
    if (lead < 0) {
        return {SeriesVerdictKind::Convergent, "geometric: s*tau > gamma*"};
    }
    if (lead > 0) {
        return {SeriesVerdictKind::Divergent, "geometric: s*tau < gamma*"};
    }
    if (!eff.log_power) {
        return {SeriesVerdictKind::Divergent, "constant terms: s*tau = gamma*"};
    }
    const int p = (f.s * *eff.log_power - Scalar(Rational(1))).sign(policy);
    if (p > 0) {
        return {SeriesVerdictKind::Convergent, "integral test: s*tau = gamma*, sum n^-(s*beta) with s*beta > 1"};
    }
    return {SeriesVerdictKind::Divergent, "integral test: s*tau = gamma*, sum n^-(s*beta) with s*beta <= 1"};
}

MeasurePrediction predict(SeriesVerdictKind v) {
    switch (v) {
    case SeriesVerdictKind::Convergent:
        return MeasurePrediction::MeasureZero;
    case SeriesVerdictKind::Divergent:
        return MeasurePrediction::MeasureFull;
    case SeriesVerdictKind::Undetermined:
        return MeasurePrediction::NotApplicable;
    }
    return MeasurePrediction::NotApplicable;
}

void check_hypothesis(const DimensionFunction& f) {
    if (!f.monotonicity_witness) {
        throw HypothesisViolation("dimension function lacks the monotonicity witness for r^-gamma f(r)");
    }
}

} // namespace

Interval series_term(const MissingDigitSet& set, const ApproxFunction& psi, const DimensionFunction& f, int n,
                     int bits) {
    const Scalar nn{Rational(n)};
    const Scalar gamma = set_gamma(set);
    if (!psi.truncation && f.kind == DimensionFunction::Kind::Power) {
        if (psi.kind == ApproxFunction::Kind::Power) {
            return base_power(set.base(), nn * (gamma - f.s * psi.exponent), bits);
        }
        if (psi.kind == ApproxFunction::Kind::PowerLog) {
            const Interval lead = base_power(set.base(), nn * (gamma - f.s * psi.exponent), bits);
            const Interval logr = Interval::point(Rational(n)) * log_enclose(Rational(set.base()), bits + 32);
            const Scalar e = f.s * psi.log_exponent;
            Interval tail;
            if (auto q = e.rational(); q && q->is_integer()) {
                tail = pow(logr, -q->num().get_si());
            } else {
                tail = pow(logr, -e.enclose(bits + 32), bits);
            }
            return round_outward(lead * tail, bits + 16);
        }
    }
    // (b^n)^gamma* = m^n exactly
    const Interval growth = Interval::point(Rational(ipow(set.size(), static_cast<unsigned long>(n))));
    return round_outward(apply_at_level(f, psi, set, n, bits + 16) * growth, bits + 16);
}

SeriesVerdict series_classify(const MissingDigitSet& set, const ApproxFunction& psi, const DimensionFunction& f,
                              int n_max, const PrecisionPolicy& policy) {
    check_hypothesis(f);
    if (n_max < 1) {
        throw InvalidInput("series needs N_max >= 1");
    }
    SeriesVerdict out;
    Interval sum = Interval::point(Rational(0));
    for (int n = 1; n <= n_max; ++n) {
        Interval t;
        if (psi.kind == ApproxFunction::Kind::Table && !psi.table.count(n)) {
            break;  // nothing beyond the table
        }
        if (f.kind == DimensionFunction::Kind::Table && !f.table.count(n)) {
            break;
        }
        t = series_term(set, psi, f, n);
        out.exact = out.exact && t.exact();
        sum = sum + t;
        out.terms.push_back(t);
        out.partial_sums.push_back(sum);
    }
    const Decision d = decide(set, psi, f, policy);
    out.verdict = d.verdict;
    out.rule = d.rule;
    out.prediction = predict(d.verdict);
    return out;
}

TailReport natural_cover_tail(const MissingDigitSet& set, const ApproxFunction& psi, const DimensionFunction& f, int n0,
                              int n_max, const PrecisionPolicy& policy) {
    check_hypothesis(f);
    if (n0 < 1 || n_max < n0) {
        throw InvalidInput("tail needs 1 <= n0 <= N_max");
    }
    std::vector<Interval> weighted;
    for (int n = n0; n <= n_max; ++n) {
        const Interval fv = apply_at_level(f, psi, set, n);
        weighted.push_back(fv * Interval::point(Rational(count_centers(set, n))));
    }
    TailReport rep;
    rep.n0 = n0;
    rep.n_max = n_max;
    rep.tails.resize(weighted.size());
    Interval acc = Interval::point(Rational(0));
    for (std::size_t k = weighted.size(); k-- > 0;) {
        acc = acc + weighted[k];
        rep.exact = rep.exact && weighted[k].exact();
        rep.tails[k] = acc;
    }
    rep.verdict = decide(set, psi, f, policy).verdict;
    return rep;
}

} // namespace cantorlab
