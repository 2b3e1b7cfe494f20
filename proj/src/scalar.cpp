#include "cantorlab/scalar.hpp"

#include "cantorlab/errors.hpp"

#include <algorithm>
#include <sstream>

namespace cantorlab {

Scalar::Scalar(const Rational& r) {
    if (r.sign() != 0) {
        terms_[0] = r;
    }
}

Scalar Scalar::gamma(int m, int b, const Rational& c, int power) {
    if (m < 2 || b <= m) {
        throw InvalidInput("gamma* needs 2 <= m < b");
    }
    Scalar s;
    s.m_ = m;
    s.b_ = b;
    if (c.sign() != 0) {
        s.terms_[power] = c;
    }
    s.normalize();
    return s;
}

Scalar Scalar::real(const RealSpec& spec) {
    if (auto v = exact_value(spec)) {
        return Scalar(*v);
    }
    return opaque([spec](int bits) { return enclose_at(spec, bits); }, describe(spec));
}

Scalar Scalar::opaque(std::function<Interval(int)> f, std::string label) {
    Scalar s;
    s.opaque_ = std::move(f);
    s.label_ = std::move(label);
    return s;
}

void Scalar::normalize() {
    std::erase_if(terms_, [](const auto& kv) { return kv.second.sign() == 0; });
    bool uses_gamma = false;
    for (const auto& [k, c] : terms_) {
        uses_gamma = uses_gamma || k != 0;
    }
    if (!uses_gamma) {
        m_ = 0;
        b_ = 0;
    }
}

void Scalar::merge_context(Scalar& out, const Scalar& a, const Scalar& b) {
    if (a.m_ != 0 && b.m_ != 0 && (a.m_ != b.m_ || a.b_ != b.b_)) {
        throw InvalidInput("gamma* of different digit sets combined");
    }
    out.m_ = a.m_ != 0 ? a.m_ : b.m_;
    out.b_ = a.m_ != 0 ? a.b_ : b.b_;
}

std::optional<Rational> Scalar::rational() const {
    if (opaque_) {
        return std::nullopt;
    }
    if (terms_.empty()) {
        return Rational(0);
    }
    if (terms_.size() == 1 && terms_.begin()->first == 0) {
        return terms_.begin()->second;
    }
    return std::nullopt;
}

bool Scalar::is_zero() const { return !opaque_ && terms_.empty(); }

Interval Scalar::enclose(int bits) const {
    if (opaque_) {
        return opaque_(bits);
    }
    Interval total = Interval::point(Rational(0));
    if (terms_.empty()) {
        return total;
    }
    std::optional<Interval> g;
    for (const auto& [k, c] : terms_) {
        if (k == 0) {
            total = total + Interval::point(c);
            continue;
        }
        if (!g) {
            g = enclose_at(LogRatio{Rational(1), m_, b_}, bits + 8);
        }
        total = total + Interval::point(c) * pow(*g, k);
    }
    return round_outward(total, bits + 16);
}

int Scalar::sign(const PrecisionPolicy& policy) const {
    if (is_zero()) {
        return 0;
    }
    for (int step = 0; step < policy.max_steps; ++step) {
        if (auto s = certified_sign(enclose(policy.bits_at(step)))) {
            return *s;
        }
    }
    throw UndecidableError("sign of " + str() + " undecided at the precision cap");
}

std::string Scalar::str() const {
    if (opaque_) {
        return label_;
    }
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        if (!first) {
            os << " + ";
        }
        first = false;
        if (k == 0) {
            os << c;
        } else {
            os << c << "*gamma";
            if (k != 1) {
                os << "^" << k;
            }
        }
    }
    return os.str();
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.opaque_ || b.opaque_) {
        return Scalar::opaque([a, b](int bits) { return a.enclose(bits + 4) + b.enclose(bits + 4); },
                              "(" + a.str() + ") + (" + b.str() + ")");
    }
    Scalar out;
    Scalar::merge_context(out, a, b);
    out.terms_ = a.terms_;
    for (const auto& [k, c] : b.terms_) {
        out.terms_[k] += c;
    }
    out.normalize();
    return out;
}

Scalar Scalar::operator-() const {
    if (opaque_) {
        auto f = opaque_;
        return opaque([f](int bits) { return -f(bits); }, "-(" + label_ + ")");
    }
    Scalar out = *this;
    for (auto& [k, c] : out.terms_) {
        c = -c;
    }
    return out;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.opaque_ || b.opaque_) {
        return Scalar::opaque([a, b](int bits) { return a.enclose(bits + 8) * b.enclose(bits + 8); },
                              "(" + a.str() + ") * (" + b.str() + ")");
    }
    Scalar out;
    Scalar::merge_context(out, a, b);
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            out.terms_[ka + kb] += ca * cb;
        }
    }
    out.normalize();
    return out;
}

Interval base_power(int base, const Scalar& e, int bits) {
    if (e.symbolic()) {
        const auto& t = e.terms();
        const bool linear = std::all_of(t.begin(), t.end(), [](const auto& kv) { return kv.first == 0 || kv.first == 1; });
        if (linear && (e.gamma_b() == 0 || e.gamma_b() == base)) {
            // b^(u + v gamma*) = b^u * m^v
            const Rational u = t.count(0) ? t.at(0) : Rational(0);
            Interval r = rational_power(Rational(base), u, bits);
            if (t.count(1)) {
                r = round_outward(r * rational_power(Rational(e.gamma_m()), t.at(1), bits), bits + 16);
            }
            return r;
        }
    }
    const int guard = 32;
    const Interval x = e.enclose(bits + guard) * log_enclose(Rational(base), bits + guard);
    return exp(round_outward(x, bits + guard), bits);
}

} // namespace cantorlab
