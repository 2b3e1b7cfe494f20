#include "cantorlab/rational.hpp"

#include "cantorlab/errors.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace cantorlab {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw InvalidInput("zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.sign() == 0) {
        throw InvalidInput("division by zero");
    }
    q_ /= o.q_;
    return *this;
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) {
        throw InvalidInput("empty number");
    }
    if (const auto slash = text.find('/'); slash != std::string::npos) {
        Integer n;
        Integer d;
        if (n.set_str(text.substr(0, slash), 10) != 0 || d.set_str(text.substr(slash + 1), 10) != 0) {
            throw InvalidInput("malformed rational '" + text + "'");
        }
        return Rational(n, d);
    }
    // Decimal: [sign] digits [. digits] [e [sign] digits]
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    std::string mantissa;
    long frac_digits = 0;
    bool seen_point = false;
    for (; i < text.size() && text[i] != 'e' && text[i] != 'E'; ++i) {
        const char c = text[i];
        if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            mantissa.push_back(c);
            if (seen_point) {
                ++frac_digits;
            }
        } else {
            throw InvalidInput("malformed number '" + text + "'");
        }
    }
    if (mantissa.empty()) {
        throw InvalidInput("malformed number '" + text + "'");
    }
    long exponent = 0;
    if (i < text.size()) {
        const std::string e = text.substr(i + 1);
        try {
            std::size_t used = 0;
            exponent = std::stol(e, &used);
            if (used != e.size()) {
                throw InvalidInput("malformed exponent in '" + text + "'");
            }
        } catch (const std::logic_error&) {
            throw InvalidInput("malformed exponent in '" + text + "'");
        }
    }
    Integer m(mantissa, 10);
    if (negative) {
        m = -m;
    }
    const long shift = exponent - frac_digits;
    if (shift >= 0) {
        return Rational(m * ipow(10, static_cast<unsigned long>(shift)));
    }
    return Rational(m, ipow(10, static_cast<unsigned long>(-shift)));
}

Integer Rational::floor() const {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

Integer Rational::ceil() const {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational canonicalize_rational(const Integer& n, const Integer& d) { return Rational(n, d); }

Integer ipow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational rpow(const Rational& base, long exp) {
    if (exp >= 0) {
        return Rational(ipow(base.num(), static_cast<unsigned long>(exp)),
                        ipow(base.den(), static_cast<unsigned long>(exp)));
    }
    if (base.sign() == 0) {
        throw DomainError("negative power of zero");
    }
    return Rational(ipow(base.den(), static_cast<unsigned long>(-exp)),
                    ipow(base.num(), static_cast<unsigned long>(-exp)));
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

std::size_t bit_length(const Integer& v) {
    return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

std::string to_decimal(const Rational& r, int digits) {
    if (r.sign() == 0) {
        return "0";
    }
    const Rational a = r.abs();
    const auto bits = static_cast<long>(bit_length(a.num())) - static_cast<long>(bit_length(a.den()));
    long e = static_cast<long>(std::floor(static_cast<double>(bits) * 0.30102999566398120));
    Integer m;
    const Integer lo = ipow(10, static_cast<unsigned long>(digits - 1));
    const Integer hi = ipow(10, static_cast<unsigned long>(digits));
    for (int guard = 0; guard < 8; ++guard) {
        const long shift = digits - 1 - e;
        const Rational scaled = shift >= 0 ? a * Rational(ipow(10, static_cast<unsigned long>(shift)))
                                           : a / Rational(ipow(10, static_cast<unsigned long>(-shift)));
        m = (scaled + Rational(1, 2)).floor();
        if (m >= hi) {
            ++e;
        } else if (m < lo) {
            --e;
        } else {
            break;
        }
    }
    std::string s = m.get_str();
    std::string out = r.sign() < 0 ? "-" : "";
    out += s.substr(0, 1);
    if (s.size() > 1) {
        out += "." + s.substr(1);
    }
    out += "e" + std::to_string(e);
    return out;
}

} // namespace cantorlab
