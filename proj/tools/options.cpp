#include "options.hpp"

#include "cantorlab/errors.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace cantorlab::cli {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) {
        return "";
    }
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        parts.push_back(trim(item));
    }
    return parts;
}

Rational parse_rational(const std::string& text) {
    try {
        return Rational::parse(trim(text));
    } catch (const InvalidInput&) {
        throw InvalidInput("not a real constant: '" + text + "'");
    }
}

} // namespace

nlohmann::json RunConfig::echo() const {
    return {{"set", set},         {"psi", psi},         {"truncate", truncate}, {"f", f},
            {"f_monotone", f_monotone}, {"window", window}, {"interval", interval}, {"nmax", nmax},
            {"n", n},             {"m", m},             {"m_min", m_min},       {"n0", n0},
            {"Q", q},             {"S", s},             {"depth", depth},       {"coprime", coprime},
            {"x", x},             {"tau", tau},         {"lambda", lambda},     {"rule", rule},
            {"coeff", coeff},     {"quotients", quotients}, {"sweep", sweep},   {"min_q", min_q},
            {"output", output},   {"workers", workers}, {"precision_budget", precision_budget},
            {"decimal_digits", 17}};
}

RealSpec parse_real(const std::string& raw, const MissingDigitSet& set) {
    const std::string text = trim(raw);
    static const std::regex times(R"(^(.+)\*gamma$)");
    static const std::regex over(R"(^gamma/(.+)$)");
    static const std::regex under(R"(^(.+)/gamma$)");
    static const std::regex root(R"(^sqrt\((\d+)\)$)");
    const Integer m(set.size());
    const Integer b(set.base());
    std::smatch mt;
    if (text == "gamma") {
        return LogRatio{Rational(1), m, b};
    }
    if (std::regex_match(text, mt, times)) {
        return LogRatio{parse_rational(mt[1]), m, b};
    }
    if (std::regex_match(text, mt, over)) {
        return LogRatio{Rational(1) / parse_rational(mt[1]), m, b};
    }
    if (std::regex_match(text, mt, under)) {
        return LogRatio{parse_rational(mt[1]), b, m};
    }
    if (text == "golden") {
        return QuadraticSurd{Rational(Integer(-1), Integer(2)), Rational(Integer(1), Integer(2)), Integer(5)};
    }
    if (text == "sqrt5") {
        return QuadraticSurd{Rational(0), Rational(1), Integer(5)};
    }
    if (std::regex_match(text, mt, root)) {
        return QuadraticSurd{Rational(0), Rational(1), Integer(mt[1].str())};
    }
    return parse_rational(text);
}

Scalar parse_scalar(const std::string& raw, const MissingDigitSet& set) {
    const RealSpec spec = parse_real(raw, set);
    if (const auto* r = std::get_if<Rational>(&spec)) {
        return Scalar(*r);
    }
    if (const auto* l = std::get_if<LogRatio>(&spec)) {
        const Integer m(set.size());
        const Integer b(set.base());
        if (l->num == m && l->den == b) {
            return Scalar::gamma(set.size(), set.base(), l->coeff, 1);
        }
        if (l->num == b && l->den == m) {
            return Scalar::gamma(set.size(), set.base(), l->coeff, -1);
        }
    }
    return Scalar::real(spec);
}

RatInterval parse_interval(const std::string& text) {
    std::string body = text;
    if (body.size() >= 2 && body.front() == '[' && body.back() == ']') {
        body = body.substr(1, body.size() - 2);
    }
    const auto parts = split(body, ',');
    if (parts.size() != 2) {
        throw InvalidInput("interval must be 'lo,hi': '" + text + "'");
    }
    return RatInterval(parse_rational(parts[0]), parse_rational(parts[1]));
}

std::vector<Integer> parse_quotients(const std::string& text) {
    std::vector<Integer> out;
    for (const auto& p : split(text, ',')) {
        if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos) {
            throw InvalidInput("quotients must be positive integers: '" + text + "'");
        }
        out.emplace_back(p);
    }
    if (out.empty()) {
        throw InvalidInput("quotient list is empty");
    }
    return out;
}

std::map<int, Rational> parse_table(const std::string& text) {
    std::map<int, Rational> out;
    for (const auto& item : split(text, ';')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw InvalidInput("table entries must be 'n=value': '" + item + "'");
        }
        int n = 0;
        try {
            n = std::stoi(item.substr(0, eq));
        } catch (const std::exception&) {
            throw InvalidInput("bad table level: '" + item + "'");
        }
        out[n] = parse_rational(item.substr(eq + 1));
    }
    return out;
}

namespace {

ApproxFunction parse_psi(const RunConfig& cfg, const MissingDigitSet& set) {
    const std::string& t = cfg.psi;
    ApproxFunction psi;
    if (t.rfind("pow:", 0) == 0) {
        psi = ApproxFunction::power(parse_scalar(t.substr(4), set));
    } else if (t.rfind("powlog:", 0) == 0) {
        const auto parts = split(t.substr(7), ',');
        if (parts.size() != 2) {
            throw InvalidInput("powlog needs 'powlog:alpha,beta'");
        }
        psi = ApproxFunction::power_log(parse_scalar(parts[0], set), parse_scalar(parts[1], set));
    } else if (t.rfind("table:", 0) == 0) {
        psi = ApproxFunction::from_table(parse_table(t.substr(6)));
    } else {
        throw InvalidInput("psi must be pow:, powlog: or table:, got '" + t + "'");
    }
    if (!cfg.truncate.empty()) {
        psi = truncate_psi(psi, parse_rational(cfg.truncate));
    }
    return psi;
}

DimensionFunction parse_f(const RunConfig& cfg, const MissingDigitSet& set) {
    const std::string& t = cfg.f;
    if (t.rfind("pow:", 0) == 0) {
        return DimensionFunction::power(parse_scalar(t.substr(4), set));
    }
    if (t.rfind("table:", 0) == 0) {
        return DimensionFunction::from_table(parse_table(t.substr(6)), cfg.f_monotone);
    }
    throw InvalidInput("f must be pow: or table:, got '" + t + "'");
}

} // namespace

Parsed parse_all(const RunConfig& cfg) {
    if (cfg.output != "json" && cfg.output != "csv") {
        throw InvalidInput("--output must be json or csv");
    }
    if (cfg.workers < 1) {
        throw InvalidInput("--workers must be >= 1");
    }
    if (cfg.precision_budget < 1 || cfg.precision_budget > 24) {
        throw InvalidInput("--precision-budget must be in 1..24");
    }
    if (cfg.rule != "power" && cfg.rule != "factorial") {
        throw InvalidInput("--rule must be power or factorial");
    }
    MissingDigitSet set = MissingDigitSet::parse(cfg.set);
    Parsed p{set, parse_interval(cfg.window), parse_psi(cfg, set), parse_f(cfg, set), PrecisionPolicy{}};
    p.policy.max_steps = cfg.precision_budget;
    if (!cfg.interval.empty()) {
        parse_interval(cfg.interval);
    }
    if (!cfg.x.empty() && cfg.x != "xi") {
        parse_real(cfg.x, set);
    }
    if (!cfg.tau.empty()) {
        parse_real(cfg.tau, set);
    }
    parse_real(cfg.lambda, set);
    parse_quotients(cfg.quotients);
    parse_rational(cfg.min_q);
    return p;
}

std::vector<std::string> config_file_args(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot read config file '" + path + "'");
    }
    std::vector<std::string> args;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line.substr(0, line.find('#')));
        if (t.empty()) {
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw InvalidInput(path + ":" + std::to_string(lineno) + ": expected key=value");
        }
        const std::string key = trim(t.substr(0, eq));
        if (key == "config") {
            throw InvalidInput(path + ":" + std::to_string(lineno) + ": nested config files are not supported");
        }
        args.push_back("--" + key + "=" + trim(t.substr(eq + 1)));
    }
    return args;
}

SparseDigitNumber build_xi(const RunConfig& cfg, const Parsed& p) {
    if (cfg.rule == "factorial") {
        return build_sparse_number(p.set.base(), cfg.coeff, ExponentRule::factorial(), cfg.s, p.policy);
    }
    const RealSpec tau = parse_real(cfg.tau.empty() ? "3" : cfg.tau, p.set);
    const RealSpec lambda = parse_real(cfg.lambda, p.set);
    return build_sparse_number(p.set.base(), cfg.coeff, ExponentRule::power(tau, lambda), cfg.s, p.policy);
}

} // namespace cantorlab::cli
