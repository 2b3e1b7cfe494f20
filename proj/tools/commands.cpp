#include "commands.hpp"

#include "cantorlab/calibration.hpp"
#include "cantorlab/cantor_measure.hpp"
#include "cantorlab/continued_fraction.hpp"
#include "cantorlab/errors.hpp"
#include "cantorlab/layer.hpp"
#include "cantorlab/series.hpp"
#include "cantorlab/sparse_number.hpp"

namespace cantorlab::cli {

using report::json;
using report::Table;

namespace {

WindowConfig window_config(const Parsed& p) { return WindowConfig::for_window(p.set, p.window); }

int level_or(int n, int fallback) { return n > 0 ? n : fallback; }

json calibration_envelope() {
    return {{"envelope_lo", report::rational(calibration::envelope_lo)},
            {"envelope_hi", report::rational(calibration::envelope_hi)}};
}

Outcome measure_cmd(const RunConfig& cfg, const Parsed& p) {
    const RatInterval iv = cfg.interval.empty() ? p.window : parse_interval(cfg.interval);
    const auto mu = cantor_measure(p.set, iv);
    Outcome o;
    o.results = {{"set", p.set.str()},
                 {"interval", {{"lo", report::rational(iv.lo)}, {"hi", report::rational(iv.hi)}}},
                 {"measure", report::measure(mu)}};
    o.table = {{"lo", "hi", "mu"}, {{iv.lo, iv.hi, Interval(mu.lo, mu.hi)}}};
    return o;
}

Outcome layer_cmd(const RunConfig& cfg, const Parsed& p) {
    const int n = level_or(cfg.n, 1);
    const auto wc = window_config(p);
    const Layer layer = build_layer(p.set, p.psi, n, wc, cfg.coprime);
    const auto mu = layer_measure(layer);
    const Interval ratio = comparability_ratio(layer, p.psi);
    const bool inside = calibration::envelope_lo <= ratio.lo && ratio.hi <= calibration::envelope_hi;
    Outcome o;
    o.results = {{"level", n},
                 {"t0", wc.t0},
                 {"coprime", cfg.coprime},
                 {"center_count", layer.centers().size()},
                 {"radius", report::interval(layer.radius())},
                 {"disjoint_balls", layer.disjoint()},
                 {"measure", report::measure(mu)},
                 {"comparability_ratio", report::interval(ratio)},
                 {"within_calibration_envelope", inside}};
    o.calibration = calibration_envelope();
    o.table = {{"n", "centers", "mu", "ratio"},
               {{std::to_string(n), std::to_string(layer.centers().size()), Interval(mu.lo, mu.hi), ratio}}};
    return o;
}

json rho_json(const std::optional<Interval>& rho) { return rho ? report::interval(*rho) : json(nullptr); }

Outcome pairwise_cmd(const RunConfig& cfg, const Parsed& p) {
    const int m = cfg.m;
    const int n = level_or(cfg.n, m + 1);
    if (m < 1 || n <= m) {
        throw InvalidInput("pairwise needs 1 <= m < n");
    }
    const auto wc = window_config(p);
    const Layer a = build_layer(p.set, p.psi, m, wc, cfg.coprime);
    const Layer b = build_layer(p.set, p.psi, n, wc, cfg.coprime);
    const auto mu_m = layer_measure(a);
    const auto mu_n = layer_measure(b);
    const auto mu_mn = pairwise_measure(a, b);
    const auto rho = pair_ratio(mu_m, mu_n, mu_mn, cantor_measure(p.set, p.window).value());
    const PairCase pc = classify_pair(p.set, p.psi, m, n);
    Outcome o;
    o.results = {{"m", m},
                 {"n", n},
                 {"case", to_string(pc)},
                 {"below_t0", m <= wc.t0},
                 {"mu_m", report::measure(mu_m)},
                 {"mu_n", report::measure(mu_n)},
                 {"mu_mn", report::measure(mu_mn)},
                 {"rho", rho_json(rho)}};
    std::vector<report::Cell> row{std::to_string(m), std::to_string(n), to_string(pc), Interval(mu_m.lo, mu_m.hi),
                                  Interval(mu_n.lo, mu_n.hi), Interval(mu_mn.lo, mu_mn.hi)};
    row.push_back(rho ? report::Cell(*rho) : report::Cell(std::string()));
    o.table = {{"m", "n", "case", "mu_m", "mu_n", "mu_mn", "rho"}, {row}};
    return o;
}

Outcome quasi_scan_cmd(const RunConfig& cfg, const Parsed& p) {
    const auto wc = window_config(p);
    const auto rep = quasi_independence_scan(p.set, p.psi, wc, cfg.nmax, cfg.m_min);
    Outcome o;
    json rows = json::array();
    o.table.columns = {"m", "n", "case", "mu_m", "mu_n", "mu_mn", "rho"};
    for (const auto& r : rep.rows) {
        rows.push_back({{"m", r.m},
                        {"n", r.n},
                        {"case", to_string(r.pair_case)},
                        {"below_t0", r.below_t0},
                        {"mu_m", report::measure(r.mu_m)},
                        {"mu_n", report::measure(r.mu_n)},
                        {"mu_mn", report::measure(r.mu_mn)},
                        {"rho", rho_json(r.rho)}});
        std::vector<report::Cell> row{std::to_string(r.m), std::to_string(r.n), to_string(r.pair_case),
                                      Interval(r.mu_m.lo, r.mu_m.hi), Interval(r.mu_n.lo, r.mu_n.hi),
                                      Interval(r.mu_mn.lo, r.mu_mn.hi)};
        row.push_back(r.rho ? report::Cell(*r.rho) : report::Cell(std::string()));
        o.table.rows.push_back(std::move(row));
    }
    json skipped = json::array();
    for (const auto& [m, n] : rep.skipped) {
        skipped.push_back({m, n});
    }
    const auto opt = [](const std::optional<Rational>& r) { return r ? report::rational(*r) : json(nullptr); };
    o.results = {{"t0", wc.t0},
                 {"mu_window", report::rational(rep.mu_window)},
                 {"rows", rows},
                 {"skipped", skipped},
                 {"c_all", opt(rep.c_all)},
                 {"c_beyond_t0", opt(rep.c_beyond_t0)},
                 {"within_c_fix", !rep.c_beyond_t0 || *rep.c_beyond_t0 <= calibration::c_fix}};
    o.calibration = {{"c_fix", report::rational(calibration::c_fix)}};
    return o;
}

Outcome series_cmd(const RunConfig& cfg, const Parsed& p) {
    const auto v = series_classify(p.set, p.psi, p.f, cfg.nmax, p.policy);
    Outcome o;
    json terms = json::array();
    json sums = json::array();
    o.table.columns = {"n", "term", "partial_sum"};
    for (std::size_t i = 0; i < v.terms.size(); ++i) {
        terms.push_back(report::interval(v.terms[i]));
        sums.push_back(report::interval(v.partial_sums[i]));
        o.table.rows.push_back({std::to_string(i + 1), v.terms[i], v.partial_sums[i]});
    }
    const bool symbolic_s = p.f.kind == DimensionFunction::Kind::Power && !p.f.s.rational();
    o.results = {{"verdict", to_string(v.verdict)},
                 {"prediction", to_string(v.prediction)},
                 {"rule", v.rule},
                 {"exact", v.exact},
                 {"s_mode", p.f.kind == DimensionFunction::Kind::Table ? "table"
                            : symbolic_s                               ? "symbolic"
                                                                       : "rational"},
                 {"psi", p.psi.str()},
                 {"f", p.f.str()},
                 {"terms", terms},
                 {"partial_sums", sums}};
    return o;
}

Outcome tail_cmd(const RunConfig& cfg, const Parsed& p) {
    const auto t = natural_cover_tail(p.set, p.psi, p.f, cfg.n0, cfg.nmax, p.policy);
    Outcome o;
    json tails = json::array();
    o.table.columns = {"n0", "tail"};
    for (std::size_t k = 0; k < t.tails.size(); ++k) {
        tails.push_back(report::interval(t.tails[k]));
        o.table.rows.push_back({std::to_string(t.n0 + static_cast<int>(k)), t.tails[k]});
    }
    o.results = {{"n0", t.n0}, {"nmax", t.n_max}, {"tails", tails}, {"exact", t.exact},
                 {"verdict", to_string(t.verdict)}};
    return o;
}

Outcome bc_ratio_cmd(const RunConfig& cfg, const Parsed& p) {
    const auto r = borel_cantelli_ratio(p.set, p.psi, window_config(p), cfg.q);
    Outcome o;
    o.results = {{"Q", cfg.q},
                 {"ratio", report::interval(r.ratio)},
                 {"sum_mu", report::interval(r.sum_mu)},
                 {"sum_pairs", report::interval(r.sum_pairs)},
                 {"union_mu", report::interval(r.union_mu)},
                 {"exact", r.exact},
                 {"ratio_below_union", r.ratio.hi <= r.union_mu.lo}};
    o.table = {{"Q", "ratio", "union_mu"}, {{std::to_string(cfg.q), r.ratio, r.union_mu}}};
    return o;
}

Outcome dim_estimate_cmd(const RunConfig& cfg, const Parsed& p) {
    const RealSpec t = parse_real(cfg.tau.empty() ? "2" : cfg.tau, p.set);
    const auto* tau = std::get_if<Rational>(&t);
    if (!tau) {
        throw InvalidInput("dim-estimate needs a rational tau");
    }
    const int n = level_or(cfg.n, 2);
    const auto e = box_dimension_estimate(p.set, *tau, n, cfg.coprime);
    const Interval target = enclose_at(LogRatio{Rational(1) / *tau, Integer(p.set.size()), Integer(p.set.base())}, 96);
    Outcome o;
    o.results = {{"tau", report::rational(*tau)},
                 {"n", n},
                 {"level", e.level},
                 {"count", report::integer(e.count)},
                 {"estimate", report::interval(e.estimate)},
                 {"gamma_over_tau", report::interval(target)},
                 {"coprime", cfg.coprime}};
    o.table = {{"tau", "n", "level", "count", "estimate"},
               {{*tau, std::to_string(n), std::to_string(e.level), e.count.get_str(), e.estimate}}};
    return o;
}

json truncations_json(const SparseDigitNumber& x, Table& table) {
    json rows = json::array();
    table.columns = {"s", "tau_s", "p_s", "q_s"};
    for (int s = 1; s <= x.terms(); ++s) {
        const long e = x.exponents()[static_cast<std::size_t>(s - 1)];
        rows.push_back({{"s", s}, {"tau_s", e}, {"p", report::integer(x.p(s))}, {"q", report::integer(x.q(s))}});
        table.rows.push_back({std::to_string(s), std::to_string(e), x.p(s).get_str(), x.q(s).get_str()});
    }
    return rows;
}

Outcome xi_build_cmd(const RunConfig& cfg, const Parsed& p) {
    const auto x = build_xi(cfg, p);
    Outcome o;
    const auto mem = membership(x, p.set, static_cast<int>(x.exponents().back()));
    o.results = {{"rule", x.rule().str()},
                 {"base", x.base()},
                 {"coefficient", x.coefficient()},
                 {"exponents", x.exponents()},
                 {"lookahead_exponent", x.lookahead()},
                 {"truncations", truncations_json(x, o.table)},
                 {"enclosure", report::interval(x.enclosure())},
                 {"membership", {{"verdict", to_string(mem.verdict)}, {"depth", mem.depth}}}};
    return o;
}

json estimate_json(const ExponentEstimate& e, bool lower_bound_only) {
    return {{"estimate", report::interval(e.estimate)},
            {"witness", {{"n", e.witness}, {"q_n", report::integer(e.witness_q)},
                         {"q_next", report::integer(e.witness_q_next)}}},
            {"window", e.window},
            {"min_denominator", report::integer(e.min_denominator)},
            {"label", lower_bound_only ? "finite-window lower bound" : "finite-window estimate"}};
}

Outcome xi_verify_cmd(const RunConfig& cfg, const Parsed& p) {
    const auto x = build_xi(cfg, p);
    std::optional<RealSpec> ref;
    if (cfg.rule == "factorial" && !cfg.tau.empty()) {
        ref = parse_real(cfg.tau, p.set);
    }
    const auto rep = truncation_report(x, ref, p.policy);
    const auto cf = sparse_continued_fraction(x, 1 << 20, 0, p.policy);
    const auto legendre = legendre_rows(x, cf);
    const auto mem = membership(x, p.set, static_cast<int>(x.exponents().back()));
    const auto est = irrationality_exponent_estimate(cf, Rational::parse(cfg.min_q).floor());

    Outcome o;
    o.table.columns = {"s", "qs", "eeg", "derived", "legendre", "convergent_index"};
    json checks = json::array();
    bool all_pass = true;
    for (const auto& r : rep.rows) {
        all_pass = all_pass && r.pass();
        checks.push_back({{"s", r.s},
                          {"qs", {{"lower", r.qs_lower}, {"upper", r.qs_upper}}},
                          {"eeg", {{"lower", r.eeg_lower}, {"upper", r.eeg_upper}}},
                          {"derived", {{"lower", r.derived_lower}, {"upper", r.derived_upper}}},
                          {"gap", report::interval(r.gap)},
                          {"pass", r.pass()}});
    }
    json leg = json::array();
    bool all_convergents = true;
    for (const auto& l : legendre) {
        const bool yes = l.verdict == LegendreVerdict::Yes;
        all_convergents = all_convergents && yes && l.convergent_index.has_value();
        leg.push_back({{"s", l.s},
                       {"verdict", to_string(l.verdict)},
                       {"convergent_index", l.convergent_index ? json(*l.convergent_index) : json(nullptr)}});
        const auto& row = l.s <= static_cast<int>(rep.rows.size()) ? rep.rows[static_cast<std::size_t>(l.s - 1)]
                                                                    : TruncationCheck{};
        const bool has = l.s <= static_cast<int>(rep.rows.size());
        o.table.rows.push_back({std::to_string(l.s), has ? std::string(row.qs_lower && row.qs_upper ? "pass" : "fail") : "",
                                has ? std::string(row.eeg_lower && row.eeg_upper ? "pass" : "fail") : "",
                                has ? std::string(row.derived_lower && row.derived_upper ? "pass" : "fail") : "",
                                to_string(l.verdict),
                                l.convergent_index ? std::to_string(*l.convergent_index) : std::string()});
    }
    json next = json::array();
    if (x.rule().kind == ExponentRule::Kind::Power) {
        for (int s = 1; s < x.terms(); ++s) {
            const auto c = next_convergent_check(x, cf, s, p.policy);
            next.push_back({{"s", s}, {"found", c.found}, {"q_star", c.found ? report::integer(c.q_star) : json(nullptr)},
                            {"lower", c.lower}, {"upper", c.upper}});
        }
    }
    const bool factorial = x.rule().kind == ExponentRule::Kind::Factorial;
    o.results = {{"rule", x.rule().str()},
                 {"exponents", x.exponents()},
                 {"reference_tau", describe(rep.reference_tau)},
                 {"truncation_checks", checks},
                 {"all_checks_pass", all_pass},
                 {"s_min", rep.s_min ? json(*rep.s_min) : json(nullptr)},
                 {"liouville_like", rep.liouville_like},
                 {"legendre", leg},
                 {"all_truncations_convergents", all_convergents},
                 {"next_convergent", next},
                 {"continued_fraction", {{"certified_depth", cf.certified_depth}, {"partial", cf.partial}}},
                 {"exponent", estimate_json(est, factorial)},
                 {"membership", {{"verdict", to_string(mem.verdict)}, {"depth", mem.depth}}}};
    return o;
}

// CF of --x, or of the sparse number when --x is empty or "xi".
ContinuedFraction cf_of_x(const RunConfig& cfg, const Parsed& p, int depth) {
    if (cfg.x.empty() || cfg.x == "xi") {
        return sparse_continued_fraction(build_xi(cfg, p), 1 << 20, 0, p.policy);
    }
    const RealSpec spec = parse_real(cfg.x, p.set);
    if (const auto* r = std::get_if<Rational>(&spec)) {
        return continued_fraction_expand(*r, depth);
    }
    const PrecisionPolicy policy = p.policy;
    CfSession session([spec, policy](int step) { return enclose_at(spec, policy.bits_at(step)); }, policy.max_steps);
    return session.expand(depth);
}

json cf_json(const ContinuedFraction& cf, Table& table) {
    json q = json::array();
    json conv = json::array();
    table.columns = {"n", "a_n", "p_n", "q_n"};
    for (std::size_t i = 0; i < cf.size(); ++i) {
        q.push_back(report::integer(cf.quotients[i]));
        conv.push_back({{"p", report::integer(cf.p[i])}, {"q", report::integer(cf.q[i])}});
        table.rows.push_back({std::to_string(i + 1), cf.quotients[i].get_str(), cf.p[i].get_str(), cf.q[i].get_str()});
    }
    return {{"quotients", q},
            {"convergents", conv},
            {"certified_depth", cf.certified_depth},
            {"partial", cf.partial},
            {"terminated", cf.terminated}};
}

Outcome cf_cmd(const RunConfig& cfg, const Parsed& p) {
    if (cfg.depth < 1) {
        throw InvalidInput("--depth must be >= 1");
    }
    const auto cf = cf_of_x(cfg, p, cfg.depth);
    Outcome o;
    o.results = cf_json(cf, o.table);
    o.results["x"] = cfg.x.empty() ? "xi" : cfg.x;
    return o;
}

Outcome exponent_cmd(const RunConfig& cfg, const Parsed& p) {
    const auto cf = cf_of_x(cfg, p, cfg.depth);
    const auto est = irrationality_exponent_estimate(cf, Rational::parse(cfg.min_q).floor());
    const bool xi = cfg.x.empty() || cfg.x == "xi";
    Outcome o;
    o.results = estimate_json(est, xi && cfg.rule == "factorial");
    o.results["x"] = xi ? "xi" : cfg.x;
    o.results["certified_depth"] = cf.certified_depth;
    if (xi && cfg.rule == "power") {
        const RealSpec t = parse_real(cfg.tau.empty() ? "3" : cfg.tau, p.set);
        if (const auto* tau = std::get_if<Rational>(&t)) {
            o.results["exact_order_threshold_met"] = exact_order_threshold(*tau);
            o.results["band"] = {{"lo", report::rational(*tau)}, {"hi", report::rational(order_band_upper(*tau))}};
        }
    }
    o.table = {{"witness_n", "q_n", "q_next", "estimate"},
               {{std::to_string(est.witness), est.witness_q.get_str(), est.witness_q_next.get_str(), est.estimate}}};
    return o;
}

json prefix_json(const CfPrefixInterval& iv) {
    return {{"lo", report::rational(iv.lo)}, {"hi", report::rational(iv.hi)}, {"lo_closed", iv.lo_closed},
            {"hi_closed", iv.hi_closed},
            {"text", std::string(iv.lo_closed ? "[" : "(") + iv.lo.str() + ", " + iv.hi.str() + (iv.hi_closed ? "]" : ")")}};
}

Outcome cf_interval_cmd(const RunConfig& cfg, const Parsed& p) {
    const int depth = cfg.depth;
    Outcome o;
    o.table.columns = {"quotients", "lo", "hi", "lo_closed", "hi_closed", "disjoint"};
    auto add_row = [&](const std::vector<Integer>& qs, const CfPrefixInterval& iv, bool disjoint) {
        std::string label;
        for (std::size_t i = 0; i < qs.size(); ++i) {
            label += (i ? " " : "") + qs[i].get_str();
        }
        o.table.rows.push_back({label, iv.lo, iv.hi, std::string(iv.lo_closed ? "true" : "false"),
                                std::string(iv.hi_closed ? "true" : "false"), std::string(disjoint ? "true" : "false")});
    };
    if (cfg.sweep > 0) {
        json rows = json::array();
        for (int n = 1; n <= cfg.sweep; ++n) {
            const std::vector<Integer> qs{Integer(n), Integer(n)};
            const auto iv = cf_prefix_interval(qs);
            const bool d = disjoint_from(iv, p.set, depth);
            rows.push_back({{"n", n}, {"interval", prefix_json(iv)}, {"disjoint", d}});
            add_row(qs, iv, d);
        }
        o.results = {{"depth", depth}, {"sweep", rows},
                     {"note", "finite-depth verdicts for prefixes [n, n]"}};
        return o;
    }
    const auto qs = parse_quotients(cfg.quotients);
    const auto iv = cf_prefix_interval(qs);
    const bool d = disjoint_from(iv, p.set, depth);
    add_row(qs, iv, d);
    o.results = {{"quotients", [&] {
                      json a = json::array();
                      for (const auto& q : qs) {
                          a.push_back(report::integer(q));
                      }
                      return a;
                  }()},
                 {"interval", prefix_json(iv)},
                 {"depth", depth},
                 {"disjoint", d}};
    if (!cfg.x.empty()) {
        const auto cf = cf_of_x(cfg, p, static_cast<int>(qs.size()));
        const bool has_prefix = cf.size() >= qs.size() && std::equal(qs.begin(), qs.end(), cf.quotients.begin());
        o.results["x"] = cfg.x;
        o.results["x_has_prefix"] = has_prefix;
        o.results["verdict"] = has_prefix && d ? "not in K" : "undetermined";
    }
    return o;
}

Outcome full_cover_cmd(const RunConfig& cfg, const Parsed& p) {
    Outcome o;
    json rows = json::array();
    bool all = true;
    o.table.columns = {"n", "covered"};
    for (int n = 1; n <= cfg.nmax; ++n) {
        const bool ok = full_cover_check(p.set, n, p.window);
        all = all && ok;
        rows.push_back({{"n", n}, {"covered", ok}});
        o.table.rows.push_back({std::to_string(n), std::string(ok ? "true" : "false")});
    }
    o.results = {{"levels", rows}, {"all_covered", all}};
    return o;
}

} // namespace

const std::vector<CommandInfo>& commands() {
    static const std::vector<CommandInfo> table{
        {"measure", "exact Cantor measure of --interval (default: --window)", measure_cmd},
        {"layer", "layer A*_n: centers, measure, comparability ratio", layer_cmd},
        {"pairwise", "overlap measure and ratio for levels --m < --n", pairwise_cmd},
        {"quasi-scan", "quasi-independence scan over m_min <= m < n <= nmax", quasi_scan_cmd},
        {"series", "partial sums and convergence verdict of the dimension series", series_cmd},
        {"tail", "natural-cover tail bounds T(n0..nmax)", tail_cmd},
        {"bc-ratio", "second-moment ratio for the first Q layers", bc_ratio_cmd},
        {"dim-estimate", "single-layer box-counting estimate for psi = r^-tau", dim_estimate_cmd},
        {"xi-build", "sparse-digit number: exponents and exact truncations", xi_build_cmd},
        {"xi-verify", "truncation inequalities, Legendre certificates, exponent estimate", xi_verify_cmd},
        {"cf", "certified continued fraction of --x (default: the sparse number)", cf_cmd},
        {"exponent", "finite-window approximation exponent of --x", exponent_cmd},
        {"cf-interval", "interval of a continued-fraction prefix and its disjointness from the set", cf_interval_cmd},
        {"full-cover", "full-cover identity for levels 1..nmax", full_cover_cmd},
    };
    return table;
}

} // namespace cantorlab::cli
