#include "cantorlab/layer.hpp"

#include "cantorlab/errors.hpp"
#include "cantorlab/parallel.hpp"

#include <algorithm>

namespace cantorlab {

WindowConfig WindowConfig::for_window(const MissingDigitSet& set, const RatInterval& window) {
    if (window.length().sign() <= 0) {
        throw InvalidInput("window must have positive length");
    }
    WindowConfig cfg;
    cfg.window = window;
    const Rational r = cfg.radius();
    Rational scale(1);
    int t = 0;
    while (scale >= r) {
        scale /= Rational(set.base());
        ++t;
    }
    cfg.t0 = t;
    return cfg;
}

Layer::Layer(MissingDigitSet set, int n, WindowConfig cfg, bool coprime, std::vector<std::uint64_t> centers,
             Interval radius)
    : set_(std::move(set)), n_(n), cfg_(std::move(cfg)), coprime_(coprime), centers_(std::move(centers)),
      radius_(std::move(radius)) {
    const Rational half_gap(Integer(1), 2 * ipow(set_.base(), static_cast<unsigned long>(n_)));
    disjoint_ = radius_.hi < half_gap;
}

Rational Layer::center(std::size_t i) const {
    return Rational(Integer(static_cast<unsigned long>(centers_[i])), ipow(set_.base(), static_cast<unsigned long>(n_)));
}

IntervalUnion Layer::union_at(const Rational& r) const {
    const RatInterval& w = cfg_.window;
    std::vector<RatInterval> pieces;
    pieces.reserve(centers_.size());
    for (std::size_t i = 0; i < centers_.size(); ++i) {
        const Rational c = center(i);
        const Rational lo = std::max(c - r, w.lo);
        const Rational hi = std::min(c + r, w.hi);
        if (lo <= hi) {
            pieces.emplace_back(lo, hi);
        }
    }
    return merge_intervals(std::move(pieces));
}

Layer build_layer(const MissingDigitSet& set, const ApproxFunction& psi, int n, const WindowConfig& cfg, bool coprime,
                  std::size_t budget) {
    const Interval radius = psi.at_level(set, n);
    if (radius.lo.sign() <= 0) {
        throw InvalidInput("psi must be positive on the grid");
    }
    std::vector<std::uint64_t> all = enumerate_centers(set, n, coprime, budget);
    const Rational q(ipow(set.base(), static_cast<unsigned long>(n)));
    // keep p with |p/q - window| <= radius
    const Rational lo = (cfg.window.lo - radius.hi) * q;
    const Rational hi = (cfg.window.hi + radius.hi) * q;
    std::vector<std::uint64_t> kept;
    for (std::uint64_t p : all) {
        const Rational pr(Integer(static_cast<unsigned long>(p)));
        if (lo <= pr && pr <= hi) {
            kept.push_back(p);
        }
    }
    return Layer(set, n, cfg, coprime, std::move(kept), radius);
}

CantorMeasureValue layer_measure(const Layer& layer) {
    const auto& r = layer.radius();
    if (r.exact()) {
        return CantorMeasureValue::of(union_measure(layer.set(), layer.union_at(r.lo)));
    }
    return {union_measure(layer.set(), layer.union_at(r.lo)), union_measure(layer.set(), layer.union_at(r.hi)), false};
}

CantorMeasureValue pairwise_measure(const Layer& a, const Layer& b) {
    if (!(a.set() == b.set()) || !(a.config().window == b.config().window)) {
        throw InvalidInput("pairwise_measure needs layers over the same set and window");
    }
    const auto& ra = a.radius();
    const auto& rb = b.radius();
    const Rational lo = union_measure(a.set(), intersect(a.union_at(ra.lo), b.union_at(rb.lo)));
    if (ra.exact() && rb.exact()) {
        return CantorMeasureValue::of(lo);
    }
    const Rational hi = union_measure(a.set(), intersect(a.union_at(ra.hi), b.union_at(rb.hi)));
    return {lo, hi, false};
}

Interval comparability_ratio(const Layer& layer, const ApproxFunction& psi, int bits) {
    const MissingDigitSet& set = layer.set();
    const int n = layer.level();
    const Scalar gamma = Scalar::gamma(set.size(), set.base());
    Interval scale;
    if (auto lg = psi.log_base_at_level(n)) {
        scale = base_power(set.base(), gamma * (*lg + Scalar(Rational(n))), bits);
    } else {
        const Interval v = psi.at_level(set, n, bits) * Interval::point(Rational(ipow(set.base(), n)));
        scale = pow(v, gamma.enclose(bits), bits);
    }
    const CantorMeasureValue mu = layer_measure(layer);
    const Rational mb = cantor_measure(set, layer.config().window).value();
    if (mb.sign() == 0) {
        throw DomainError("window carries no mass");
    }
    return Interval(mu.lo, mu.hi) / (scale * Interval::point(mb));
}

std::string to_string(PairCase c) {
    switch (c) {
    case PairCase::Disjoint:
        return "i";
    case PairCase::Overlapping:
        return "ii";
    case PairCase::Undetermined:
        return "undetermined";
    }
    return "undetermined";
}

PairCase classify_pair(const MissingDigitSet& set, const ApproxFunction& psi, int m, int n) {
    const Rational gap(Integer(1), ipow(set.base(), static_cast<unsigned long>(n)));
    for (int bits = 128; bits <= 4096; bits *= 2) {
        const Interval twice = Interval::point(Rational(2)) * psi.at_level(set, m, bits);
        if (gap >= twice.hi) {
            return PairCase::Disjoint;
        }
        if (gap < twice.lo) {
            return PairCase::Overlapping;
        }
    }
    return PairCase::Undetermined;
}

std::optional<Interval> pair_ratio(const CantorMeasureValue& mm, const CantorMeasureValue& mn,
                               const CantorMeasureValue& mmn, const Rational& mu_b) {
    if (mm.lo.sign() == 0 || mn.lo.sign() == 0) {
        return std::nullopt;
    }
    return Interval(mmn.lo * mu_b / (mm.hi * mn.hi), mmn.hi * mu_b / (mm.lo * mn.lo));
}

namespace {

struct ScanInputs {
    std::vector<Layer> layers;
    std::vector<CantorMeasureValue> measures;
    std::vector<std::pair<int, int>> pairs;
};

void check_scan_args(int n_max, int m_min) {
    if (m_min < 1 || n_max <= m_min) {
        throw InvalidInput("scan needs 1 <= m_min < n_max");
    }
}

QuasiIndependenceReport assemble(const MissingDigitSet& set, const WindowConfig& cfg, std::vector<PairRow> rows) {
    QuasiIndependenceReport rep;
    rep.mu_window = cantor_measure(set, cfg.window).value();
    for (auto& row : rows) {
        if (!row.rho) {
            rep.skipped.emplace_back(row.m, row.n);
        } else {
            const Rational& hi = row.rho->hi;
            if (!rep.c_all || hi > *rep.c_all) {
                rep.c_all = hi;
            }
            if (!row.below_t0 && (!rep.c_beyond_t0 || hi > *rep.c_beyond_t0)) {
                rep.c_beyond_t0 = hi;
            }
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace

QuasiIndependenceReport quasi_independence_scan_serial(const MissingDigitSet& set, const ApproxFunction& psi,
                                                       const WindowConfig& cfg, int n_max, int m_min) {
    check_scan_args(n_max, m_min);
    const Rational mu_b = cantor_measure(set, cfg.window).value();
    std::vector<Layer> layers;
    std::vector<CantorMeasureValue> mus;
    for (int k = m_min; k <= n_max; ++k) {
        layers.push_back(build_layer(set, psi, k, cfg, true));
        mus.push_back(layer_measure(layers.back()));
    }
    std::vector<PairRow> rows;
    for (int m = m_min; m <= n_max; ++m) {
        for (int n = m + 1; n <= n_max; ++n) {
            const auto i = static_cast<std::size_t>(m - m_min);
            const auto j = static_cast<std::size_t>(n - m_min);
            PairRow row;
            row.m = m;
            row.n = n;
            row.pair_case = classify_pair(set, psi, m, n);
            row.below_t0 = m <= cfg.t0;
            row.mu_m = mus[i];
            row.mu_n = mus[j];
            row.mu_mn = pairwise_measure(layers[i], layers[j]);
            row.rho = pair_ratio(row.mu_m, row.mu_n, row.mu_mn, mu_b);
            rows.push_back(std::move(row));
        }
    }
    return assemble(set, cfg, std::move(rows));
}

QuasiIndependenceReport quasi_independence_scan(const MissingDigitSet& set, const ApproxFunction& psi,
                                                const WindowConfig& cfg, int n_max, int m_min) {
    check_scan_args(n_max, m_min);
    const Rational mu_b = cantor_measure(set, cfg.window).value();
    const int levels = n_max - m_min + 1;
    std::vector<std::optional<Layer>> layers(static_cast<std::size_t>(levels));
    std::vector<CantorMeasureValue> mus(static_cast<std::size_t>(levels));
    parallel_for(levels, [&](long k) {
        layers[static_cast<std::size_t>(k)].emplace(build_layer(set, psi, m_min + static_cast<int>(k), cfg, true));
        mus[static_cast<std::size_t>(k)] = layer_measure(*layers[static_cast<std::size_t>(k)]);
    });
    std::vector<std::pair<int, int>> pairs;
    for (int m = m_min; m <= n_max; ++m) {
        for (int n = m + 1; n <= n_max; ++n) {
            pairs.emplace_back(m, n);
        }
    }
    std::vector<PairRow> rows(pairs.size());
    const auto count = static_cast<long>(pairs.size());
    parallel_for(count, [&](long idx) {
        const auto [m, n] = pairs[static_cast<std::size_t>(idx)];
        const auto i = static_cast<std::size_t>(m - m_min);
        const auto j = static_cast<std::size_t>(n - m_min);
        PairRow& row = rows[static_cast<std::size_t>(idx)];
        row.m = m;
        row.n = n;
        row.pair_case = classify_pair(set, psi, m, n);
        row.below_t0 = m <= cfg.t0;
        row.mu_m = mus[i];
        row.mu_n = mus[j];
        row.mu_mn = pairwise_measure(*layers[i], *layers[j]);
        row.rho = pair_ratio(row.mu_m, row.mu_n, row.mu_mn, mu_b);
    });
    return assemble(set, cfg, std::move(rows));
}

BorelCantelliResult borel_cantelli_ratio(const MissingDigitSet& set, const ApproxFunction& psi,
                                         const WindowConfig& cfg, int q) {
    if (q < 1) {
        throw InvalidInput("Borel-Cantelli ratio needs Q >= 1");
    }
    std::vector<std::optional<Layer>> layers(static_cast<std::size_t>(q));
    parallel_for(q, [&](long s) {
        layers[static_cast<std::size_t>(s)].emplace(build_layer(set, psi, static_cast<int>(s) + 1, cfg, true));
    });
    BorelCantelliResult res;
    Interval sum = Interval::point(Rational(0));
    Interval pairs = Interval::point(Rational(0));
    for (int s = 0; s < q; ++s) {
        const auto mu = layer_measure(*layers[static_cast<std::size_t>(s)]);
        res.exact = res.exact && mu.exact;
        sum = sum + Interval(mu.lo, mu.hi);
        pairs = pairs + Interval(mu.lo, mu.hi);
    }
    std::vector<Interval> cross(static_cast<std::size_t>(q * q), Interval::point(Rational(0)));
    parallel_for(q, [&](long s) {
        for (long t = s + 1; t < q; ++t) {
            const auto mu = pairwise_measure(*layers[static_cast<std::size_t>(s)], *layers[static_cast<std::size_t>(t)]);
            cross[static_cast<std::size_t>(s * q + t)] = Interval(mu.lo, mu.hi);
        }
    });
    for (const auto& c : cross) {
        pairs = pairs + Interval::point(Rational(2)) * c;
        res.exact = res.exact && c.exact();
    }
    if (pairs.hi.sign() == 0) {
        throw InvalidInput("Borel-Cantelli ratio undefined: every layer is null");
    }
    // union measure from the merged union of all layers
    auto union_at = [&](bool upper) {
        std::vector<RatInterval> all;
        for (const auto& l : layers) {
            auto u = l->union_at(upper ? l->radius().hi : l->radius().lo);
            all.insert(all.end(), u.begin(), u.end());
        }
        return union_measure(set, merge_intervals(std::move(all)));
    };
    res.union_mu = Interval(union_at(false), union_at(true));
    res.sum_mu = sum;
    res.sum_pairs = pairs;
    if (pairs.lo.sign() == 0) {
        res.ratio = Interval(Rational(0), sum.hi * sum.hi / pairs.hi);  // only reachable with enclosures
        res.exact = false;
    } else {
        res.ratio = Interval(sum.lo * sum.lo / pairs.hi, sum.hi * sum.hi / pairs.lo);
    }
    return res;
}

namespace {

struct BoxSetup {
    int level;
    std::vector<std::uint64_t> centers;
    std::uint64_t scale;      // b^(level - n)
    std::uint64_t reach_lo;   // cells k with k >= c' - reach_lo
    std::uint64_t reach_hi;   // and k <= c' + reach_hi
    std::uint64_t cells;      // b^level
};

BoxSetup box_setup(const MissingDigitSet& set, const Rational& tau, int n, bool coprime, std::size_t budget) {
    if (tau < Rational(1)) {
        throw InvalidInput("box dimension estimate needs tau >= 1");
    }
    if (n < 1) {
        throw InvalidInput("level must be >= 1");
    }
    const Rational tn = tau * Rational(n);
    const int level = static_cast<int>(tn.ceil().get_si());
    checked_level_denominator(set, level);
    BoxSetup s;
    s.level = level;
    s.centers = enumerate_centers(set, n, coprime, budget);
    s.scale = ipow(set.base(), static_cast<unsigned long>(level - n)).get_ui();
    s.cells = ipow(set.base(), static_cast<unsigned long>(level)).get_ui();
    // Scaled radius r' = b^(level - tau n) in [1, b). The closed ball
    // [c' - r', c' + r'] meets the closed cell [k, k + 1] iff
    // c' - 1 - floor(r') <= k <= c' + floor(r').
    std::optional<Integer> fl;
    for (int bits = 128; bits <= (1 << 16); bits *= 2) {
        const Interval r = rational_power(Rational(set.base()), Rational(level) - tn, bits);
        if (r.lo.floor() == r.hi.floor()) {
            fl = r.lo.floor();
            break;
        }
    }
    if (!fl) {
        throw UndecidableError("scaled radius floor undecided");
    }
    s.reach_lo = fl->get_ui() + 1;
    s.reach_hi = fl->get_ui();
    return s;
}

bool cell_in_set(const MissingDigitSet& set, std::uint64_t k, int level) {
    const auto b = static_cast<std::uint64_t>(set.base());
    for (int i = 0; i < level; ++i) {
        if (!set.allows(static_cast<int>(k % b))) {
            return false;
        }
        k /= b;
    }
    return true;
}

void cells_for_center(const MissingDigitSet& set, const BoxSetup& s, std::uint64_t p, std::vector<std::uint64_t>& out) {
    const std::uint64_t c = p * s.scale;
    const std::uint64_t first = c >= s.reach_lo ? c - s.reach_lo : 0;
    const std::uint64_t last = std::min(c + s.reach_hi, s.cells - 1);
    for (std::uint64_t k = first; k <= last; ++k) {
        if (cell_in_set(set, k, s.level)) {
            out.push_back(k);
        }
    }
}

BoxDimensionEstimate finish_box(const MissingDigitSet& set, int level, std::vector<std::uint64_t>& cells) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    BoxDimensionEstimate est;
    est.level = level;
    est.count = Integer(static_cast<unsigned long>(cells.size()));
    if (cells.size() <= 1) {
        est.estimate = Interval::point(Rational(0));
    } else {
        est.estimate = enclose_at(LogRatio{Rational(1), est.count, ipow(set.base(), static_cast<unsigned long>(level))}, 128);
    }
    return est;
}

} // namespace

BoxDimensionEstimate box_dimension_estimate_serial(const MissingDigitSet& set, const Rational& tau, int n, bool coprime,
                                                   std::size_t budget) {
    const BoxSetup s = box_setup(set, tau, n, coprime, budget);
    std::vector<std::uint64_t> cells;
    for (std::uint64_t p : s.centers) {
        cells_for_center(set, s, p, cells);
    }
    return finish_box(set, s.level, cells);
}

BoxDimensionEstimate box_dimension_estimate(const MissingDigitSet& set, const Rational& tau, int n, bool coprime,
                                            std::size_t budget) {
    const BoxSetup s = box_setup(set, tau, n, coprime, budget);
    std::vector<std::vector<std::uint64_t>> parts(s.centers.size());
    const auto count = static_cast<long>(s.centers.size());
    parallel_for(count, [&](long i) {
        cells_for_center(set, s, s.centers[static_cast<std::size_t>(i)], parts[static_cast<std::size_t>(i)]);
    });
    std::vector<std::uint64_t> cells;
    for (auto& p : parts) {
        cells.insert(cells.end(), p.begin(), p.end());
    }
    return finish_box(set, s.level, cells);
}

} // namespace cantorlab
