#include "cantorlab/calibration.hpp"
#include "cantorlab/layer.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>

using namespace cantorlab;

int main(int argc, char** argv) {
    CLI::App app{"Recompute the committed calibration constants"};
    int n_env = 12;
    int n_pairs = 10;
    app.add_option("--env-nmax", n_env, "last level of the comparability envelope");
    app.add_option("--pair-nmax", n_pairs, "last level of the quasi-independence scan");
    CLI11_PARSE(app, argc, argv);

    const auto set = MissingDigitSet::middle_third();
    const auto cfg = WindowConfig::for_window(set, RatInterval::unit());

    Rational lo(1000);
    Rational hi(0);
    for (const Rational& tau : {Rational(Integer(3), Integer(2)), Rational(2), Rational(3)}) {
        const auto psi = ApproxFunction::power(Scalar(tau));
        for (int n = cfg.t0 + 1; n <= n_env; ++n) {
            const Interval r = comparability_ratio(build_layer(set, psi, n, cfg, true), psi);
            lo = std::min(lo, r.lo);
            hi = std::max(hi, r.hi);
        }
    }
    Rational c(0);
    for (const Rational& tau : {Rational(2), Rational(3)}) {
        const auto rep = quasi_independence_scan(set, ApproxFunction::power(Scalar(tau)), cfg, n_pairs);
        if (rep.c_beyond_t0) {
            c = std::max(c, *rep.c_beyond_t0);
        }
    }
    std::cout << "envelope_lo " << to_decimal(lo) << " (committed " << calibration::envelope_lo << ")\n"
              << "envelope_hi " << to_decimal(hi) << " (committed " << calibration::envelope_hi << ")\n"
              << "c_fix " << c << " (committed " << calibration::c_fix << ")\n";
    const bool ok = calibration::envelope_lo <= lo && hi <= calibration::envelope_hi && c <= calibration::c_fix;
    std::cout << (ok ? "committed constants cover the measurement\n" : "committed constants are stale\n");
    return ok ? 0 : 1;
}
