#include "cantorlab/cli.hpp"

#include "cantorlab/errors.hpp"
#include "commands.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <fstream>
#include <ostream>

namespace cantorlab {

namespace {

using cli::RunConfig;

void add_options(CLI::App& app, RunConfig& c) {
    app.add_option("--set", c.set, "missing-digit set as base:digits, e.g. 3:0,2");
    app.add_option("--psi", c.psi, "pow:TAU | powlog:ALPHA,BETA | table:n=v;...");
    app.add_option("--truncate", c.truncate, "replace psi by min(c/r, psi)");
    app.add_option("--f", c.f, "dimension function pow:S | table:n=v;...");
    app.add_flag("--f-monotone", c.f_monotone, "assert r^-gamma f(r) monotone for a table f");
    app.add_option("--window", c.window, "window B as lo,hi");
    app.add_option("--interval", c.interval, "interval for measure, as lo,hi");
    app.add_option("--nmax", c.nmax, "last level");
    app.add_option("--n", c.n, "level");
    app.add_option("--m", c.m, "first level of a pair");
    app.add_option("--m-min", c.m_min, "first level of a scan");
    app.add_option("--n0", c.n0, "first tail level");
    app.add_option("--Q", c.q, "number of layers");
    app.add_option("--S", c.s, "number of sparse terms");
    app.add_option("--depth", c.depth, "digit or quotient depth");
    app.add_flag("--coprime,!--no-coprime", c.coprime, "reduced centers only (default on)");
    app.add_option("--x", c.x, "real: rational, decimal, golden, sqrt5, sqrt(d), gamma forms, xi");
    app.add_option("--tau", c.tau, "exponent tau");
    app.add_option("--lambda", c.lambda, "scale lambda of the power rule");
    app.add_option("--rule", c.rule, "power | factorial");
    app.add_option("--coeff", c.coeff, "digit placed at each sparse exponent");
    app.add_option("--quotients", c.quotients, "continued-fraction prefix, e.g. 1,1");
    app.add_option("--sweep", c.sweep, "tabulate prefixes [n, n] for n = 1..N");
    app.add_option("--min-q", c.min_q, "smallest denominator entering the exponent estimate");
    app.add_option("--output", c.output, "json | csv");
    app.add_option("--out", c.out, "write the report to PATH");
    app.add_option("--plot-data", c.plot_data, "write a plot-ready CSV (float columns are lossy)");
    app.add_option("--workers", c.workers, "OpenMP threads");
    app.add_option("--precision-budget", c.precision_budget, "precision doublings before giving up");
    app.add_option("--config", c.config, "key=value file; flags override it");
    app.add_flag("--timing", c.timing, "fill timing_ms (output no longer reproducible)");
}

// --config must be known before parsing so its entries can be placed first.
std::string find_config(const std::vector<std::string>& args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            return args[i + 1];
        }
        if (args[i].rfind("--config=", 0) == 0) {
            return args[i].substr(9);
        }
    }
    return {};
}

int emit(const RunConfig& c, const cli::Outcome& o, double ms, std::ostream& out) {
    std::ofstream file;
    if (!c.out.empty()) {
        file.open(c.out);
        if (!file) {
            throw InvalidInput("cannot write '" + c.out + "'");
        }
    }
    std::ostream& os = c.out.empty() ? out : file;
    if (c.output == "csv") {
        report::write_csv(os, o.table);
    } else {
        report::json env = {{"schema_version", report::kSchemaVersion},
                            {"command", c.command},
                            {"config_echo", c.echo()},
                            {"results", o.results},
                            {"calibration_constants_used", o.calibration},
                            {"timing_ms", c.timing ? report::json(ms) : report::json(nullptr)}};
        os << env.dump(2) << '\n';
    }
    if (!c.plot_data.empty()) {
        std::ofstream plot(c.plot_data);
        if (!plot) {
            throw InvalidInput("cannot write '" + c.plot_data + "'");
        }
        report::write_plot_data(plot, o.table);
    }
    return kExitOk;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact computations on missing-digit sets and their limsup subsets", "cantorlab"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1, 1);
    app.fallthrough();
    add_options(app, cfg);
    std::vector<std::pair<CLI::App*, cli::CommandFn>> subs;
    for (const auto& info : cli::commands()) {
        subs.emplace_back(app.add_subcommand(info.name, info.help), info.run);
    }

    try {
        std::vector<std::string> full;
        if (const std::string path = find_config(args); !path.empty()) {
            full = cli::config_file_args(path);
        }
        full.insert(full.end(), args.begin(), args.end());
        // CLI11 consumes arguments from the back.
        std::vector<std::string> reversed(full.rbegin(), full.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kExitInvalid;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    try {
        cli::CommandFn run = nullptr;
        for (const auto& [sub, fn] : subs) {
            if (sub->parsed()) {
                cfg.command = sub->get_name();
                run = fn;
            }
        }
        const cli::Parsed parsed = cli::parse_all(cfg);
        omp_set_num_threads(cfg.workers);
        const auto start = std::chrono::steady_clock::now();
        const cli::Outcome outcome = run(cfg, parsed);
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return emit(cfg, outcome, ms, out);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const PrecisionError& e) {
        err << "precision error: " << e.what() << '\n';
        return kExitResource;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::bad_alloc&) {
        err << "resource error: out of memory\n";
        return kExitResource;
    }
}

} // namespace cantorlab
