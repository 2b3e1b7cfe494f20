#include "cantorlab/cli.hpp"
#include "schema_check.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace cantorlab;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& command) {
    return std::string(CANTORLAB_FIXTURE_DIR) + "/" + command + ".conf";
}

const std::vector<std::string> kCommands{"measure", "layer",    "pairwise",  "quasi-scan", "series",
                                         "tail",    "bc-ratio", "dim-estimate", "xi-build", "xi-verify",
                                         "cf",      "exponent", "cf-interval", "full-cover"};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "cantorlab_cli_test";
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("every subcommand is deterministic and matches the schema") {
    const json schema = schema_check::report_schema();
    for (const auto& c : kCommands) {
        CAPTURE(c);
        const Run a = run({c, "--config", fixture(c)});
        const Run b = run({c, "--config", fixture(c)});
        REQUIRE(a.code == kExitOk);
        CHECK(a.out == b.out);
        const json doc = json::parse(a.out);
        CHECK(doc["command"] == c);
        CHECK(doc["timing_ms"].is_null());
        const auto errors = schema_check::validate(schema, doc);
        CHECK_MESSAGE(errors.empty(), (errors.empty() ? "" : errors.front()));
        const Run csv_a = run({c, "--config", fixture(c), "--output", "csv"});
        const Run csv_b = run({c, "--config", fixture(c), "--output", "csv"});
        CHECK(csv_a.code == kExitOk);
        CHECK(csv_a.out == csv_b.out);
    }
}

TEST_CASE("the validator rejects malformed reports") {
    const json schema = schema_check::report_schema();
    json doc = json::parse(run({"measure", "--config", fixture("measure")}).out);
    CHECK(schema_check::validate(schema, doc).empty());
    json bad = doc;
    bad["schema_version"] = "2";
    CHECK_FALSE(schema_check::validate(schema, bad).empty());
    bad = doc;
    bad.erase("timing_ms");
    CHECK_FALSE(schema_check::validate(schema, bad).empty());
    bad = doc;
    bad["results"]["measure"]["lo"]["exact"] = "one third";
    CHECK_FALSE(schema_check::validate(schema, bad).empty());
    bad = doc;
    bad["command"] = "unknown";
    CHECK_FALSE(schema_check::validate(schema, bad).empty());
}

TEST_CASE("worker count does not change results") {
    for (const auto& c : {"quasi-scan", "bc-ratio", "dim-estimate", "full-cover", "layer"}) {
        CAPTURE(c);
        const json one = json::parse(run({c, "--config", fixture(c), "--workers", "1"}).out);
        const json four = json::parse(run({c, "--config", fixture(c), "--workers", "4"}).out);
        CHECK(one["results"] == four["results"]);
    }
}

TEST_CASE("quasi-scan csv columns") {
    const Run r = run({"quasi-scan", "--set", "3:0,2", "--psi", "pow:2", "--nmax", "8", "--output", "csv"});
    REQUIRE(r.code == kExitOk);
    std::istringstream lines(r.out);
    std::string header;
    std::string first;
    std::getline(lines, header);
    std::getline(lines, first);
    CHECK(header == "m,n,case,mu_m,mu_n,mu_mn,rho");
    CHECK(first == "1,2,ii,1/2,1/4,1/8,1");
}

TEST_CASE("flags override the config file") {
    const json base = json::parse(run({"quasi-scan", "--config", fixture("quasi-scan")}).out);
    CHECK(base["config_echo"]["nmax"] == 8);
    CHECK(base["results"]["rows"].size() == 28);
    const json over = json::parse(run({"quasi-scan", "--nmax", "3", "--config", fixture("quasi-scan")}).out);
    CHECK(over["config_echo"]["nmax"] == 3);
    CHECK(over["results"]["rows"].size() == 3);
    const json after = json::parse(run({"quasi-scan", "--config", fixture("quasi-scan"), "--nmax", "4"}).out);
    CHECK(after["results"]["rows"].size() == 6);
}

TEST_CASE("--out and --plot-data") {
    const fs::path dir = scratch_dir();
    const fs::path report = dir / "report.json";
    const fs::path plot = dir / "plot.csv";
    const Run direct = run({"series", "--config", fixture("series")});
    const Run to_file =
        run({"series", "--config", fixture("series"), "--out", report.string(), "--plot-data", plot.string()});
    REQUIRE(to_file.code == kExitOk);
    CHECK(to_file.out.empty());
    CHECK(slurp(report) == direct.out);
    const std::string data = slurp(plot);
    CHECK(data.find("_float_lossy") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("timing is opt-in") {
    const json doc = json::parse(run({"measure", "--config", fixture("measure"), "--timing"}).out);
    CHECK(doc["timing_ms"].is_number());
}

TEST_CASE("exit codes") {
    CHECK(run({"measure", "--help"}).code == kExitOk);
    CHECK(run({}).code == kExitInvalid);
    CHECK(run({"frobnicate"}).code == kExitInvalid);
    CHECK(run({"measure", "--no-such-flag", "1"}).code == kExitInvalid);
    CHECK(run({"measure", "--set", "3:0,5"}).code == kExitInvalid);
    CHECK(run({"measure", "--set", "3:0,1,2"}).code == kExitInvalid);
    CHECK(run({"measure", "--interval", "1/2,1/3"}).code == kExitInvalid);
    CHECK(run({"layer", "--psi", "pow:"}).code == kExitInvalid);
    CHECK(run({"series", "--f", "table:1=1;2=1/2"}).code == kExitInvalid);
    CHECK(run({"xi-build", "--tau", "2"}).code == kExitInvalid);
    CHECK(run({"cf", "--x", "sqrt5"}).code == kExitInvalid);
    CHECK(run({"measure", "--config", "/nonexistent/file.conf"}).code == kExitInvalid);
    CHECK(run({"layer", "--n", "45"}).code == kExitResource);
    CHECK(run({"xi-build", "--rule", "factorial", "--S", "12"}).code == kExitResource);
    const Run bad = run({"measure", "--set", "3:0,5"});
    CHECK(bad.out.empty());
    CHECK_FALSE(bad.err.empty());
}

}
