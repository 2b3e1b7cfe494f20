#pragma once

#include "cantorlab/approx.hpp"
#include "cantorlab/missing_digit_set.hpp"
#include "cantorlab/real.hpp"
#include "cantorlab/scalar.hpp"
#include "cantorlab/sparse_number.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace cantorlab::cli {

/// Raw option values. Empty strings and zero levels mean "command default".
struct RunConfig {
    std::string command;
    std::string set = "3:0,2";
    std::string psi = "pow:2";
    std::string truncate;
    std::string f = "pow:gamma";
    bool f_monotone = false;
    std::string window = "0,1";
    std::string interval;
    int nmax = 8;
    int n = 0;
    int m = 1;
    int m_min = 1;
    int n0 = 1;
    int q = 2;
    int s = 5;
    int depth = 10;
    bool coprime = true;
    std::string x;
    std::string tau;
    std::string lambda = "1";
    std::string rule = "power";
    int coeff = 2;
    std::string quotients = "1,1";
    int sweep = 0;
    std::string min_q = "10";
    std::string output = "json";
    std::string out;
    std::string plot_data;
    int workers = 1;
    int precision_budget = 16;
    std::string config;
    bool timing = false;

    /// Options that shape the result (paths and timing excluded).
    nlohmann::json echo() const;
};

/// Everything parsed and validated before any computation.
struct Parsed {
    MissingDigitSet set;
    RatInterval window;
    ApproxFunction psi;
    DimensionFunction f;
    PrecisionPolicy policy;
};

Parsed parse_all(const RunConfig& cfg);

RealSpec parse_real(const std::string& text, const MissingDigitSet& set);
Scalar parse_scalar(const std::string& text, const MissingDigitSet& set);
RatInterval parse_interval(const std::string& text);
std::vector<Integer> parse_quotients(const std::string& text);
std::map<int, Rational> parse_table(const std::string& text);

/// key=value lines ('#' comments) turned into "--key=value" arguments.
std::vector<std::string> config_file_args(const std::string& path);

/// Sparse number from --tau/--lambda/--rule/--S/--coeff on the set's base.
SparseDigitNumber build_xi(const RunConfig& cfg, const Parsed& p);

} // namespace cantorlab::cli
