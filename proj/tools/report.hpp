#pragma once

#include "cantorlab/cantor_measure.hpp"
#include "cantorlab/interval.hpp"
#include "cantorlab/rational.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace cantorlab::report {

using json = nlohmann::json;

inline constexpr int kDecimalDigits = 17;
inline constexpr const char* kSchemaVersion = "1";

json rational(const Rational& r);
json interval(const Interval& v);
json measure(const CantorMeasureValue& v);
json integer(const Integer& v);

using Cell = std::variant<std::string, Rational, Interval>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Exact CSV: rationals as num/den, enclosures as [lo:hi].
void write_csv(std::ostream& os, const Table& t);
/// CSV plus a lossy float column after every numeric column.
void write_plot_data(std::ostream& os, const Table& t);

} // namespace cantorlab::report
