#include "report.hpp"

#include <iomanip>
#include <sstream>

namespace cantorlab::report {

json rational(const Rational& r) { return {{"exact", r.str()}, {"decimal", to_decimal(r, kDecimalDigits)}}; }

json interval(const Interval& v) { return {{"lo", rational(v.lo)}, {"hi", rational(v.hi)}, {"exact", v.exact()}}; }

json measure(const CantorMeasureValue& v) { return interval(Interval(v.lo, v.hi)); }

json integer(const Integer& v) { return v.get_str(); }

namespace {

std::string exact_text(const Cell& c) {
    if (const auto* s = std::get_if<std::string>(&c)) {
        return *s;
    }
    if (const auto* r = std::get_if<Rational>(&c)) {
        return r->str();
    }
    const auto& v = std::get<Interval>(c);
    return v.exact() ? v.lo.str() : "[" + v.lo.str() + ":" + v.hi.str() + "]";
}

bool numeric(const Cell& c) { return !std::holds_alternative<std::string>(c); }

std::string float_text(const Cell& c) {
    const Rational r = std::holds_alternative<Rational>(c) ? std::get<Rational>(c) : std::get<Interval>(c).mid();
    std::ostringstream os;
    os << std::setprecision(12) << r.to_double();
    return os.str();
}

void write_row(std::ostream& os, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        os << (i ? "," : "") << cells[i];
    }
    os << '\n';
}

} // namespace

void write_csv(std::ostream& os, const Table& t) {
    write_row(os, t.columns);
    for (const auto& row : t.rows) {
        std::vector<std::string> cells;
        for (const auto& c : row) {
            cells.push_back(exact_text(c));
        }
        write_row(os, cells);
    }
}

void write_plot_data(std::ostream& os, const Table& t) {
    std::vector<bool> num(t.columns.size(), false);
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            num[i] = num[i] || numeric(row[i]);
        }
    }
    std::vector<std::string> head;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        head.push_back(t.columns[i]);
        if (num[i]) {
            head.push_back(t.columns[i] + "_float_lossy");
        }
    }
    write_row(os, head);
    for (const auto& row : t.rows) {
        std::vector<std::string> cells;
        for (std::size_t i = 0; i < row.size(); ++i) {
            cells.push_back(exact_text(row[i]));
            if (num[i]) {
                cells.push_back(numeric(row[i]) ? float_text(row[i]) : "");
            }
        }
        write_row(os, cells);
    }
}

} // namespace cantorlab::report
