#include "roma/bench/table.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace roma::bench {

std::size_t Table::column(std::string_view name) const {
    for (std::size_t c = 0; c < columns.size(); ++c)
        if (columns[c] == name) return c;
    throw std::out_of_range("no column named '" + std::string(name) + "'");
}

double Table::number(std::size_t row, std::string_view name) const {
    const Cell& cell = rows.at(row).at(column(name));
    if (const auto* i = std::get_if<std::int64_t>(&cell)) return static_cast<double>(*i);
    if (const auto* d = std::get_if<double>(&cell)) return *d;
    throw std::invalid_argument("column '" + std::string(name) + "' is not numeric");
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(std::ostream& os, const Table& table) {
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        os << (c ? "," : "") << table.columns[c];
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << ',';
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>) os << format_double(v);
                    else os << v;
                },
                row[c]);
        }
        os << '\n';
    }
}

}  // namespace roma::bench
