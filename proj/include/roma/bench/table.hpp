#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace roma::bench {

using Cell = std::variant<std::int64_t, double, std::string>;

/// Result rows of one experiment with a fixed column order.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    /// Index of a column; throws std::out_of_range for unknown names.
    std::size_t column(std::string_view name) const;
    /// Numeric cell value (integers widened to double).
    double number(std::size_t row, std::string_view name) const;
};

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double v);

/// Header row then one line per row, comma separated.
void write_csv(std::ostream& os, const Table& table);

}  // namespace roma::bench
