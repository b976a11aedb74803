#include "roma/bench/grid.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace roma::bench {
namespace {

double parse_number(std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw std::invalid_argument("bad grid value '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

std::vector<double> parse_real_grid(std::string_view text) {
    std::vector<double> out;
    if (text.find(':') != std::string_view::npos) {
        const auto c1 = text.find(':');
        const auto c2 = text.find(':', c1 + 1);
        if (c2 == std::string_view::npos) throw std::invalid_argument("range needs start:stop:step");
        const double start = parse_number(text.substr(0, c1));
        const double stop = parse_number(text.substr(c1 + 1, c2 - c1 - 1));
        const double step = parse_number(text.substr(c2 + 1));
        if (!(step > 0.0) || stop < start) throw std::invalid_argument("empty or infinite range");
        const auto steps = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9));
        for (std::size_t k = 0; k <= steps; ++k) out.push_back(start + static_cast<double>(k) * step);
    } else {
        std::size_t start = 0;
        while (true) {
            const auto comma = text.find(',', start);
            out.push_back(parse_number(text.substr(start, comma - start)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    }
    if (out.empty()) throw std::invalid_argument("empty grid");
    return out;
}

std::vector<std::size_t> parse_count_grid(std::string_view text) {
    std::vector<std::size_t> out;
    for (double v : parse_real_grid(text)) {
        const double rounded = std::round(v);
        if (v < 0.0 || std::abs(v - rounded) > 1e-9) {
            throw std::invalid_argument("grid value is not a count: " + std::to_string(v));
        }
        out.push_back(static_cast<std::size_t>(rounded));
    }
    return out;
}

}  // namespace roma::bench
