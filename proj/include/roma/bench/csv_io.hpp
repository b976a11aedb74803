#pragma once

#include <Eigen/Dense>

#include <iosfwd>
#include <stdexcept>

namespace roma::bench {

/// Malformed numeric CSV input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads a numeric matrix: one CSV line per ambient dimension, one column per point.
/// With skip_header the first line is ignored. Blank lines are skipped. Throws
/// ParseError on empty input, ragged rows, or non-finite / non-numeric fields.
Eigen::MatrixXd read_matrix_csv(std::istream& is, bool skip_header = false);

/// Writes the matrix in the layout read_matrix_csv expects, 17 significant digits.
void write_matrix_csv(std::ostream& os, const Eigen::MatrixXd& m);

}  // namespace roma::bench
