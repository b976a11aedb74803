#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace roma {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A column is too close to zero to be normalized.
class ZeroColumn : public Error {
public:
    explicit ZeroColumn(std::size_t index)
        : Error("column " + std::to_string(index) + " has (near) zero norm"), index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class EmptyInlierSet : public Error {
public:
    EmptyInlierSet() : Error("cannot recover a subspace from zero points") {}
};

/// The inlier-angle cdf underflowed; the non-ERP bound is vacuous.
class DegenerateCdf : public Error {
public:
    using Error::Error;
};

}  // namespace roma
