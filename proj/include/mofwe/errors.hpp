#pragma once

#include <stdexcept>
#include <string>

namespace mofwe {

/// Raised when an input file or dataset is malformed (exit code 3 in the CLI).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when a numerical routine cannot meet its contract, e.g. a
/// quadrature that does not converge (exit code 4 in the CLI).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace mofwe
