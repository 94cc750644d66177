#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace umbra {

// Base class for everything this library throws.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid argument values (negative counts, zero denominators, ...).
class domain_error : public error {
public:
    using error::error;
};

// A series did not have the order an operation requires
// (reciprocal of a non-invertible series, inverse of a non-delta series).
class order_error : public error {
public:
    using error::error;
};

// A truncated series carries too few coefficients for an exact answer.
class truncation_error : public error {
public:
    using error::error;
};

// Substitution of a series with a nonzero constant term.
class composition_error : public error {
public:
    using error::error;
};

// Expression syntax error, with the byte offset of the failure and the
// set of tokens that would have been acceptable there.
class parse_error : public error {
public:
    parse_error(std::string message, std::size_t offset, std::vector<std::string> expected = {})
        : error(std::move(message)), offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

}  // namespace umbra
