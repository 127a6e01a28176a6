#pragma once

#include <stdexcept>
#include <string>

namespace strebel {

// Bad arguments from the caller: mismatched orders, malformed flags.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Mathematically outside the supported domain (m >= m_c, zero constant term, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A requested tolerance could not be met with the given truncation.
struct AccuracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Iterative solver failed to converge.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace strebel
