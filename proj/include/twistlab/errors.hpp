#pragma once

#include <stdexcept>
#include <string>

namespace twistlab {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live on surfaces of different genus, or vector sizes disagree.
struct dimension_error : error {
    using error::error;
};

/// A numeric argument is outside the domain an operation is defined on.
struct domain_error : error {
    using error::error;
};

/// A stated precondition of an operation does not hold for the given input.
struct precondition_error : error {
    using error::error;
};

/// Scenario, atlas or table data is malformed or internally inconsistent.
struct data_error : error {
    using error::error;
};

/// Serialized input (word syntax, JSON) could not be parsed.
struct parse_error : error {
    using error::error;
};

/// Input is valid but the operation does not support it.
struct unsupported_error : error {
    using error::error;
};

} // namespace twistlab
