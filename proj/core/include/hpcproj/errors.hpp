#pragma once

#include <stdexcept>
#include <string>

namespace hpcproj {

/// Malformed input document (bad JSON/CSV, schema violation).
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input parsed but violates a declared invariant.
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A (frequency, cores) state was requested that is not tabulated.
/// Callers must not interpolate around this.
class missing_state_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arithmetic precondition violated (division by zero, empty list, ...).
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Not enough data points for a fit, or a rank-deficient system.
class fit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A binding or scenario references a device/state that cannot be resolved.
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hpcproj
