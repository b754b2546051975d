#pragma once

#include <stdexcept>
#include <string>

namespace conic {

// Base class for everything this library throws on purpose.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid argument to an exact-arithmetic operation, e.g. sqrt of a negative.
class domain_error : public error {
public:
    using error::error;
};

// Sum or product of values living in distinct quadratic fields Q(sqrt(d)).
class incompatible_field_error : public error {
public:
    using error::error;
};

// A brute-force oracle was asked for more than its enumeration budget.
class resource_error : public error {
public:
    using error::error;
};

// A computation needs cohomology data outside the profile's valid range.
class incomplete_data_error : public error {
public:
    using error::error;
};

// The assembled multiplicity contradicts the positivity the spectral
// decomposition theorem guarantees; signals an inconsistent profile.
class theorem_violation_error : public error {
public:
    using error::error;
};

// Cross-checked quantities disagree (e.g. a Riemann-Roch count went negative).
class consistency_error : public error {
public:
    using error::error;
};

// Matrix arguments with mismatched or non-square dimensions.
class shape_error : public error {
public:
    using error::error;
};

// Malformed textual input (exact-number strings, profile JSON).
class parse_error : public error {
public:
    using error::error;
};

// A bundle profile that cannot be loaded or fails its structural invariants.
class profile_error : public error {
public:
    using error::error;
};

} // namespace conic
