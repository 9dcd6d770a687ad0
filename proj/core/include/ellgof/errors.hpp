#pragma once

#include <stdexcept>
#include <string>

namespace ellgof {

// Error taxonomy mirrored by the CLI exit codes:
// usage_error -> 2, data_error -> 3, numeric_error -> 4.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid arguments, configuration mismatch, unsupported combinations.
class usage_error : public error {
public:
    using error::error;
};

// Problems with the input data: parse failures, degeneracy, too few rows.
class data_error : public error {
public:
    using error::error;
};

// Numerical failures: non-convergence, singular factorization, rank loss.
class numeric_error : public error {
public:
    using error::error;
};

}  // namespace ellgof
