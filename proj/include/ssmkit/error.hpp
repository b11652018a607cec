#pragma once

#include <stdexcept>
#include <string>

namespace ssmkit {

// Bad inputs: malformed files, inconsistent manifests, precondition failures.
// The CLI maps these to exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Failures at run time (I/O, numerics). The CLI maps these to exit code 2.
class RuntimeError : public std::runtime_error {
public:
    explicit RuntimeError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace ssmkit
