#pragma once

#include <stdexcept>
#include <string>

namespace spinnet {

// Eigensolver non-convergence, NaN/Inf blowups, and similar failures of
// otherwise valid inputs. Distinct from std::invalid_argument, which is
// reserved for contract violations (bad sizes, T <= 0, disconnected graphs).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spinnet
