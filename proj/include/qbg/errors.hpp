#pragma once

#include <stdexcept>
#include <string>

namespace qbg {

// Bad input: unknown type, rank out of range, malformed flags. CLI exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A checked mathematical property failed. CLI exit code 1.
struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Level-zero query outside the certified part of a window.
struct InconclusiveWindow : ConfigError {
    using ConfigError::ConfigError;
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw InvariantViolation(what);
}

}  // namespace qbg
