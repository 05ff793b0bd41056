#ifndef RCM_ERRORS_HPP
#define RCM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rcm {

// Bad user input: malformed law strings, invalid parameters, broken configs.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File system / serialization failures.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A hard mathematical invariant failed at run time. The message names the
// violated invariant so scripted callers can log it.
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rcm

#endif
