#pragma once

#include <stdexcept>
#include <string>

namespace dfamin {

// Exit codes used by the CLI. Library code throws; the CLI maps.
//   0 ok, 2 parse error, 3 guard/too-large, 4 solver unavailable.

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Thrown when an exhaustive computation would exceed its feasibility guard.
class GuardError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class SolverUnavailable : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Solver produced output we cannot interpret, or claimed the impossible.
class SolverProtocolError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class TimeoutExceeded : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace dfamin
