#ifndef BRIDGEGIRTH_ERRORS_HPP
#define BRIDGEGIRTH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bridgegirth {

// Malformed or out-of-contract input (CLI exit code 2).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A documented precondition failed (also exit code 2).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// An explicit work budget was exceeded. Never silently degrades to a wrong
// answer; carries the best bound found so far where one exists.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg, long long best = -1)
        : std::runtime_error(msg), best_so_far(best) {}
    long long best_so_far;
};

} // namespace bridgegirth

#endif
