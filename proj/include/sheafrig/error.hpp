#pragma once

#include <stdexcept>
#include <string>

namespace sheafrig {

// Violated precondition or malformed input. The CLI maps this to exit code 2.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Two computation paths that must agree by construction disagreed, or a
// guaranteed property failed its re-verification. Always a bug; exit code 1.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw PreconditionError(what);
}

inline void check_internal(bool cond, const std::string& what) {
    if (!cond) throw InternalError(what);
}

} // namespace sheafrig
