#pragma once

#include <stdexcept>
#include <string>

namespace grouplab {

// Failure categories surfaced to callers and mapped to CLI exit codes.
enum class Err {
    OrderMismatch,
    CapExceeded,
    NotNormal,
    NotASubgroup,
    BadWord,
    OddParameter,
    InvalidTwist,
    TooLarge,
    Parameter,
    Parse,
};

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Err code() const noexcept { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

}  // namespace grouplab
