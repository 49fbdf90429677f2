#pragma once

#include <stdexcept>
#include <string>

namespace arrangeops {

enum class ErrorCode {
    Argument,         // null/unknown name, malformed request
    Parse,            // unreadable rational or JSON payload
    Validation,       // a domain invariant is violated
    IndexOutOfRange,  // composition slot outside 1..arity
    Domain,           // parameter outside its stated domain
    NotGeneric,       // coincident crossing with a block of size >= 3
    NonFactorizable,  // multi-particle event in a non-Yang-Baxter theory
    LawFailure,       // a law suite reported failures
    Io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool cond, ErrorCode code, const std::string& message) {
    if (!cond) fail(code, message);
}

} // namespace arrangeops
