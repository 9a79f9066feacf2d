#pragma once

#include <stdexcept>
#include <string>

namespace okb {

// Domain failure with a stable machine-readable code. The CLI maps these to
// exit status 1 and a {"error": code, "detail": ...} payload; ParseError and
// IOError map to exit status 2.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& detail) {
    throw DomainError(code, detail);
}

} // namespace okb
