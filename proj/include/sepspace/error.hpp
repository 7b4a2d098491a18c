#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sepspace {

/// Error with a stable machine-readable code plus a human message.
/// Codes are screaming-snake identifiers such as NOT_CHORDAL or NO_LINE_FOUND.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void raise(const std::string& code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool cond, const std::string& code, const std::string& message) {
    if (!cond) raise(code, message);
}

} // namespace sepspace
