#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace surdlab {

enum class ErrorKind {
    Precondition,  // invalid input; CLI exit 2
    Limit,         // a configured search or size bound was exhausted; exit 3
    Falsified,     // a verified property failed; exit 1
    Io,
};

// Every error carries a stable machine-readable reason code such as
// "rational-input" or "r-not-odd".
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string reason, const std::string& message)
        : std::runtime_error(message), kind_(kind), reason_(std::move(reason)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    ErrorKind kind_;
    std::string reason_;
};

[[noreturn]] inline void fail(ErrorKind kind, std::string reason, const std::string& message) {
    throw Error(kind, std::move(reason), message);
}

inline void require(bool cond, std::string_view reason, const std::string& message) {
    if (!cond) {
        fail(ErrorKind::Precondition, std::string(reason), message);
    }
}

}  // namespace surdlab
