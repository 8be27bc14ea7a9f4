#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vilenkin {

enum class ErrorKind {
    invalid_group,
    overflow,
    shape,
    range,
    domain,
    degenerate_weights,
    invalid_params,
    atom_mean,
    atom_bound,
    atom_support,
    unsupported,
    io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so callers
/// (and the CLI) can branch on the category without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool condition, ErrorKind kind, const char* what) {
    if (!condition) fail(kind, what);
}

inline void require(bool condition, ErrorKind kind, const std::string& what) {
    if (!condition) fail(kind, what);
}

} // namespace vilenkin
