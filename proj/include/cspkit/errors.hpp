#pragma once

#include <stdexcept>
#include <string>

namespace cspkit {

// Error categories; the numeric values double as CLI exit codes.
enum class errc {
    parse_error = 2,
    cap_exceeded = 3,
    mode_mismatch = 4,
    precondition = 5,
    verification = 6,
};

class error : public std::runtime_error {
    errc code_;

public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }
    int exit_code() const noexcept {
        // The documented CLI table stops at 5; anything else is a generic failure.
        int c = static_cast<int>(code_);
        return c >= 2 && c <= 5 ? c : 1;
    }
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace cspkit
