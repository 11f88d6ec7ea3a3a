#pragma once
#include <stdexcept>
#include <string>

namespace wps {

// Malformed input or a contract violation on user-supplied data. CLI exit code 1.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant. CLI exit code 2.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

[[noreturn]] inline void fail_internal(const std::string& msg) { throw internal_error(msg); }

#define WPS_ASSERT(cond, msg) \
    do {                                          \
        if (!(cond)) ::wps::fail_internal(msg);   \
    } while (0)

} // namespace wps
