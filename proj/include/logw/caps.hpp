#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

namespace logw {

// Resource caps for the enumerations. The CLI reads LOGW_MAX_WEYL and
// LOGW_MAX_BASIS from the environment; library callers set fields directly.
struct Caps {
    std::size_t max_weyl = 1000000;
    std::size_t max_basis = 200000;
    std::size_t max_lambda = 2000000;

    static Caps from_env() {
        Caps c;
        if (const char* v = std::getenv("LOGW_MAX_WEYL")) c.max_weyl = std::strtoull(v, nullptr, 10);
        if (const char* v = std::getenv("LOGW_MAX_BASIS")) c.max_basis = std::strtoull(v, nullptr, 10);
        return c;
    }
};

} // namespace logw
