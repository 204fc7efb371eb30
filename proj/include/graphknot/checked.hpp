// Overflow-checked 64-bit integer arithmetic. Every operation either returns
// the exact result or throws std::overflow_error; nothing wraps silently.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace graphknot {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow: " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow: " + std::to_string(a) + " - " + std::to_string(b));
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow: " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
    return checked_sub(0, a);
}

// Narrow a 128-bit intermediate back to 64 bits.
inline std::int64_t checked_narrow(__int128 v) {
    if (v > __int128(INT64_MAX) || v < __int128(INT64_MIN))
        throw std::overflow_error("integer overflow: 128-bit intermediate out of 64-bit range");
    return static_cast<std::int64_t>(v);
}

} // namespace graphknot
