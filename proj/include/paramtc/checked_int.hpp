#pragma once

#include <cstdint>

#include "paramtc/errors.hpp"

namespace paramtc {

/* All coefficient arithmetic goes through these; wraparound is a hard error. */

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw IntegerOverflow("coefficient addition overflows 64 bits");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw IntegerOverflow("coefficient multiplication overflows 64 bits");
    return r;
}

inline std::int64_t checked_neg(std::int64_t a)
{
    return checked_mul(a, -1);
}

}  // namespace paramtc
