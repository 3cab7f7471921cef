#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace lowlying {

using Int = __int128;

// Overflow-checked arithmetic; throw OverflowError.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Floor of the square root; n must be non-negative.
Int isqrt(Int n);
bool is_square(Int n);

/// Floor division and the matching non-negative remainder (b > 0 for mod).
Int floor_div(Int a, Int b);
Int mod_floor(Int a, Int b);

Int abs128(Int a);
Int gcd128(Int a, Int b);

std::string to_string(Int v);
Int parse_int128(std::string_view text);

/// Narrows to int64, throwing OverflowError when out of range.
std::int64_t narrow64(Int v);

}  // namespace lowlying
