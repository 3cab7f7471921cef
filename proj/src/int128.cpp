#include "lowlying/int128.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lowlying/errors.hpp"

namespace lowlying {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit addition overflow");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("128-bit subtraction overflow");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit multiplication overflow");
  return r;
}

Int isqrt(Int n) {
  if (n < 0) throw DomainError("isqrt of a negative number");
  if (n < 2) return n;
  Int r = static_cast<Int>(std::sqrt(static_cast<long double>(n)));
  // long double has a 64-bit mantissa; fix up the last few units.
  auto square_exceeds = [n](Int x) {
    Int sq;
    return __builtin_mul_overflow(x, x, &sq) || sq > n;
  };
  while (square_exceeds(r)) --r;
  while (!square_exceeds(r + 1)) ++r;
  return r;
}

bool is_square(Int n) {
  if (n < 0) return false;
  Int r = isqrt(n);
  return r * r == n;
}

Int floor_div(Int a, Int b) {
  if (b == 0) throw DomainError("division by zero");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int mod_floor(Int a, Int b) {
  if (b <= 0) throw DomainError("modulus must be positive");
  Int r = a % b;
  return r < 0 ? r + b : r;
}

Int abs128(Int a) { return a < 0 ? -a : a; }

Int gcd128(Int a, Int b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string to_string(Int v) {
  if (v == 0) return "0";
  bool negative = v < 0;
  // Work with the negative magnitude so INT128_MIN is representable.
  std::string out;
  Int x = negative ? v : -v;
  while (x != 0) {
    int digit = -static_cast<int>(x % 10);
    out.push_back(static_cast<char>('0' + digit));
    x /= 10;
  }
  if (negative) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

Int parse_int128(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && text[i] == ' ') ++i;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i >= text.size()) throw DomainError("expected an integer, got '" + std::string(text) + "'");
  Int value = 0;
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == ' ') break;
    if (ch < '0' || ch > '9') throw DomainError("expected an integer, got '" + std::string(text) + "'");
    value = checked_add(checked_mul(value, 10), ch - '0');
  }
  for (; i < text.size(); ++i) {
    if (text[i] != ' ') throw DomainError("expected an integer, got '" + std::string(text) + "'");
  }
  return negative ? -value : value;
}

std::int64_t narrow64(Int v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("value " + to_string(v) + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace lowlying
