#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lowlying {

/// Exact rational backed by boost::multiprecision; densities and remainders
/// never leave this type until rendering.
using Rational = boost::multiprecision::cpp_rational;

/// "num/den", with den omitted when it is 1.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

inline Rational make_rational(std::int64_t num, std::int64_t den) {
  return Rational(num, den);
}

}  // namespace lowlying
