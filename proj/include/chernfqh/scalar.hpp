#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace chernfqh {

// Expression templates are disabled so the types behave as plain values inside
// Eigen expressions and std containers.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// Fixed-width exact integer that throws std::overflow_error instead of wrapping.
// Used where every intermediate is known to be integral and small.
using CheckedInt = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<64, 64, boost::multiprecision::signed_magnitude,
                                           boost::multiprecision::checked, void>,
    boost::multiprecision::et_off>;

/// Renders "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "num", "num/den" or "-num/den". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Converts an exact integer into another exact scalar type. Throws
/// std::overflow_error when the target is fixed-width and too narrow.
template <typename Scalar>
Scalar from_integer(const Integer& z) {
  if constexpr (std::is_same_v<Scalar, Integer>) {
    return z;
  } else if constexpr (std::is_same_v<Scalar, Rational>) {
    return Rational(z);
  } else {
    if (z > std::numeric_limits<long long>::max() || z < std::numeric_limits<long long>::min())
      throw std::overflow_error("integer does not fit the target scalar");
    return Scalar(z.convert_to<long long>());
  }
}

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

inline Integer int_factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}
inline Rational factorial(unsigned n) { return Rational(int_factorial(n)); }

}  // namespace chernfqh
