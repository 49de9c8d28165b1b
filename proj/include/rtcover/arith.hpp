#ifndef RTCOVER_ARITH_HPP
#define RTCOVER_ARITH_HPP

#include <cstdlib>

namespace rtcover {

// Floor/ceiling division for positive divisors and any sign of numerator.
constexpr long long floor_div(long long a, long long b) {
  long long q = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

constexpr long long ceil_div(long long a, long long b) {
  return -floor_div(-a, b);
}

}  // namespace rtcover

#endif  // RTCOVER_ARITH_HPP
