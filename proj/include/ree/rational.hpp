#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <stdexcept>
#include <string>

namespace ree {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Sentinel for val3(0); larger than any valuation that can occur here.
inline constexpr int kValInfinity = std::numeric_limits<int>::max();

inline int val3(const BigInt& n) {
  if (n == 0) return kValInfinity;
  BigInt m = n;
  int v = 0;
  while (m % 3 == 0) {
    m /= 3;
    ++v;
  }
  return v;
}

// 3-adic valuation of an exact rational; val3(0) = +infinity.
inline int val3(const BigRat& x) {
  if (x == 0) return kValInfinity;
  return val3(numerator(x)) - val3(denominator(x));
}

inline int val3(long long n) { return val3(BigInt(n)); }

// Residue mod 3 of a 3-integral rational (val3 >= 0). Result in {0,1,2}.
inline int mod3(const BigRat& x) {
  if (val3(x) < 0) throw std::domain_error("mod3: rational has a 3 in the denominator");
  const BigInt n = numerator(x) % 3;
  const BigInt d = denominator(x) % 3;  // in {1,2}, its own inverse mod 3
  int r = static_cast<int>((n * d) % 3);
  return (r % 3 + 3) % 3;
}

inline int mod3(const BigInt& n) {
  int r = static_cast<int>(n % 3);
  return (r % 3 + 3) % 3;
}

inline std::string to_string(const BigRat& x) {
  std::string s = numerator(x).str();
  if (denominator(x) != 1) s += "/" + denominator(x).str();
  return s;
}

}  // namespace ree
