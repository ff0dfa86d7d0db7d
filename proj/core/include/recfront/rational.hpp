#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace recfront {

// Arbitrary-precision rational, always stored in lowest terms with a
// positive denominator (the backing type maintains both invariants).
using ExactRational = boost::multiprecision::cpp_rational;
using ExactInt = boost::multiprecision::cpp_int;

inline double to_double(const ExactRational& q) {
  return q.template convert_to<double>();
}

inline std::string to_string(const ExactRational& q) {
  return q.str();
}

inline ExactInt binomial_exact(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) throw std::invalid_argument("binomial_exact: negative argument");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  ExactInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// n(n-1)...(n-d+1)
inline ExactInt falling_factorial_exact(std::int64_t n, int d) {
  if (d < 0) throw std::invalid_argument("falling_factorial_exact: negative order");
  ExactInt r = 1;
  for (int i = 0; i < d; ++i) r *= n - i;
  return r;
}

}  // namespace recfront
