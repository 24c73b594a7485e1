#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace nakayama {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Thrown when a closed-form count fails to evaluate to an integer,
/// which indicates a transcription bug in the formula.
struct NonIntegerResult : std::runtime_error {
  explicit NonIntegerResult(const std::string& what) : std::runtime_error(what) {}
};

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long long j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;  // exact: product of j consecutive integers is divisible by j!
  }
  return r;
}

inline BigInt catalan(long long n) {
  if (n < 0) return 0;
  return binomial(2 * n, n) / (n + 1);
}

inline std::vector<int> divisors(int n) {
  std::vector<int> d;
  for (int k = 1; k * k <= n; ++k) {
    if (n % k == 0) {
      d.push_back(k);
      if (k != n / k) d.push_back(n / k);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

inline int totient(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

/// Fibonacci with F(0) = 0, F(1) = F(2) = 1.
inline BigInt fibonacci(int n) {
  if (n <= 0) return 0;
  BigInt a = 0, b = 1;
  for (int i = 1; i < n; ++i) {
    BigInt c = a + b;
    a = b;
    b = c;
  }
  return b;
}

inline BigInt pow2(int m) {
  return BigInt(1) << m;
}

inline BigInt rat_to_int(const BigRat& r, const std::string& context) {
  if (boost::multiprecision::denominator(r) != 1)
    throw NonIntegerResult(context + ": got non-integer " + r.str());
  return boost::multiprecision::numerator(r);
}

/// Euclidean remainder, always in [0, n).
inline int mod(int a, int n) {
  int r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace nakayama
