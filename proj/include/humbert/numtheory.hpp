#pragma once

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <vector>

namespace humbert {

inline long long mod_norm(long long x, long long m) {
  long long r = x % m;
  return r < 0 ? r + m : r;
}

/// Exact integer square root: returns r with r*r == n, or -1 if n is not a
/// perfect square (or is negative).
inline long long isqrt_exact(long long n) {
  if (n < 0) return -1;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n ? r : -1;
}

inline long long euler_phi(long long n) {
  long long result = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

inline std::vector<long long> divisors(long long n) {
  std::vector<long long> small, large;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace humbert
