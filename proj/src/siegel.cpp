#include "humbert/siegel.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>

#include "humbert/numtheory.hpp"

namespace humbert {

namespace {

long long gcd5(long long a, long long b, long long c, long long d,
               long long e) {
  long long g = std::gcd(std::llabs(a), std::llabs(b));
  g = std::gcd(g, std::llabs(c));
  g = std::gcd(g, std::llabs(d));
  return std::gcd(g, std::llabs(e));
}

// [seed]-stable uniform draw; avoids distribution objects so results are
// bit-identical across standard library implementations.
double unif(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
}

}  // namespace

DiscriminantVector::DiscriminantVector(long long a_, long long b_, long long c_,
                                       long long d_, long long e_)
    : a(a_), b(b_), c(c_), d(d_), e(e_), m(0) {
  const long long disc = b * b - 4 * (a * c + d * e);
  const long long root = isqrt_exact(disc);
  if (root <= 0)
    throw InvalidVector("discriminant " + std::to_string(disc) +
                        " is not a positive perfect square");
  if (gcd5(a, b, c, d, e) != 1)
    throw InvalidVector("vector is not primitive");
  m = root;
}

DiscriminantVector DiscriminantVector::normalized() const {
  const long long v[5] = {a, b, c, d, e};
  for (long long x : v) {
    if (x > 0) return *this;
    if (x < 0) return {-a, -b, -c, -d, -e};
  }
  return *this;  // unreachable for valid vectors
}

bool PeriodMatrix::in_siegel(double margin) const {
  const double y11 = tau11.imag(), y12 = tau12.imag(), y22 = tau22.imag();
  return y11 > margin && y22 > margin && y11 * y22 - y12 * y12 > margin;
}

Complex humbert_residual(long long a, long long b, long long c, long long d,
                         long long e, const PeriodMatrix& tau) {
  const double da = static_cast<double>(a), db = static_cast<double>(b),
               dc = static_cast<double>(c), dd = static_cast<double>(d),
               de = static_cast<double>(e);
  return da * tau.tau11 + db * tau.tau12 + dc * tau.tau22 +
         dd * (tau.tau11 * tau.tau22 - tau.tau12 * tau.tau12) + de;
}

Complex humbert_residual(const DiscriminantVector& v, const PeriodMatrix& tau) {
  return humbert_residual(v.a, v.b, v.c, v.d, v.e, tau);
}

std::vector<DiscriminantVector> enumerate_vectors(long long m,
                                                  long long coefficient_bound) {
  if (m < 2) throw std::invalid_argument("enumerate_vectors: m must be >= 2");
  if (coefficient_bound < m)
    throw std::invalid_argument(
        "enumerate_vectors: coefficient_bound must be >= m");

  const long long m2 = m * m;
  const long long bound = coefficient_bound;
  // |b| cannot exceed sqrt(m^2 + 8*bound^2) inside the box.
  long long bmax = bound;
  while (bmax * bmax > m2 + 8 * bound * bound) --bmax;

  std::set<std::array<long long, 5>> found;
  for (long long b = -bmax; b <= bmax; ++b) {
    if (mod_norm(b - m, 2) != 0) continue;  // b and m share parity
    const long long target = (b * b - m2) / 4;  // ac + de must equal this
    for (long long a = -bound; a <= bound; ++a)
      for (long long c = -bound; c <= bound; ++c) {
        const long long rest = target - a * c;
        for (long long d = -bound; d <= bound; ++d) {
          if (d == 0) {
            if (rest != 0) continue;
            for (long long e = -bound; e <= bound; ++e) {
              if (gcd5(a, b, c, d, e) != 1) continue;
              DiscriminantVector v =
                  DiscriminantVector(a, b, c, 0, e).normalized();
              found.insert({v.a, v.b, v.c, v.d, v.e});
            }
          } else {
            if (rest % d != 0) continue;
            const long long e = rest / d;
            if (std::llabs(e) > bound) continue;
            if (gcd5(a, b, c, d, e) != 1) continue;
            DiscriminantVector v =
                DiscriminantVector(a, b, c, d, e).normalized();
            found.insert({v.a, v.b, v.c, v.d, v.e});
          }
        }
      }
  }

  std::vector<DiscriminantVector> out;
  out.reserve(found.size());
  for (const auto& t : found) out.emplace_back(t[0], t[1], t[2], t[3], t[4]);
  return out;
}

PeriodMatrix sample_point(const DiscriminantVector& v, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  constexpr int kAttempts = 100;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const Complex tau22(unif(rng, -0.5, 0.5), unif(rng, 0.5, 2.5));
    PeriodMatrix tau;
    if (v.a == 0 && v.d == 0) {
      // b = +-m; the equation fixes tau12 and leaves tau11 free.
      tau.tau22 = tau22;
      tau.tau12 = -(static_cast<double>(v.c) * tau22 +
                    static_cast<double>(v.e)) /
                  static_cast<double>(v.b);
      tau.tau11 = Complex(unif(rng, -0.5, 0.5), unif(rng, 0.5, 2.5));
    } else {
      const Complex tau12(unif(rng, -0.5, 0.5), unif(rng, -0.5, 0.5));
      const Complex denom =
          static_cast<double>(v.a) + static_cast<double>(v.d) * tau22;
      if (std::abs(denom) < 1e-9) continue;
      tau.tau12 = tau12;
      tau.tau22 = tau22;
      tau.tau11 = -(static_cast<double>(v.b) * tau12 +
                    static_cast<double>(v.c) * tau22 -
                    static_cast<double>(v.d) * tau12 * tau12 +
                    static_cast<double>(v.e)) /
                  denom;
    }
    if (!tau.in_siegel(1e-6)) continue;
    if (std::abs(humbert_residual(v, tau)) >= 1e-12) continue;
    return tau;
  }
  throw SamplingFailed("no positive definite point of H2(v) found in " +
                       std::to_string(kAttempts) + " attempts");
}

}  // namespace humbert
