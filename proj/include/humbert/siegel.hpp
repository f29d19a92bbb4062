#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <vector>

#include "humbert/errors.hpp"

namespace humbert {

using Complex = std::complex<double>;

/// Primitive integer vector v = (a,b,c,d,e) with b^2 - 4(ac + de) = m^2.
/// The exponent m is derived from the coefficients on construction.
struct DiscriminantVector {
  long long a, b, c, d, e;
  long long m;

  DiscriminantVector(long long a, long long b, long long c, long long d,
                     long long e);

  /// Sign-normalized copy: first nonzero coordinate positive (H2(v) = H2(-v)).
  DiscriminantVector normalized() const;

  auto operator<=>(const DiscriminantVector&) const = default;
};

/// Symmetric 2x2 complex matrix; lies in the Siegel space H2 when the
/// imaginary part is positive definite.
struct PeriodMatrix {
  Complex tau11, tau12, tau22;

  bool in_siegel(double margin = 0.0) const;
};

/// Left side of the Humbert equation a*t11 + b*t12 + c*t22 + d*(t11*t22 -
/// t12^2) + e; zero exactly on H2(v).
Complex humbert_residual(long long a, long long b, long long c, long long d,
                         long long e, const PeriodMatrix& tau);
Complex humbert_residual(const DiscriminantVector& v, const PeriodMatrix& tau);

/// All sign-normalized primitive solutions of the discriminant equation with
/// coefficients in [-coefficient_bound, coefficient_bound], sorted
/// lexicographically.
std::vector<DiscriminantVector> enumerate_vectors(long long m,
                                                  long long coefficient_bound);

/// Deterministic pseudo-random point of H2(v): solves the Humbert equation
/// for tau11 (or for tau12 when a = d = 0) with the remaining entries drawn
/// uniformly. Throws SamplingFailed when no positive definite draw is found
/// within 100 attempts.
PeriodMatrix sample_point(const DiscriminantVector& v, std::uint64_t seed);

}  // namespace humbert
