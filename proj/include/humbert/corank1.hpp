#pragma once

#include <array>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "humbert/siegel.hpp"

namespace humbert {

/// Image of a period matrix under the corank-1 partial quotient
/// e1(tau) = (e^{2 pi i tau11}, tau12, tau22); q = 0 on the boundary.
struct Corank1Point {
  Complex q, z, tau;
};

Corank1Point e1_map(const PeriodMatrix& tau);

/// Boundary curve tau -> (0, sign*(c*tau+e)/m, tau). Both signed branches are
/// kept; tracked_sign is the branch actually reached by sequences along
/// H2(v) (it depends on the sign of b in v).
struct Corank1LimitCurve {
  long long c, e, m;
  int tracked_sign;

  Corank1Point at(Complex tau, int sign) const;
};

/// Nonempty exactly when v = (0, +-m, c, 0, e).
std::optional<Corank1LimitCurve> corank1_limit(const DiscriminantVector& v);

/// e1-images of the H2(v) points with Im tau11 = h, fixed tau22. Throws
/// InvalidVector when a != 0 or d != 0 (no finite limit exists).
std::vector<Corank1Point> track_limit_corank1(const DiscriminantVector& v,
                                              Complex tau22,
                                              const std::vector<double>& heights);

/// Residue pair (c, e) mod m of order exactly m, i.e. gcd(c, e, m) = 1.
struct TorsionClass {
  long long c, e, m;

  TorsionClass(long long c, long long e, long long m);

  /// Representative of the +-1 quotient: lexicographic min of (c,e), (-c,-e).
  TorsionClass canonical() const;

  auto operator<=>(const TorsionClass&) const = default;
};

using Mat2 = std::array<std::array<long long, 2>, 2>;

/// Brute-force enumeration of SL(2, Z/m) (determinant test over all entry
/// tuples); oracle-grade, desk scale only.
std::vector<Mat2> sl2_mod_m_elements(long long m);

/// Orbit of start under the right action of SL(2, Z/m) on row pairs.
std::set<TorsionClass> sl2_mod_m_orbit(long long m, const TorsionClass& start);

/// Element of the group acting on C x H in the definition of K^0(1):
/// (z, tau) -> ((eps*z + mm*tau + nn)/(c*tau+d), (a*tau+b)/(c*tau+d)).
struct BoundaryGroupElement {
  int epsilon = 1;
  long long mm = 0, nn = 0;
  Mat2 sl2{{{1, 0}, {0, 1}}};

  static BoundaryGroupElement identity() { return {}; }
};

/// 3x3 block matrix product; apply(g1) then apply(g2) equals
/// apply(compose(g2, g1)).
BoundaryGroupElement compose(const BoundaryGroupElement& g2,
                             const BoundaryGroupElement& g1);

std::pair<Complex, Complex> apply_boundary_group(const BoundaryGroupElement& g,
                                                 Complex z, Complex tau);

/// Induced permutation of m-torsion classes: translations vanish mod m, the
/// SL2 block acts through its rational representation (a,-b;-c,d) and eps
/// through -1. Returned class is not canonicalized.
TorsionClass boundary_group_on_torsion(const BoundaryGroupElement& g,
                                       const TorsionClass& t);

}  // namespace humbert
