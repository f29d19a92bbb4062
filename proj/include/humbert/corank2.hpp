#pragma once

#include <array>
#include <set>
#include <vector>

#include "humbert/cyclotomic.hpp"
#include "humbert/siegel.hpp"

namespace humbert {

/// Point of the torus (C^x)^3, the image of the corank-2 partial quotient.
struct TorusPoint {
  Complex t1, t2, t3;
};

TorusPoint e2_map(const PeriodMatrix& tau);

/// Coordinates in the chart T_n of the toric embedding.
struct ChartPoint {
  int n;
  Complex x1, x2, x3;
};

/// Immersion iota_n(t) = (t1 t2^{-(2n+1)} t3^{n(n+1)}, t2 t3^{-n}, t2^{-1} t3^{n+1}).
ChartPoint iota_n(const TorusPoint& p, int n);

/// The embedding iota(t) = (t1 t2^{-1}, t2, t3 t2^{-1}) used for the
/// peripheral-P1 limit computations.
std::array<Complex, 3> iota_sec3(const TorusPoint& p);

/// psi = iota_sec3 after e2.
std::array<Complex, 3> psi_map(const PeriodMatrix& tau);

/// psi along the family [[tau, z], [z, (tau - (m-2)z)/(m-1)]] at tau = i*h;
/// converges to (0, e^{2 pi i z}, 0) as h grows. Throws NotInSiegel when a
/// height gives a matrix outside H2.
std::vector<std::array<Complex, 3>> psi_limit_family(
    int m, Complex z, const std::vector<double>& heights);

/// Chart indices n with -1 + b/m <= n <= b/m; always a subset of {-1, 0}.
std::set<int> chart_boundary_range(long long b, long long m);

enum class BranchTag { RootOfUnity, Origin, Diverges };

/// One branch (a, b) of the boundary approach, with its chart-0 limit before
/// and after the swap quotient (x, y) -> (x + y, x y).
struct BranchPoint {
  long long a, b;
  Complex x, y;
  Complex sym_sum, sym_prod;
  BranchTag tag;
};

/// A deduplicated limit point in the quotient coordinates. key is the exact
/// cyclotomic canonical form of the first coordinate (the second is always
/// exactly zero at the limit).
struct BoundaryPoint {
  BranchTag tag;
  long long unit_exp;  // a with point (rho^a, 0); -1 for the origin
  Complex sym_sum, sym_prod;
  std::vector<long long> key;
};

struct BoundaryIntersection {
  int m;
  std::vector<BoundaryPoint> points;
  std::vector<BranchPoint> branches;
};

/// Exact limit set of all branches (a, b) with gcd(a, b, m) = 1 in chart
/// n = 0; |points| = phi(m) + 1.
BoundaryIntersection boundary_intersection_points(int m);

/// Limit points contributed by chart n (n in {-1, 0} materialized).
std::vector<BoundaryPoint> chart_limit_points(int m, int n);

/// Chart-0 point set equals the chart -1 set plus the origin.
bool verify_chart_reduction(int m);

enum class BranchStatus { Smooth, Singular, Cancellation };

struct BranchOrders {
  int ord_sum;   // order of vanishing of t^b(rho^a + t^{m-2b} rho^{-a}); -1 on cancellation
  int ord_prod;  // order of t^m, i.e. m
  BranchStatus status;
};

/// Vanishing orders of an origin branch (0 < b < m), from the exact series
/// expansion. The m = 2b case with rho^a + rho^{-a} = 0 is reported as
/// Cancellation rather than assigned an order.
BranchOrders branch_multiplicity(long long a, long long b, int m);

}  // namespace humbert
