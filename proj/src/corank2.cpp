#include "humbert/corank2.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

#include "humbert/numtheory.hpp"

namespace humbert {

namespace {

const Complex kTwoPiI(0.0, 2.0 * std::numbers::pi);

Complex ipow(Complex base, long long n) {
  if (n < 0) return 1.0 / ipow(base, -n);
  Complex out(1.0, 0.0);
  while (n > 0) {
    if (n & 1) out *= base;
    base *= base;
    n >>= 1;
  }
  return out;
}

long long gcd3(long long a, long long b, long long c) {
  return std::gcd(std::gcd(std::llabs(a), std::llabs(b)), std::llabs(c));
}

}  // namespace

TorusPoint e2_map(const PeriodMatrix& tau) {
  return {std::exp(kTwoPiI * tau.tau11), std::exp(kTwoPiI * tau.tau12),
          std::exp(kTwoPiI * tau.tau22)};
}

ChartPoint iota_n(const TorusPoint& p, int n) {
  const long long nn = n;
  return {n, p.t1 * ipow(p.t2, -(2 * nn + 1)) * ipow(p.t3, nn * (nn + 1)),
          p.t2 * ipow(p.t3, -nn), ipow(p.t2, -1) * ipow(p.t3, nn + 1)};
}

std::array<Complex, 3> iota_sec3(const TorusPoint& p) {
  return {p.t1 / p.t2, p.t2, p.t3 / p.t2};
}

std::array<Complex, 3> psi_map(const PeriodMatrix& tau) {
  return iota_sec3(e2_map(tau));
}

std::vector<std::array<Complex, 3>> psi_limit_family(
    int m, Complex z, const std::vector<double>& heights) {
  if (m < 2) throw std::invalid_argument("psi_limit_family: m must be >= 2");
  std::vector<std::array<Complex, 3>> out;
  out.reserve(heights.size());
  for (double h : heights) {
    const Complex tau(0.0, h);
    const PeriodMatrix pm{tau, z,
                          (tau - static_cast<double>(m - 2) * z) /
                              static_cast<double>(m - 1)};
    if (!pm.in_siegel())
      throw NotInSiegel("psi_limit_family: height " + std::to_string(h) +
                        " leaves H2");
    out.push_back(psi_map(pm));
  }
  return out;
}

std::set<int> chart_boundary_range(long long b, long long m) {
  if (m < 1 || b < 0 || b >= m)
    throw std::invalid_argument("chart_boundary_range: need 0 <= b < m");
  std::set<int> out;
  for (int n = -2; n <= 1; ++n) {
    // -1 + b/m <= n <= b/m, tested exactly.
    if (b - m <= n * m && n * m <= b) out.insert(n);
  }
  return out;
}

namespace {

// Limit of the branch (a, b) in chart n, tracked exactly. The curve in chart
// n is (t^p rho^a, t^q rho^{-a}) with p = b - n m, q = (n+1) m - b; a
// boundary point exists iff p, q >= 0.
struct ChartLimit {
  bool exists;
  BranchTag tag;
  CycInt x, y;  // exact limit in C^2 before the swap quotient
};

ChartLimit chart_limit(int m, long long a, long long b, int n) {
  const long long p = b - static_cast<long long>(n) * m;
  const long long q = (static_cast<long long>(n) + 1) * m - b;
  const CycInt zero(m);
  if (p < 0 || q < 0) return {false, BranchTag::Diverges, zero, zero};
  if (p > 0 && q > 0) return {true, BranchTag::Origin, zero, zero};
  if (p == 0)  // x constant rho^a, y -> 0
    return {true, BranchTag::RootOfUnity, CycInt::root_power(m, a), zero};
  // q == 0: x -> 0, y constant rho^{-a}
  return {true, BranchTag::RootOfUnity, zero, CycInt::root_power(m, -a)};
}

BoundaryPoint make_point(int m, long long a, const ChartLimit& lim) {
  BoundaryPoint pt;
  pt.tag = lim.tag;
  const CycInt sum = lim.x + lim.y;
  pt.key = sum.canonical();
  pt.sym_sum = sum.to_complex();
  pt.sym_prod = Complex(0.0, 0.0);  // x y = t^m -> 0 exactly
  if (lim.tag == BranchTag::RootOfUnity) {
    // the nonzero coordinate is rho^{unit_exp}
    pt.unit_exp = lim.x.is_zero() ? mod_norm(-a, m) : mod_norm(a, m);
  } else {
    pt.unit_exp = -1;
  }
  return pt;
}

}  // namespace

std::vector<BoundaryPoint> chart_limit_points(int m, int n) {
  if (m < 2)
    throw std::invalid_argument("chart_limit_points: m must be >= 2");
  if (n != 0 && n != -1)
    throw std::invalid_argument("chart_limit_points: only charts -1, 0");
  std::map<std::vector<long long>, BoundaryPoint> dedup;
  for (long long a = 0; a < m; ++a)
    for (long long b = 0; b < m; ++b) {
      if (gcd3(a, b, m) != 1) continue;
      const ChartLimit lim = chart_limit(m, a, b, n);
      if (!lim.exists) continue;
      BoundaryPoint pt = make_point(m, a, lim);
      dedup.emplace(pt.key, pt);
    }
  std::vector<BoundaryPoint> out;
  out.reserve(dedup.size());
  for (auto& [key, pt] : dedup) out.push_back(pt);
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    if (l.tag != r.tag) return l.tag < r.tag;
    return l.unit_exp < r.unit_exp;
  });
  return out;
}

BoundaryIntersection boundary_intersection_points(int m) {
  BoundaryIntersection out;
  out.m = m;
  out.points = chart_limit_points(m, 0);
  for (long long a = 0; a < m; ++a)
    for (long long b = 0; b < m; ++b) {
      if (gcd3(a, b, m) != 1) continue;
      const ChartLimit lim = chart_limit(m, a, b, 0);
      BranchPoint bp;
      bp.a = a;
      bp.b = b;
      bp.tag = lim.tag;
      bp.x = lim.x.to_complex();
      bp.y = lim.y.to_complex();
      bp.sym_sum = (lim.x + lim.y).to_complex();
      bp.sym_prod = Complex(0.0, 0.0);
      out.branches.push_back(bp);
    }
  return out;
}

bool verify_chart_reduction(int m) {
  const auto pts0 = chart_limit_points(m, 0);
  const auto ptsm1 = chart_limit_points(m, -1);
  std::set<std::vector<long long>> keys0, keysm1;
  for (const auto& p : pts0) keys0.insert(p.key);
  for (const auto& p : ptsm1) keysm1.insert(p.key);
  const std::vector<long long> origin = CycInt(m).canonical();
  if (keysm1.count(origin)) return false;  // chart -1 never reaches the origin
  keysm1.insert(origin);
  return keys0 == keysm1;
}

BranchOrders branch_multiplicity(long long a, long long b, int m) {
  if (m < 2) throw std::invalid_argument("branch_multiplicity: m >= 2");
  if (b <= 0 || b >= m)
    throw std::invalid_argument("branch_multiplicity: need 0 < b < m");
  if (gcd3(a, b, m) != 1)
    throw std::invalid_argument("branch_multiplicity: gcd(a, b, m) != 1");

  // Exact series of the first coordinate: rho^a t^b + rho^{-a} t^{m-b}.
  std::map<long long, CycInt> series;
  auto add_term = [&](long long exp, const CycInt& coef) {
    auto [it, fresh] = series.emplace(exp, coef);
    if (!fresh) it->second = it->second + coef;
  };
  add_term(b, CycInt::root_power(m, a));
  add_term(m - b, CycInt::root_power(m, -a));

  int ord = -1;
  for (const auto& [exp, coef] : series)
    if (!coef.is_zero()) {
      ord = static_cast<int>(exp);
      break;
    }
  if (ord < 0) return {-1, m, BranchStatus::Cancellation};
  return {ord, m,
          std::min(ord, m) == 1 ? BranchStatus::Smooth
                                : BranchStatus::Singular};
}

}  // namespace humbert
