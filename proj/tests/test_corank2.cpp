#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

#include "humbert/corank2.hpp"
#include "humbert/cyclotomic.hpp"
#include "humbert/numtheory.hpp"

using humbert::BranchStatus;
using humbert::BranchTag;
using humbert::Complex;
using humbert::PeriodMatrix;
using humbert::TorusPoint;

namespace {

const Complex I(0, 1);

// trial-factorization phi, independent of the library helper
long long phi_oracle(long long n) {
  long long out = 1;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    long long pk = 1;
    while (n % p == 0) {
      n /= p;
      pk *= p;
    }
    out *= pk - pk / p;
  }
  if (n > 1) out *= n - 1;
  return out;
}

TorusPoint random_torus_point(std::mt19937_64& rng) {
  auto u = [&rng](double lo, double hi) {
    return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
  };
  auto c = [&]() {
    return std::polar(u(0.3, 2.0), u(0.0, 2 * std::numbers::pi));
  };
  return {c(), c(), c()};
}

}  // namespace

TEST_CASE("cyclotomic reduction and equality") {
  using humbert::CycInt;
  // Phi_1 = x - 1, Phi_2 = x + 1, Phi_6 = x^2 - x + 1, Phi_12 = x^4 - x^2 + 1
  CHECK(humbert::cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
  CHECK(humbert::cyclotomic_polynomial(2) == std::vector<long long>{1, 1});
  CHECK(humbert::cyclotomic_polynomial(6) ==
        std::vector<long long>{1, -1, 1});
  CHECK(humbert::cyclotomic_polynomial(12) ==
        std::vector<long long>{1, 0, -1, 0, 1});

  // rho_6^3 = -1 and rho_4 + rho_4^{-1} = 0, exactly
  CHECK((CycInt::root_power(6, 3) + CycInt::root_power(6, 0)).is_zero());
  CHECK((CycInt::root_power(4, 1) + CycInt::root_power(4, 3)).is_zero());
  CHECK(CycInt::root_power(5, 2) == CycInt::root_power(5, 7));
  CHECK(!(CycInt::root_power(5, 1) == CycInt::root_power(5, 2)));
  // sum of all m-th roots of unity vanishes
  for (int m : {2, 3, 4, 6, 9, 12}) {
    CycInt total(m);
    for (int k = 0; k < m; ++k) total = total + CycInt::root_power(m, k);
    CHECK(total.is_zero());
  }
  // numeric embedding agrees with the exact representative
  const CycInt z = CycInt::root_power(12, 5) - CycInt::root_power(12, 2);
  const Complex expected = std::polar(1.0, 2 * std::numbers::pi * 5 / 12.0) -
                           std::polar(1.0, 2 * std::numbers::pi * 2 / 12.0);
  CHECK(std::abs(z.to_complex() - expected) < 1e-14);
}

TEST_CASE("e2_map evaluations") {
  const double q = std::exp(-2 * std::numbers::pi);
  auto p = humbert::e2_map({I, 0.0, I});
  CHECK(std::abs(p.t1 - q) < 1e-15);
  CHECK(std::abs(p.t2 - 1.0) < 1e-15);
  CHECK(std::abs(p.t3 - q) < 1e-15);

  auto half = humbert::e2_map({I, 0.5, I});
  CHECK(std::abs(half.t2 + 1.0) < 1e-14);  // e^{pi i} = -1

  auto two = humbert::e2_map({2.0 * I, I, 2.0 * I});
  CHECK(std::abs(two.t1 - std::exp(-4 * std::numbers::pi)) < 1e-15);
  CHECK(std::abs(two.t2 - std::exp(-2 * std::numbers::pi)) < 1e-15);
}

TEST_CASE("iota_n reference cases") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const TorusPoint t = random_torus_point(rng);

    const auto n0 = humbert::iota_n(t, 0);
    CHECK(std::abs(n0.x1 - t.t1 / t.t2) < 1e-12 * std::abs(n0.x1));
    CHECK(n0.x2 == t.t2);
    CHECK(std::abs(n0.x3 - t.t3 / t.t2) < 1e-12 * std::abs(n0.x3));

    // chart -1 coincides with the map j = (t1 t2, t2 t3, t2^{-1})
    const auto nm1 = humbert::iota_n(t, -1);
    CHECK(std::abs(nm1.x1 - t.t1 * t.t2) < 1e-12 * std::abs(nm1.x1));
    CHECK(std::abs(nm1.x2 - t.t2 * t.t3) < 1e-12 * std::abs(nm1.x2));
    CHECK(std::abs(nm1.x3 - 1.0 / t.t2) < 1e-12 * std::abs(nm1.x3));

    // the section-3 embedding equals chart 0 pointwise
    const auto emb = humbert::iota_sec3(t);
    CHECK(std::abs(emb[0] - n0.x1) < 1e-12 * std::abs(emb[0]));
    CHECK(std::abs(emb[1] - n0.x2) < 1e-12 * std::abs(emb[1]));
    CHECK(std::abs(emb[2] - n0.x3) < 1e-12 * std::abs(emb[2]));
  }

  const auto unit = humbert::iota_n({1.0, 1.0, 1.0}, 5);
  CHECK(unit.x1 == Complex(1, 0));
  CHECK(unit.x2 == Complex(1, 0));
  CHECK(unit.x3 == Complex(1, 0));

  const auto e = humbert::iota_sec3({Complex(0.3, 0.1), Complex(0.7, 0.0),
                                     Complex(0.3, 0.1)});
  CHECK(std::abs(e[0] - e[2]) < 1e-15);
}

TEST_CASE("psi_limit_family converges to (0, e^{2 pi i z}, 0)") {
  {
    const auto pts = humbert::psi_limit_family(2, 0.0, {40.0});
    const double dist = std::abs(pts[0][0]) + std::abs(pts[0][1] - 1.0) +
                        std::abs(pts[0][2]);
    CHECK(dist < 1e-6);
  }
  {
    const auto pts = humbert::psi_limit_family(2, 0.5, {40.0});
    const double dist = std::abs(pts[0][0]) + std::abs(pts[0][1] + 1.0) +
                        std::abs(pts[0][2]);
    CHECK(dist < 1e-6);
  }
  {
    const auto pts = humbert::psi_limit_family(3, I / 4.0, {60.0});
    const Complex target(std::exp(-std::numbers::pi / 2.0), 0.0);
    const double dist = std::abs(pts[0][0]) + std::abs(pts[0][1] - target) +
                        std::abs(pts[0][2]);
    CHECK(dist < 1e-8);
  }
  CHECK_THROWS_AS(humbert::psi_limit_family(5, Complex(0, 30.0), {1.0}),
                  humbert::NotInSiegel);
}

TEST_CASE("psi_limit_family decay rate e^{-2 pi h / (m-1)}") {
  for (int m : {2, 3, 5, 8}) {
    const std::vector<double> heights{30, 32, 34, 36, 38, 40};
    const Complex z(0.2, 0.1);
    const auto pts = humbert::psi_limit_family(m, z, heights);
    const Complex target = std::exp(2.0 * std::numbers::pi * I * z);
    std::vector<double> dist;
    for (const auto& p : pts)
      dist.push_back(std::abs(p[0]) + std::abs(p[1] - target) +
                     std::abs(p[2]));
    const double predicted = std::exp(-4.0 * std::numbers::pi / (m - 1));
    for (std::size_t i = 1; i < dist.size(); ++i) {
      const double ratio = dist[i] / dist[i - 1];
      CHECK(std::abs(ratio / predicted - 1.0) < 0.1);
    }
  }
}

TEST_CASE("chart_boundary_range") {
  CHECK(humbert::chart_boundary_range(0, 4) == std::set<int>{-1, 0});
  CHECK(humbert::chart_boundary_range(1, 4) == std::set<int>{0});
  CHECK(humbert::chart_boundary_range(3, 4) == std::set<int>{0});
  for (long long m = 2; m <= 50; ++m)
    for (long long b = 0; b < m; ++b) {
      const auto range = humbert::chart_boundary_range(b, m);
      for (int n : range) CHECK((n == -1 || n == 0));
      CHECK((range == std::set<int>{-1, 0}) == (b == 0));
    }
}

TEST_CASE("boundary intersection points, small m") {
  {
    const auto bi = humbert::boundary_intersection_points(2);
    REQUIRE(bi.points.size() == 2);
    CHECK(bi.points[0].tag == BranchTag::RootOfUnity);
    CHECK(std::abs(bi.points[0].sym_sum + 1.0) < 1e-15);  // (-1, 0)
    CHECK(bi.points[1].tag == BranchTag::Origin);
  }
  {
    const auto bi = humbert::boundary_intersection_points(4);
    REQUIRE(bi.points.size() == 3);  // phi(4)+1
    std::set<long long> exps;
    for (const auto& p : bi.points)
      if (p.tag == BranchTag::RootOfUnity) {
        exps.insert(p.unit_exp);
        CHECK(std::abs(p.sym_sum - std::polar(1.0, std::numbers::pi *
                                                       p.unit_exp / 2.0)) <
              1e-14);
      }
    CHECK(exps == std::set<long long>{1, 3});  // i and i^3
  }
  CHECK(humbert::boundary_intersection_points(6).points.size() == 3);
}

TEST_CASE("boundary point count is phi(m)+1 with exact dedup") {
  for (int m = 2; m <= 50; ++m) {
    const auto bi = humbert::boundary_intersection_points(m);
    CHECK(static_cast<long long>(bi.points.size()) == phi_oracle(m) + 1);
    int origins = 0;
    std::set<std::vector<long long>> keys;
    for (const auto& p : bi.points) {
      keys.insert(p.key);
      if (p.tag == BranchTag::Origin) {
        ++origins;
      } else {
        CHECK(std::gcd(p.unit_exp, static_cast<long long>(m)) == 1);
      }
    }
    CHECK(origins == 1);
    CHECK(keys.size() == bi.points.size());  // pairwise distinct exact keys
  }
}

TEST_CASE("chart -1 gives the same point set plus nothing new") {
  for (int m = 2; m <= 30; ++m) CHECK(humbert::verify_chart_reduction(m));
}

TEST_CASE("numeric branch limits approach the exact points") {
  // walk t -> 0 along a few branches and compare with the symbolic limit
  for (int m : {3, 5}) {
    const auto bi = humbert::boundary_intersection_points(m);
    for (const auto& br : bi.branches) {
      const Complex rho = std::polar(1.0, 2 * std::numbers::pi * br.a / m);
      const double t = 1e-4;
      const Complex x = std::pow(t, static_cast<double>(br.b)) * rho;
      const Complex y = std::pow(t, static_cast<double>(m - br.b)) *
                        (1.0 / rho);
      const Complex sym_sum = x + y, sym_prod = x * y;
      CHECK(std::abs(sym_sum - br.sym_sum) < 1e-3);
      CHECK(std::abs(sym_prod - br.sym_prod) < 1e-3);
    }
  }
}

TEST_CASE("branch multiplicity orders") {
  {
    const auto r = humbert::branch_multiplicity(0, 1, 3);
    CHECK(r.ord_sum == 1);
    CHECK(r.ord_prod == 3);
    CHECK(r.status == BranchStatus::Smooth);
  }
  {
    const auto r = humbert::branch_multiplicity(1, 2, 4);
    CHECK(r.status == BranchStatus::Cancellation);  // i + i^{-1} = 0
  }
  {
    const auto r = humbert::branch_multiplicity(1, 2, 5);
    CHECK(r.ord_sum == 2);
    CHECK(r.ord_prod == 5);
    CHECK(r.status == BranchStatus::Singular);
  }
  CHECK_THROWS_AS(humbert::branch_multiplicity(1, 0, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(humbert::branch_multiplicity(0, 2, 4),
                  std::invalid_argument);
}

TEST_CASE("branch orders follow min(b, m-b) away from cancellation") {
  for (int m = 2; m <= 24; ++m)
    for (long long b = 1; b < m; ++b)
      for (long long a = 0; a < m; ++a) {
        if (std::gcd(std::gcd(a, b), static_cast<long long>(m)) != 1) continue;
        const auto r = humbert::branch_multiplicity(a, b, m);
        if (r.status == BranchStatus::Cancellation) {
          CHECK(2 * b == m);
          continue;
        }
        CHECK(r.ord_sum == std::min(b, m - b));
        CHECK((r.status == BranchStatus::Smooth) == (r.ord_sum == 1));
      }
}
