// Acceptance suite: one test case per documented criterion, each printing a
// pass/fail line. Oracles here (totient, order counts, closed forms) are
// written independently of the library paths they check.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

#include "humbert/corank1.hpp"
#include "humbert/corank2.hpp"
#include "humbert/families.hpp"
#include "humbert/mumford.hpp"
#include "humbert/siegel.hpp"

#ifndef HUMBERT_CLI_PATH
#define HUMBERT_CLI_PATH "humbert"
#endif

using humbert::Complex;
using humbert::DiscriminantVector;
using humbert::FamilyId;
using humbert::PeriodMatrix;
using humbert::StratumId;
using humbert::TorsionClass;

namespace {

void report(int id, const char* name, bool pass) {
  std::printf("[acceptance] criterion %2d  %-42s %s\n", id, name,
              pass ? "PASS" : "FAIL");
  std::fflush(stdout);
}

// independent trial-factorization totient
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

double unif(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
}

}  // namespace

TEST_CASE("criterion 1: phi(m)+1 boundary points for m in [2,50]") {
  bool pass = true;
  for (int m = 2; m <= 50 && pass; ++m) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto bi = humbert::boundary_intersection_points(m);
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    const long long expected = phi_oracle(m) + 1;
    if (static_cast<long long>(bi.points.size()) != expected) pass = false;
    if (secs >= 1.0) pass = false;  // runtime budget: < 1 s per m
    int origins = 0;
    std::set<std::vector<long long>> keys;
    for (const auto& p : bi.points) {
      keys.insert(p.key);
      if (p.tag == humbert::BranchTag::Origin) ++origins;
    }
    if (origins != 1 || keys.size() != bi.points.size()) pass = false;
  }
  report(1, "phi(m)+1 boundary point count, exact", pass);
  CHECK(pass);
}

TEST_CASE("criterion 2: SL(2,Z/m) transitivity for m in [2,30]") {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  for (long long m = 2; m <= 30 && pass; ++m) {
    std::set<TorsionClass> full;
    for (long long c = 0; c < m; ++c)
      for (long long e = 0; e < m; ++e)
        if (std::gcd(std::gcd(c, e), m) == 1) full.emplace(c, e, m);
    for (const auto& start : full)
      if (humbert::sl2_mod_m_orbit(m, start) != full) {
        pass = false;
        break;
      }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (secs >= 10.0) pass = false;
  report(2, "SL(2,Z/m) orbit = all order-m classes", pass);
  CHECK(pass);
}

TEST_CASE("criterion 3: corank-1 limit law on 200 samples") {
  std::mt19937_64 rng(1003);
  const std::vector<double> heights{5, 10, 15, 20, 25, 30, 35, 40};
  bool pass = true;
  for (int trial = 0; trial < 200 && pass; ++trial) {
    const long long m = 2 + static_cast<long long>(rng() % 9);
    long long c, e;
    do {
      c = static_cast<long long>(rng() % (m + 1));
      e = static_cast<long long>(rng() % (m + 1));
    } while (std::gcd(std::gcd(m, c), e) != 1);
    const DiscriminantVector v(0, (rng() & 1) ? m : -m, c, 0, e);
    const Complex tau22(unif(rng, -0.5, 0.5), unif(rng, 0.5, 2.5));

    // tracked branch target: z = -(c tau + e)/b
    const Complex target_z = -(static_cast<double>(c) * tau22 +
                               static_cast<double>(e)) /
                             static_cast<double>(v.b);
    const auto track = humbert::track_limit_corank1(v, tau22, heights);
    double prev = std::numeric_limits<double>::infinity();
    for (const auto& p : track) {
      const double dist = std::abs(p.q) + std::abs(p.z - target_z) +
                          std::abs(p.tau - tau22);
      if (dist >= prev) pass = false;
      prev = dist;
    }
    if (prev >= 1e-6) pass = false;
  }
  report(3, "e1 track hits (0, -(c tau+e)/m, tau) at h=40", pass);
  CHECK(pass);
}

TEST_CASE("criterion 4: corank-2 limit law on 100 samples") {
  std::mt19937_64 rng(1004);
  bool pass = true;
  for (int trial = 0; trial < 100 && pass; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 9);
    const Complex z(unif(rng, -0.5, 0.5), unif(rng, -0.3, 0.3));
    const auto pts = humbert::psi_limit_family(m, z, {60.0});
    const Complex target =
        std::exp(Complex(0, 2 * std::numbers::pi) * z);
    const double dist = std::abs(pts[0][0]) + std::abs(pts[0][1] - target) +
                        std::abs(pts[0][2]);
    if (dist >= 1e-6) pass = false;
  }
  report(4, "psi(T_{z,hi}) hits (0, e^{2 pi i z}, 0) at h=60", pass);
  CHECK(pass);
}

TEST_CASE("criterion 5: period group algebra, exact") {
  const auto rep = humbert::verify_group_law(1000, 1005);
  const bool pass = rep.rst_product_trivial && rep.homomorphism_ok;
  report(5, "r s t = 1 and action homomorphism on 1000 pairs", pass);
  CHECK(pass);
}

TEST_CASE("criterion 6: ideal invariance with negative controls") {
  bool pass = true;
  for (int m = 2; m <= 20 && pass; ++m) {
    for (long long c = 0; c <= m && pass; ++c) {
      const FamilyId fam = FamilyId::finite(c, 1);
      if (!humbert::verify_ideal_invariance(m, fam).reduces_to_identity)
        pass = false;
      auto in_Yc = [&](const humbert::YElement& y) {
        return y.beta % m == 0 && y.alpha == (y.beta / m) * c;
      };
      for (const humbert::YElement y :
           {humbert::YElement{c, m - 1}, humbert::YElement{c + 1, m}}) {
        if (in_Yc(y)) continue;
        if (humbert::check_ideal_invariance(m, fam, y).reduces_to_identity)
          pass = false;
      }
    }
    const FamilyId inf = FamilyId::infinity();
    if (!humbert::verify_ideal_invariance(m, inf).reduces_to_identity)
      pass = false;
    for (const humbert::YElement y :
         {humbert::YElement{-(static_cast<long long>(m) - 2), 1},
          humbert::YElement{-(static_cast<long long>(m) - 1), 2}}) {
      if (y.alpha == -y.beta * (m - 1)) continue;
      if (humbert::check_ideal_invariance(m, inf, y).reduces_to_identity)
        pass = false;
    }
  }
  report(6, "Y_c and Y_inf fix the ideals; controls fail", pass);
  CHECK(pass);
}

TEST_CASE("criterion 7: fiber polygon lengths match the oracle") {
  bool pass = true;
  for (int m = 2; m <= 12 && pass; ++m)
    for (StratumId s : {StratumId::I, StratumId::II, StratumId::III}) {
      const int expected =
          s == StratumId::I ? m : (s == StratumId::II ? m - 1 : 2 * m - 1);
      const auto fiber = humbert::degenerate_fiber(m, s);
      const int shift = humbert::stratum_shift(m, s);
      const auto oracle = humbert::quotient_cycle_oracle(3 * shift + 4, shift);
      if (static_cast<int>(fiber.vertices.size()) != expected ||
          fiber.vertices != oracle.vertices || fiber.edges != oracle.edges ||
          fiber.vertices.size() != fiber.edges.size()) {
        pass = false;
        break;
      }
    }
  report(7, "cycle lengths (m, m-1, 2m-1), genus 1, vs oracle", pass);
  CHECK(pass);
}

TEST_CASE("criterion 8: exponent criterion end-to-end") {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1008);
  bool pass = true;
  for (int m = 2; m <= 10 && pass; ++m) {
    for (const FamilyId fam : {FamilyId::finite(1, 1), FamilyId::infinity()}) {
      const DiscriminantVector v = humbert::family_vector(fam, m);
      const PeriodMatrix tau = humbert::sample_point(v, rng());
      const auto w = humbert::subvariety_image(v, tau);
      const double cr = fam.inf ? std::abs(w[0] * 1.0 - w[1] * (-1.0))
                                : std::abs(w[1]);
      if (cr > 1e-8) pass = false;
      if (humbert::exponent_of_subtorus(v, tau) != m) pass = false;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (secs >= 30.0) pass = false;
  report(8, "W lines and restricted pfaffian = m", pass);
  CHECK(pass);
}

TEST_CASE("criterion 9: Humbert identities of the families") {
  std::mt19937_64 rng(1009);
  bool pass = true;
  int done = 0;
  while (done < 1000 && pass) {
    const int m = 2 + static_cast<int>(rng() % 9);
    FamilyId fam = FamilyId::infinity();
    if (rng() & 1) {
      long long c, e;
      do {
        c = static_cast<long long>(rng() % (m + 1));
        e = static_cast<long long>(rng() % (m + 1));
      } while (std::gcd(std::gcd<long long>(m, c), e) != 1);
      fam = FamilyId::finite(c, e);
    }
    const Complex p1(unif(rng, -0.5, 0.5), unif(rng, 1.0, 2.5));
    const Complex p2 = fam.inf
                           ? Complex(unif(rng, -0.2, 0.2), unif(rng, -0.2, 0.2))
                           : Complex(unif(rng, -0.5, 0.5), unif(rng, 1.0, 2.5));
    PeriodMatrix tau;
    try {
      tau = humbert::family_period_matrix(fam, m, p1, p2);
    } catch (const humbert::NotInSiegel&) {
      continue;
    }
    ++done;
    const DiscriminantVector v = humbert::family_vector(fam, m);
    if (std::abs(humbert_residual(v, tau)) >= 1e-12) pass = false;
  }
  report(9, "family matrices land on H2(v), 1000 draws", pass);
  CHECK(pass);
}

TEST_CASE("criterion 10: verify-all --m-max 12 exits 0 in under 2 minutes") {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string cmd =
      std::string(HUMBERT_CLI_PATH) + " verify-all --m-max 12 > /dev/null";
  const int status = std::system(cmd.c_str());
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  const bool pass = status == 0 && secs < 120.0;
  report(10, "verify-all --m-max 12 exit 0, < 2 min", pass);
  CHECK(pass);
}
