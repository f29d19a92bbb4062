#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "humbert/families.hpp"

using humbert::Complex;
using humbert::DiscriminantVector;
using humbert::FamilyId;
using humbert::PeriodMatrix;
using humbert::Rational;

namespace {
const Complex I(0, 1);
}

TEST_CASE("family period matrices") {
  const PeriodMatrix ce =
      humbert::family_period_matrix(FamilyId::finite(1, 1), 2, I, I);
  CHECK(ce.tau11 == I);
  CHECK(ce.tau22 == I);
  CHECK(std::abs(ce.tau12 - (-(I + 1.0) / 2.0)) < 1e-15);

  const PeriodMatrix inf =
      humbert::family_period_matrix(FamilyId::infinity(), 2, I, 0.0);
  CHECK(inf.tau11 == I);
  CHECK(inf.tau12 == Complex(0, 0));
  CHECK(inf.tau22 == I);

  CHECK_THROWS_AS(
      humbert::family_period_matrix(FamilyId::finite(1, 1), 2, -I, I),
      humbert::NotInSiegel);
  CHECK_THROWS_AS(humbert::family_vector(FamilyId::finite(2, 2), 4),
                  std::invalid_argument);
}

TEST_CASE("family matrices satisfy the Humbert identity of their vector") {
  std::mt19937_64 rng(19);
  auto u = [&rng](double lo, double hi) {
    return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
  };
  int done = 0;
  while (done < 500) {
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
    const Complex p1(u(-0.5, 0.5), u(1.0, 2.5));
    const Complex p2 = fam.inf ? Complex(u(-0.2, 0.2), u(-0.2, 0.2))
                               : Complex(u(-0.5, 0.5), u(1.0, 2.5));
    PeriodMatrix tau;
    try {
      tau = humbert::family_period_matrix(fam, m, p1, p2);
    } catch (const humbert::NotInSiegel&) {
      continue;
    }
    ++done;
    const DiscriminantVector v = humbert::family_vector(fam, m);
    CHECK(std::abs(humbert_residual(v, tau)) < 1e-12);
  }
}

TEST_CASE("M_v entries as displayed") {
  for (long long m : {2, 3, 5}) {
    const DiscriminantVector v(0, m, 1, 0, 1);
    const auto data = humbert::build_Mv(v);
    CHECK(data.Mv[0][2] == Rational(0));       // -(b-m)/2 with b = m
    CHECK(data.Mv[1][2] == Rational(-1));      // -c
    CHECK(data.Mv[1][3] == Rational(m));       // (b+m)/2
    CHECK(data.Mv[2][3] == Rational(-1));      // -e
  }
  {
    // infinity vector at m = 3: b = -1, so -(b-m)/2 = 2
    const DiscriminantVector v(1, -1, -2, 0, 0);
    const auto data = humbert::build_Mv(v);
    CHECK(data.Mv[0][3] == Rational(1));   // a
    CHECK(data.Mv[1][2] == Rational(2));   // -c
    CHECK(data.Mv[0][2] == Rational(2));   // -(b-m)/2
    CHECK(data.Mv[1][3] == Rational(1));   // (b+m)/2
  }
  // antisymmetry for arbitrary integer vectors
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    long long c = static_cast<long long>(rng() % 9) - 4;
    long long e = static_cast<long long>(rng() % 9) - 4;
    long long m = 2 + static_cast<long long>(rng() % 5);
    if (std::gcd(std::gcd(m, c), e) != 1) continue;
    const auto data = humbert::build_Mv(DiscriminantVector(0, m, c, 0, e));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        CHECK(data.Mv[i][j] == -data.Mv[j][i]);
  }
}

TEST_CASE("subvariety image is the fixed line of each family") {
  std::mt19937_64 rng(29);
  for (int m = 2; m <= 6; ++m) {
    for (int trial = 0; trial < 100; ++trial) {
      {
        const FamilyId fam = FamilyId::finite(1, 1);
        const auto v = humbert::family_vector(fam, m);
        const auto tau = humbert::sample_point(v, rng());
        const auto w = humbert::subvariety_image(v, tau);
        // line <(1, 0)>: cross with (1,0) vanishes
        CHECK(std::abs(w[0] * 0.0 - w[1] * 1.0) < 1e-8);
      }
      {
        const auto v = humbert::family_vector(FamilyId::infinity(), m);
        const auto tau = humbert::sample_point(v, rng());
        const auto w = humbert::subvariety_image(v, tau);
        // line <(-1, 1)>
        CHECK(std::abs(w[0] * 1.0 - w[1] * (-1.0)) < 1e-8);
      }
    }
  }
  // tau off the locus violates the precondition
  const DiscriminantVector v(0, 2, 1, 0, 1);
  const PeriodMatrix off{I, I / 3.0, I};
  CHECK_THROWS_AS(humbert::subvariety_image(v, off), std::invalid_argument);
}

TEST_CASE("exponent of the embedded curve equals m") {
  std::mt19937_64 rng(37);
  {
    const DiscriminantVector v(0, 2, 1, 0, 1);
    const auto tau = humbert::sample_point(v, 3);
    CHECK(humbert::exponent_of_subtorus(v, tau) == 2);
  }
  {
    const auto v = humbert::family_vector(FamilyId::infinity(), 3);
    const auto tau = humbert::sample_point(v, 4);
    CHECK(humbert::exponent_of_subtorus(v, tau) == 3);
  }
  for (int m = 2; m <= 10; ++m) {
    const DiscriminantVector v(0, m, 0, 0, 1);
    const auto tau = humbert::sample_point(v, rng());
    CHECK(humbert::exponent_of_subtorus(v, tau) == m);
  }
}

TEST_CASE("closed-form lattices agree with the search oracle") {
  std::mt19937_64 rng(41);
  for (int m = 2; m <= 8; ++m) {
    for (const FamilyId fam :
         {FamilyId::finite(1, 1), FamilyId::finite(0, 1),
          FamilyId::infinity()}) {
      const auto closed = humbert::subtorus_lattice_closed_form(fam, m);
      CHECK(std::llabs(closed.pfaffian) == m);

      const auto v = humbert::family_vector(fam, m);
      const auto tau = humbert::sample_point(v, rng());
      const auto searched = humbert::subtorus_lattice(v, tau);
      CHECK(std::llabs(searched.pfaffian) == m);

      // closed-form basis vectors embed into the same complex line
      const auto w = humbert::subvariety_image(v, tau);
      for (const auto& lam : closed.basis) {
        const Complex z1 = static_cast<double>(lam[0]) +
                           static_cast<double>(lam[2]) * tau.tau11 +
                           static_cast<double>(lam[3]) * tau.tau12;
        const Complex z2 = static_cast<double>(lam[1]) +
                           static_cast<double>(lam[2]) * tau.tau12 +
                           static_cast<double>(lam[3]) * tau.tau22;
        CHECK(std::abs(z1 * w[1] - z2 * w[0]) < 1e-8);
      }
    }
  }
}

TEST_CASE("exponential image loci") {
  CHECK(humbert::exp_image_locus(FamilyId::finite(1, 1)).text() == "U = 1");
  CHECK(humbert::exp_image_locus(FamilyId::infinity()).text() == "UV = 1");

  // exp of t(-1, 1) satisfies UV = 1 identically
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const Complex t(((rng() >> 11) * 0x1.0p-53) * 2 - 1,
                    ((rng() >> 11) * 0x1.0p-53) * 2 - 1);
    const Complex twopii(0, 2 * std::numbers::pi);
    const Complex V = std::exp(twopii * (-t));
    const Complex U = std::exp(twopii * t);
    CHECK(std::abs(U * V - 1.0) < 1e-12);
    // and exp of t(1, 0) satisfies U = 1
    const Complex U2 = std::exp(twopii * Complex(0, 0));
    CHECK(std::abs(U2 - 1.0) < 1e-15);
  }
}
