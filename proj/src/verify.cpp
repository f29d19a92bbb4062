#include "humbert/verify.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "humbert/corank1.hpp"
#include "humbert/corank2.hpp"
#include "humbert/families.hpp"
#include "humbert/mumford.hpp"
#include "humbert/numtheory.hpp"
#include "humbert/siegel.hpp"

namespace humbert {

namespace {

double unif(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
}

long long draw_range(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

CriterionResult phi_count(const AcceptanceConfig& cfg) {
  bool pass = true;
  std::ostringstream detail;
  for (int m = 2; m <= cfg.phi_m_max; ++m) {
    const auto bi = boundary_intersection_points(m);
    const long long expected = euler_phi(m) + 1;
    int origins = 0;
    for (const auto& p : bi.points)
      if (p.tag == BranchTag::Origin) ++origins;
    if (static_cast<long long>(bi.points.size()) != expected || origins != 1) {
      pass = false;
      detail << "m=" << m << " count=" << bi.points.size()
             << " expected=" << expected << "; ";
    }
  }
  if (pass) detail << "phi(m)+1 for all m in [2," << cfg.phi_m_max << "]";
  return {1, "boundary point count phi(m)+1", pass, detail.str()};
}

CriterionResult sl2_transitivity(const AcceptanceConfig& cfg) {
  bool pass = true;
  std::ostringstream detail;
  for (long long m = 2; m <= cfg.sl2_m_max; ++m) {
    std::set<TorsionClass> full;
    for (long long c = 0; c < m; ++c)
      for (long long e = 0; e < m; ++e)
        if (std::gcd(std::gcd(c, e), m) == 1) full.emplace(c, e, m);
    for (const auto& start : full) {
      if (sl2_mod_m_orbit(m, start) != full) {
        pass = false;
        detail << "m=" << m << " start=(" << start.c << "," << start.e
               << ") orbit != full set; ";
        break;
      }
    }
  }
  if (pass) detail << "transitive on order-m classes for all m in [2,"
                   << cfg.sl2_m_max << "]";
  return {2, "SL(2,Z/m) transitivity", pass, detail.str()};
}

CriterionResult corank1_limit_law(const AcceptanceConfig& cfg) {
  std::mt19937_64 rng(cfg.seed + 3);
  const std::vector<double> heights{5, 10, 15, 20, 25, 30, 35, 40};
  bool pass = true;
  std::ostringstream detail;
  for (int trial = 0; trial < cfg.corank1_samples && pass; ++trial) {
    const long long m = draw_range(rng, 2, 10);
    long long c = 0, e = 0;
    do {
      c = draw_range(rng, 0, m);
      e = draw_range(rng, 0, m);
    } while (std::gcd(std::gcd(m, c), e) != 1);
    const long long b = (rng() & 1) ? m : -m;
    const DiscriminantVector v(0, b, c, 0, e);
    const Complex tau22(unif(rng, -0.5, 0.5), unif(rng, 0.5, 2.5));

    const auto curve = corank1_limit(v);
    if (!curve) {
      pass = false;
      detail << "corank1_limit empty for a (0,m,c,0,e) vector";
      break;
    }
    const Corank1Point target = curve->at(tau22, curve->tracked_sign);
    const auto track = track_limit_corank1(v, tau22, heights);
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < track.size(); ++i) {
      const double dist = std::abs(track[i].q - target.q) +
                          std::abs(track[i].z - target.z) +
                          std::abs(track[i].tau - target.tau);
      if (dist >= prev) {
        pass = false;
        detail << "distance not monotone at h=" << heights[i];
        break;
      }
      prev = dist;
    }
    if (pass && prev >= 1e-6) {
      pass = false;
      detail << "distance " << prev << " at h=40 above 1e-6";
    }
  }
  if (pass) detail << cfg.corank1_samples << " tracked samples within 1e-6";
  return {3, "corank-1 limit law", pass, detail.str()};
}

CriterionResult corank2_limit_law(const AcceptanceConfig& cfg) {
  std::mt19937_64 rng(cfg.seed + 4);
  bool pass = true;
  std::ostringstream detail;
  for (int trial = 0; trial < cfg.corank2_samples && pass; ++trial) {
    const int m = static_cast<int>(draw_range(rng, 2, 10));
    const Complex z(unif(rng, -0.5, 0.5), unif(rng, -0.3, 0.3));
    const auto pts = psi_limit_family(m, z, {60.0});
    const Complex target = std::exp(Complex(0, 2 * std::numbers::pi) * z);
    const double dist = std::abs(pts[0][0]) + std::abs(pts[0][1] - target) +
                        std::abs(pts[0][2]);
    if (dist >= 1e-6) {
      pass = false;
      detail << "m=" << m << " distance " << dist << " at h=60";
    }
  }
  if (pass) detail << cfg.corank2_samples << " samples within 1e-6 at h=60";
  return {4, "corank-2 limit law", pass, detail.str()};
}

CriterionResult y_algebra(const AcceptanceConfig& cfg) {
  const auto report = verify_group_law(cfg.y_pairs, cfg.seed + 5);
  std::ostringstream detail;
  detail << "rst=" << (report.rst_product_trivial ? "1" : "!=1")
         << ", homomorphism on " << report.samples << " pairs";
  return {5, "Y generators and action algebra",
          report.rst_product_trivial && report.homomorphism_ok, detail.str()};
}

CriterionResult ideal_invariance(const AcceptanceConfig& cfg) {
  bool pass = true;
  std::ostringstream detail;
  for (int m = 2; m <= cfg.ideal_m_max && pass; ++m) {
    for (long long c = 0; c <= m && pass; ++c) {
      const FamilyId fam = FamilyId::finite(c, 1);
      if (!verify_ideal_invariance(m, fam).reduces_to_identity) {
        pass = false;
        detail << "generator fails at m=" << m << " c=" << c;
      }
      // negative controls, unless they happen to land in Y_c = Z (c, m)
      auto in_Yc = [&](const YElement& y) {
        return y.beta % m == 0 && y.alpha == (y.beta / m) * c;
      };
      for (const YElement y : {YElement{c, m - 1}, YElement{c + 1, m}}) {
        if (in_Yc(y)) continue;
        if (check_ideal_invariance(m, fam, y).reduces_to_identity) {
          pass = false;
          detail << "negative control (" << y.alpha << "," << y.beta
                 << ") passes at m=" << m << " c=" << c;
        }
      }
    }
    const FamilyId inf = FamilyId::infinity();
    if (pass && !verify_ideal_invariance(m, inf).reduces_to_identity) {
      pass = false;
      detail << "infinity generator fails at m=" << m;
    }
    auto in_Yinf = [&](const YElement& y) {
      return y.alpha == -y.beta * (m - 1);
    };
    for (const YElement y :
         {YElement{-(static_cast<long long>(m) - 2), 1},
          YElement{-(static_cast<long long>(m) - 1), 2}}) {
      if (in_Yinf(y)) continue;
      if (pass && check_ideal_invariance(m, inf, y).reduces_to_identity) {
        pass = false;
        detail << "infinity negative control (" << y.alpha << "," << y.beta
               << ") passes at m=" << m;
      }
    }
  }
  if (pass) detail << "generators pass, controls fail, m in [2,"
                   << cfg.ideal_m_max << "]";
  return {6, "ideal invariance on the loci", pass, detail.str()};
}

CriterionResult fiber_polygons(const AcceptanceConfig& cfg) {
  bool pass = true;
  std::ostringstream detail;
  for (int m = 2; m <= cfg.fiber_m_max && pass; ++m) {
    for (StratumId s : {StratumId::I, StratumId::II, StratumId::III}) {
      const int shift = stratum_shift(m, s);
      const DualGraph fiber = degenerate_fiber(m, s);
      const DualGraph oracle = quotient_cycle_oracle(3 * shift + 2, shift);
      const int expected =
          s == StratumId::I ? m : (s == StratumId::II ? m - 1 : 2 * m - 1);
      if (static_cast<int>(fiber.vertices.size()) != expected ||
          fiber.vertices.size() != oracle.vertices.size() ||
          fiber.edges != oracle.edges ||
          fiber.vertices.size() != fiber.edges.size()) {
        pass = false;
        detail << "mismatch at m=" << m << " stratum " << to_string(s);
        break;
      }
    }
  }
  if (pass) detail << "cycle lengths (m, m-1, 2m-1) vs oracle, m in [2,"
                   << cfg.fiber_m_max << "]";
  return {7, "degenerate fiber polygons", pass, detail.str()};
}

CriterionResult exponent_criterion(const AcceptanceConfig& cfg) {
  std::mt19937_64 rng(cfg.seed + 8);
  bool pass = true;
  std::ostringstream detail;
  for (int m = 2; m <= cfg.exponent_m_max && pass; ++m) {
    // gcd(m, c, 1) = 1 holds for every c, so these are all admissible.
    const std::vector<FamilyId> fams{
        FamilyId::infinity(), FamilyId::finite(0, 1), FamilyId::finite(1, 1),
        FamilyId::finite(m, 1)};
    for (const FamilyId& fam : fams) {
      const DiscriminantVector v = family_vector(fam, m);
      const PeriodMatrix tau = sample_point(v, rng());
      const auto w = subvariety_image(v, tau);
      // expected line: (1,0) for finite, (-1,1) for infinity
      const std::array<Complex, 2> expected =
          fam.inf ? std::array<Complex, 2>{Complex(-1, 0), Complex(1, 0)}
                  : std::array<Complex, 2>{Complex(1, 0), Complex(0, 0)};
      const double cr = std::abs(w[0] * expected[1] - w[1] * expected[0]);
      if (cr > 1e-8) {
        pass = false;
        detail << "line mismatch at m=" << m;
        break;
      }
      const long long exponent = exponent_of_subtorus(v, tau);
      const long long closed =
          std::llabs(subtorus_lattice_closed_form(fam, m).pfaffian);
      if (exponent != m || closed != m) {
        pass = false;
        detail << "exponent " << exponent << " (closed form " << closed
               << ") != m=" << m;
        break;
      }
    }
  }
  if (pass) detail << "W lines and pfaffian exponent m for m in [2,"
                   << cfg.exponent_m_max << "], both families";
  return {8, "exponent criterion end-to-end", pass, detail.str()};
}

CriterionResult humbert_identities(const AcceptanceConfig& cfg) {
  std::mt19937_64 rng(cfg.seed + 9);
  bool pass = true;
  std::ostringstream detail;
  int done = 0;
  while (done < cfg.humbert_draws && pass) {
    const int m = static_cast<int>(draw_range(rng, 2, 10));
    FamilyId fam = FamilyId::infinity();
    if (rng() & 1) {
      long long c = 0, e = 0;
      do {
        c = draw_range(rng, 0, m);
        e = draw_range(rng, 0, m);
      } while (std::gcd(std::gcd<long long>(m, c), e) != 1);
      fam = FamilyId::finite(c, e);
    }
    const Complex p1(unif(rng, -0.5, 0.5), unif(rng, 1.0, 2.5));
    const Complex p2 = fam.inf
                           ? Complex(unif(rng, -0.2, 0.2), unif(rng, -0.2, 0.2))
                           : Complex(unif(rng, -0.5, 0.5), unif(rng, 1.0, 2.5));
    PeriodMatrix tau;
    try {
      tau = family_period_matrix(fam, m, p1, p2);
    } catch (const NotInSiegel&) {
      continue;  // redraw
    }
    ++done;
    const DiscriminantVector v = family_vector(fam, m);
    if (std::abs(humbert_residual(v, tau)) >= 1e-12) {
      pass = false;
      detail << "residual above 1e-12 at m=" << m;
    }
  }
  if (pass) detail << done << " family draws with residual < 1e-12";
  return {9, "Humbert identities of the families", pass, detail.str()};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg) {
  return {phi_count(cfg),         sl2_transitivity(cfg),
          corank1_limit_law(cfg), corank2_limit_law(cfg),
          y_algebra(cfg),         ideal_invariance(cfg),
          fiber_polygons(cfg),    exponent_criterion(cfg),
          humbert_identities(cfg)};
}

}  // namespace humbert
