#include "humbert/corank1.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "humbert/numtheory.hpp"

namespace humbert {

namespace {
const Complex kTwoPiI(0.0, 2.0 * std::numbers::pi);
}

Corank1Point e1_map(const PeriodMatrix& tau) {
  return {std::exp(kTwoPiI * tau.tau11), tau.tau12, tau.tau22};
}

Corank1Point Corank1LimitCurve::at(Complex tau, int sign) const {
  const Complex z = static_cast<double>(sign) *
                    (static_cast<double>(c) * tau + static_cast<double>(e)) /
                    static_cast<double>(m);
  return {Complex(0.0, 0.0), z, tau};
}

std::optional<Corank1LimitCurve> corank1_limit(const DiscriminantVector& v) {
  if (v.a != 0 || v.d != 0) return std::nullopt;
  // Eq. (1) forces |b| = m here; sequences on H2(v) have z_n = -(c tau + e)/b.
  return Corank1LimitCurve{v.c, v.e, v.m, v.b > 0 ? -1 : 1};
}

std::vector<Corank1Point> track_limit_corank1(
    const DiscriminantVector& v, Complex tau22,
    const std::vector<double>& heights) {
  if (v.a != 0 || v.d != 0)
    throw InvalidVector(
        "track_limit_corank1: a or d nonzero, (a - d tau) omega diverges");
  if (tau22.imag() <= 0)
    throw std::invalid_argument("track_limit_corank1: Im(tau22) must be > 0");

  const Complex z = -(static_cast<double>(v.c) * tau22 +
                      static_cast<double>(v.e)) /
                    static_cast<double>(v.b);
  std::vector<Corank1Point> out;
  out.reserve(heights.size());
  for (double h : heights) {
    if (h <= 0)
      throw std::invalid_argument("track_limit_corank1: heights must be > 0");
    out.push_back(e1_map({Complex(0.0, h), z, tau22}));
  }
  return out;
}

TorsionClass::TorsionClass(long long c_, long long e_, long long m_)
    : c(0), e(0), m(m_) {
  if (m_ < 2) throw std::invalid_argument("TorsionClass: m must be >= 2");
  c = mod_norm(c_, m_);
  e = mod_norm(e_, m_);
  if (std::gcd(std::gcd(c, e), m) != 1)
    throw std::invalid_argument("TorsionClass: gcd(c, e, m) = " +
                                std::to_string(std::gcd(std::gcd(c, e), m)) +
                                ", not of order m");
}

TorsionClass TorsionClass::canonical() const {
  TorsionClass neg(mod_norm(-c, m), mod_norm(-e, m), m);
  return *this < neg ? *this : neg;
}

std::vector<Mat2> sl2_mod_m_elements(long long m) {
  if (m < 2 || m > 64)
    throw std::invalid_argument("sl2_mod_m_elements: m out of desk range");
  std::vector<Mat2> out;
  for (long long a = 0; a < m; ++a)
    for (long long b = 0; b < m; ++b)
      for (long long c = 0; c < m; ++c)
        for (long long d = 0; d < m; ++d)
          if (mod_norm(a * d - b * c, m) == 1)
            out.push_back(Mat2{{{a, b}, {c, d}}});
  return out;
}

std::set<TorsionClass> sl2_mod_m_orbit(long long m, const TorsionClass& start) {
  if (start.m != m)
    throw std::invalid_argument("sl2_mod_m_orbit: modulus mismatch");
  static std::map<long long, std::vector<Mat2>> cache;
  static std::mutex mu;
  const std::vector<Mat2>* group = nullptr;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, sl2_mod_m_elements(m)).first;
    group = &it->second;
  }
  std::vector<char> seen(m * m, 0);
  std::set<TorsionClass> orbit;
  for (const Mat2& g : *group) {
    const long long c = mod_norm(start.c * g[0][0] + start.e * g[1][0], m);
    const long long e = mod_norm(start.c * g[0][1] + start.e * g[1][1], m);
    if (seen[c * m + e]) continue;
    seen[c * m + e] = 1;
    orbit.emplace(c, e, m);
  }
  return orbit;
}

BoundaryGroupElement compose(const BoundaryGroupElement& g2,
                             const BoundaryGroupElement& g1) {
  BoundaryGroupElement out;
  out.epsilon = g2.epsilon * g1.epsilon;
  out.mm = g2.epsilon * g1.mm + g2.mm * g1.sl2[0][0] + g2.nn * g1.sl2[1][0];
  out.nn = g2.epsilon * g1.nn + g2.mm * g1.sl2[0][1] + g2.nn * g1.sl2[1][1];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.sl2[i][j] =
          g2.sl2[i][0] * g1.sl2[0][j] + g2.sl2[i][1] * g1.sl2[1][j];
  return out;
}

std::pair<Complex, Complex> apply_boundary_group(const BoundaryGroupElement& g,
                                                 Complex z, Complex tau) {
  const double a = static_cast<double>(g.sl2[0][0]);
  const double b = static_cast<double>(g.sl2[0][1]);
  const double c = static_cast<double>(g.sl2[1][0]);
  const double d = static_cast<double>(g.sl2[1][1]);
  const Complex denom = c * tau + d;
  const Complex z2 = (static_cast<double>(g.epsilon) * z +
                      static_cast<double>(g.mm) * tau +
                      static_cast<double>(g.nn)) /
                     denom;
  const Complex tau2 = (a * tau + b) / denom;
  return {z2, tau2};
}

TorsionClass boundary_group_on_torsion(const BoundaryGroupElement& g,
                                       const TorsionClass& t) {
  // Rational representation of z -> z/(c tau + d) is (a, -b; -c, d); the
  // translation part is trivial on m-torsion.
  const long long m = t.m;
  const long long x = mod_norm(g.epsilon * (g.sl2[0][0] * t.c -
                                            g.sl2[0][1] * t.e),
                               m);
  const long long y = mod_norm(g.epsilon * (-g.sl2[1][0] * t.c +
                                            g.sl2[1][1] * t.e),
                               m);
  return {x, y, m};
}

}  // namespace humbert
