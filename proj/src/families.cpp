#include "humbert/families.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace humbert {

namespace {

RatMat4 zero_mat() {
  RatMat4 m;
  for (auto& row : m) row.fill(Rational(0));
  return m;
}

Complex cross(const std::array<Complex, 2>& p, const std::array<Complex, 2>& q) {
  return p[0] * q[1] - p[1] * q[0];
}

// Image of the canonical basis vector e_j in C^2 through the basis (id tau).
std::array<Complex, 2> basis_column(const PeriodMatrix& tau, int j) {
  switch (j) {
    case 0:
      return {Complex(1, 0), Complex(0, 0)};
    case 1:
      return {Complex(0, 0), Complex(1, 0)};
    case 2:
      return {tau.tau11, tau.tau12};
    default:
      return {tau.tau12, tau.tau22};
  }
}

double norm2(const std::array<Complex, 2>& p) {
  return std::abs(p[0]) + std::abs(p[1]);
}

// E((x1,y1),(x2,y2)) = x1.y2 - x2.y1 with x = (l0, l1), y = (l2, l3): the
// principal polarization in the basis given by the columns of (id tau).
long long symplectic_form(const std::array<long long, 4>& p,
                          const std::array<long long, 4>& q) {
  return p[0] * q[2] + p[1] * q[3] - q[0] * p[2] - q[1] * p[3];
}

// Basis of the integer row span; Euclid-style row reduction, entries stay
// small at desk scale.
std::vector<std::array<long long, 4>> integer_row_basis(
    std::vector<std::array<long long, 4>> rows) {
  std::size_t r = 0;
  for (int col = 0; col < 4 && r < rows.size(); ++col) {
    while (true) {
      std::size_t piv = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][col] != 0 &&
            (piv == rows.size() ||
             std::llabs(rows[i][col]) < std::llabs(rows[piv][col])))
          piv = i;
      if (piv == rows.size()) break;
      std::swap(rows[r], rows[piv]);
      bool cleared = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        const long long q = rows[i][col] / rows[r][col];
        for (int j = 0; j < 4; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][col] != 0) cleared = false;
      }
      if (cleared) {
        ++r;
        break;
      }
    }
  }
  rows.resize(r);
  return rows;
}

}  // namespace

SubvarietyMatrixData build_Mv(const DiscriminantVector& v) {
  SubvarietyMatrixData data;
  const Rational a(v.a), c(v.c), d(v.d), e(v.e);
  const Rational half_minus(v.b - v.m, 2);  // (b-m)/2, exact
  const Rational half_plus(v.b + v.m, 2);
  data.Mv = zero_mat();
  data.Mv[0] = {Rational(0), d, -half_minus, a};
  data.Mv[1] = {-d, Rational(0), -c, half_plus};
  data.Mv[2] = {half_minus, c, Rational(0), -e};
  data.Mv[3] = {-a, -half_plus, e, Rational(0)};
  data.J = {{{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}}};
  return data;
}

RatMat4 exponent_criterion_matrix(const DiscriminantVector& v) {
  const SubvarietyMatrixData data = build_Mv(v);
  RatMat4 n = zero_mat();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Rational jm(0);
      for (int k = 0; k < 4; ++k)
        if (data.J[i][k] != 0) jm += Rational(data.J[i][k]) * data.Mv[k][j];
      n[i][j] = (i == j ? Rational(v.m) : Rational(0)) - jm;
    }
  return n;
}

DiscriminantVector family_vector(const FamilyId& i, int m) {
  i.validate(m);
  if (i.inf)
    return {1, -(static_cast<long long>(m) - 2),
            -(static_cast<long long>(m) - 1), 0, 0};
  return {0, m, i.c, 0, i.e};
}

PeriodMatrix family_period_matrix(const FamilyId& i, int m, Complex p1,
                                  Complex p2) {
  i.validate(m);
  PeriodMatrix tau;
  if (i.inf) {
    tau.tau11 = p1;
    tau.tau12 = p2;
    tau.tau22 = (p1 - static_cast<double>(m - 2) * p2) /
                static_cast<double>(m - 1);
  } else {
    tau.tau11 = p1;
    tau.tau22 = p2;
    tau.tau12 = -(static_cast<double>(i.c) * p2 + static_cast<double>(i.e)) /
                static_cast<double>(m);
  }
  if (!tau.in_siegel())
    throw NotInSiegel("family_period_matrix: parameters leave H2");
  return tau;
}

std::array<Complex, 2> subvariety_image(const DiscriminantVector& v,
                                        const PeriodMatrix& tau) {
  if (std::abs(humbert_residual(v, tau)) >= 1e-10)
    throw std::invalid_argument("subvariety_image: tau not on H2(v)");

  const RatMat4 n = exponent_criterion_matrix(v);
  std::array<std::array<Complex, 2>, 4> cols;
  double scale = 0.0;
  for (int j = 0; j < 4; ++j) {
    cols[j] = {Complex(0, 0), Complex(0, 0)};
    for (int i = 0; i < 4; ++i) {
      const double nij = boost::rational_cast<double>(n[i][j]);
      if (nij == 0.0) continue;
      const auto bi = basis_column(tau, i);
      cols[j][0] += nij * bi[0];
      cols[j][1] += nij * bi[1];
    }
    scale = std::max(scale, norm2(cols[j]));
  }
  if (scale < 1e-10) throw DegenerateImage("subvariety_image: zero image");

  int pivot = 0;
  for (int j = 1; j < 4; ++j)
    if (norm2(cols[j]) > norm2(cols[pivot])) pivot = j;
  const auto w = cols[pivot];

  // The image is a complex line iff every column is a complex multiple of
  // the pivot and the multipliers span C over R.
  bool complex_span = false;
  for (int j = 0; j < 4; ++j) {
    if (std::abs(cross(cols[j], w)) > 1e-8 * scale * scale)
      throw DegenerateImage("subvariety_image: image is not a complex line");
    const int k = std::abs(w[0]) >= std::abs(w[1]) ? 0 : 1;
    const Complex lambda = cols[j][k] / w[k];
    if (std::abs(lambda.imag()) > 1e-8 * std::abs(lambda)) complex_span = true;
  }
  if (!complex_span)
    throw DegenerateImage("subvariety_image: real rank below 2");

  // Normalize on the larger entry for a stable representative.
  const int k = std::abs(w[0]) >= std::abs(w[1]) ? 0 : 1;
  return {w[0] / w[k], w[1] / w[k]};
}

SublatticeWithForm subtorus_lattice(const DiscriminantVector& v,
                                    const PeriodMatrix& tau, long long bound) {
  const auto w = subvariety_image(v, tau);
  if (bound <= 0) bound = v.m + 1;

  const double tau_scale =
      1.0 + std::max({std::abs(tau.tau11), std::abs(tau.tau12),
                      std::abs(tau.tau22)});
  std::vector<std::array<long long, 4>> members;
  std::array<long long, 4> lam;
  for (lam[0] = -bound; lam[0] <= bound; ++lam[0])
    for (lam[1] = -bound; lam[1] <= bound; ++lam[1])
      for (lam[2] = -bound; lam[2] <= bound; ++lam[2])
        for (lam[3] = -bound; lam[3] <= bound; ++lam[3]) {
          if (lam[0] == 0 && lam[1] == 0 && lam[2] == 0 && lam[3] == 0)
            continue;
          const Complex z1 = static_cast<double>(lam[0]) +
                             static_cast<double>(lam[2]) * tau.tau11 +
                             static_cast<double>(lam[3]) * tau.tau12;
          const Complex z2 = static_cast<double>(lam[1]) +
                             static_cast<double>(lam[2]) * tau.tau12 +
                             static_cast<double>(lam[3]) * tau.tau22;
          const Complex cr = z1 * w[1] - z2 * w[0];
          const double size =
              static_cast<double>(std::llabs(lam[0]) + std::llabs(lam[1]) +
                                  std::llabs(lam[2]) + std::llabs(lam[3]));
          if (std::abs(cr) < 1e-8 * tau_scale * (1.0 + size))
            members.push_back(lam);
        }

  const auto basis = integer_row_basis(std::move(members));
  if (basis.size() != 2)
    throw LatticeNotFound("subtorus_lattice: search found rank " +
                          std::to_string(basis.size()) +
                          " instead of 2 (tau off the locus or bound too small)");
  SublatticeWithForm out;
  out.basis = {basis[0], basis[1]};
  out.pfaffian = symplectic_form(basis[0], basis[1]);
  if (out.pfaffian == 0)
    throw LatticeNotFound("subtorus_lattice: restricted form is degenerate");
  return out;
}

SublatticeWithForm subtorus_lattice_closed_form(const FamilyId& i, int m) {
  i.validate(m);
  SublatticeWithForm out;
  if (i.inf) {
    out.basis = {{{1, -1, 0, 0}, {0, 0, 1, -(static_cast<long long>(m) - 1)}}};
  } else {
    out.basis = {{{1, 0, 0, 0}, {0, i.e, m, i.c}}};
  }
  out.pfaffian = symplectic_form(out.basis[0], out.basis[1]);
  return out;
}

long long exponent_of_subtorus(const DiscriminantVector& v,
                               const PeriodMatrix& tau) {
  return std::llabs(subtorus_lattice(v, tau).pfaffian);
}

std::string SubtorusLocus::text() const {
  std::string s;
  if (u_exp != 0) s += u_exp == 1 ? "U" : "U^" + std::to_string(u_exp);
  if (v_exp != 0) s += v_exp == 1 ? "V" : "V^" + std::to_string(v_exp);
  return s + " = 1";
}

SubtorusLocus exp_image_locus(const FamilyId& i) {
  if (i.inf) return {1, 1};  // UV = 1
  return {1, 0};             // U = 1
}

}  // namespace humbert
