#pragma once

#include <array>
#include <string>

#include <boost/rational.hpp>

#include "humbert/family.hpp"
#include "humbert/siegel.hpp"

namespace humbert {

using Rational = boost::rational<long long>;
using RatMat4 = std::array<std::array<Rational, 4>, 4>;
using IntMat4 = std::array<std::array<long long, 4>, 4>;

/// The antisymmetric matrix M_v of the exponent criterion together with the
/// standard block matrix J = (0, -id; id, 0). Half-integer entries are exact
/// rationals.
struct SubvarietyMatrixData {
  RatMat4 Mv;
  IntMat4 J;
};

SubvarietyMatrixData build_Mv(const DiscriminantVector& v);

/// m*id - J*M_v, evaluated in exact rational arithmetic.
RatMat4 exponent_criterion_matrix(const DiscriminantVector& v);

/// The discriminant vector cut out by family i: (0, m, c, 0, e) for finite
/// families, (1, -(m-2), -(m-1), 0, 0) for infinity.
DiscriminantVector family_vector(const FamilyId& i, int m);

/// Period matrix of the family: [[p1, -(c*p2+e)/m], [., p2]] for (c, e) and
/// [[p1, p2], [., (p1-(m-2)p2)/(m-1)]] for infinity. Throws NotInSiegel.
PeriodMatrix family_period_matrix(const FamilyId& i, int m, Complex p1,
                                  Complex p2);

/// Spanning vector of the complex line (m*id - J*M_v)(R^4) in C^2, computed
/// through the basis (id tau). Requires tau on H2(v); throws DegenerateImage
/// when the image is not a complex line.
std::array<Complex, 2> subvariety_image(const DiscriminantVector& v,
                                        const PeriodMatrix& tau);

/// Rank-2 sublattice W cap Lambda_tau with the restricted symplectic form;
/// pfaffian is E(basis[0], basis[1]), the degree of the induced polarization.
struct SublatticeWithForm {
  std::array<std::array<long long, 4>, 2> basis;
  long long pfaffian;

  /// The form in the stored basis: ((0, pf), (-pf, 0)).
  std::array<std::array<long long, 2>, 2> restricted_form() const {
    return {{{0, pfaffian}, {-pfaffian, 0}}};
  }
};

/// Exact-search oracle: scans the integer box |lambda_i| <= bound (default
/// m+1) for vectors embedding into the subvariety line, then extracts a basis
/// by integer row reduction. Throws LatticeNotFound.
SublatticeWithForm subtorus_lattice(const DiscriminantVector& v,
                                    const PeriodMatrix& tau,
                                    long long bound = 0);

/// Closed-form lattice for the two family shapes.
SublatticeWithForm subtorus_lattice_closed_form(const FamilyId& i, int m);

/// |pfaffian| of the restricted polarization: the exponent of the embedded
/// elliptic curve.
long long exponent_of_subtorus(const DiscriminantVector& v,
                               const PeriodMatrix& tau);

/// Exponential image of the subvariety line in (V, U) coordinates:
/// U^u V^v = 1 (U = 1 for finite families, UV = 1 for infinity).
struct SubtorusLocus {
  long long u_exp, v_exp;
  std::string text() const;
};

SubtorusLocus exp_image_locus(const FamilyId& i);

}  // namespace humbert
