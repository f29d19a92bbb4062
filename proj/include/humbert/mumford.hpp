#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "humbert/errors.hpp"
#include "humbert/family.hpp"

namespace humbert {

/// Exponent vector of a Laurent monomial in T1, T2, T3.
using ExpVec = std::array<long long, 3>;

inline ExpVec exp_add(const ExpVec& x, const ExpVec& y) {
  return {x[0] + y[0], x[1] + y[1], x[2] + y[2]};
}
inline ExpVec exp_scale(long long k, const ExpVec& x) {
  return {k * x[0], k * x[1], k * x[2]};
}

/// Element of the period group as the triple of monomials multiplying
/// (U, V, W); the exponent vectors sum to zero (compatible with UVW = 1).
struct MonomialTriple {
  ExpVec u, v, w;
};

MonomialTriple generator_r();
MonomialTriple generator_s();
MonomialTriple generator_t();
MonomialTriple componentwise_product(const MonomialTriple& x,
                                     const MonomialTriple& y);

/// alpha*r + beta*s in the free rank-2 group Z^3/Z(1,1,1).
struct YElement {
  long long alpha = 0, beta = 0;
};

enum class Coordinate { U, V, W };

/// Multiplier of the coordinate under the action of y, as an exact exponent
/// vector: U picks up T2^{-alpha} T3^{beta-alpha}, W picks up
/// T2^{-alpha} T1^{-beta}, and the V multiplier is derived from the
/// invariance of UVW - 1.
ExpVec y_action_on_coordinate(const YElement& y, Coordinate coord);

struct GroupLawReport {
  bool rst_product_trivial;
  bool homomorphism_ok;
  int samples;
};

GroupLawReport verify_group_law(int samples, std::uint64_t seed);

/// Multiplicative relation among T1, T2, T3: T1^e0 T2^e1 T3^e2 = 1.
struct LocusRelation {
  ExpVec exp;
};

/// Locus containing the family image: T2^c = T3^{m-c} for (c, e), and
/// T1 = T2^{m-1} for infinity.
LocusRelation family_locus(int m, const FamilyId& i);

/// Generator of the subgroup preserving the family ideal: r^c s^m for
/// (c, e), r^{-(m-1)} s for infinity.
YElement family_generator(int m, const FamilyId& i);

struct IdealInvarianceReport {
  YElement generator;
  ExpVec multiplier;
  LocusRelation locus;
  bool reduces_to_identity;
};

/// Reduces the multiplier of the ideal's coordinate (U for finite families,
/// W for infinity) by the locus relation; reduces_to_identity certifies the
/// element preserves the ideal on the locus. Exact exponent arithmetic.
IdealInvarianceReport check_ideal_invariance(int m, const FamilyId& i,
                                             const YElement& y);
IdealInvarianceReport verify_ideal_invariance(int m, const FamilyId& i);

enum class SurfaceType { P1BundleOverElliptic, P1xP1, TwoP2PlusBlowup };
enum class StratumId { I, II, III };

std::string to_string(SurfaceType s);
std::string to_string(StratumId s);
StratumId stratum_from_string(const std::string& s);

/// Incidence combinatorics of a degenerate fiber: one vertex per component,
/// one edge per intersection point; self-loops and parallel edges allowed.
struct DualGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<int, int>> edges;  // index pairs, i <= j, sorted
  std::optional<SurfaceType> surface;
  int m = 0;
  std::optional<StratumId> stratum;

  std::string to_dot() const;
  std::string to_json_string() const;  // requires stratum set
};

/// Translation step induced on the Z-chain of components by the acting
/// generator: m, m-1, 2m-1 for strata I, II, III.
int stratum_shift(int m, StratumId s);

/// Quotient of the Z-chain of components met by the degenerate curve under
/// the shift of the acting generator; a cycle whose length is the shift,
/// with a self-loop when the length is 1 (the nodal curve).
DualGraph degenerate_fiber(int m, StratumId s);

/// Independent oracle: explicit orbit computation on a window of the chain
/// under k -> k + shift, vertices and edges identified by union-find.
/// Throws WindowTooSmall when window < 3*shift.
DualGraph quotient_cycle_oracle(int window, int shift);

}  // namespace humbert
