#include "humbert/mumford.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "humbert/errors.hpp"
#include "humbert/numtheory.hpp"

namespace humbert {

// Generator triples as displayed: r = (T2 T3, T3^-1, T2^-1),
// s = (T3^-1, T1 T3, T1^-1), t = (T2^-1, T1^-1, T1 T2).
MonomialTriple generator_r() {
  return {{0, 1, 1}, {0, 0, -1}, {0, -1, 0}};
}
MonomialTriple generator_s() {
  return {{0, 0, -1}, {1, 0, 1}, {-1, 0, 0}};
}
MonomialTriple generator_t() {
  return {{0, -1, 0}, {-1, 0, 0}, {1, 1, 0}};
}

MonomialTriple componentwise_product(const MonomialTriple& x,
                                     const MonomialTriple& y) {
  return {exp_add(x.u, y.u), exp_add(x.v, y.v), exp_add(x.w, y.w)};
}

ExpVec y_action_on_coordinate(const YElement& y, Coordinate coord) {
  // Normative action formulas: S_{ar+bs}(U) = T2^{-a} T3^{b-a} U and
  // S_{ar+bs}(W) = T2^{-a} T1^{-b} W. Note these follow the displayed
  // action, which is not plain componentwise multiplication by the
  // generator triples; the V multiplier keeps UVW - 1 invariant.
  const long long a = y.alpha, b = y.beta;
  const ExpVec u{0, -a, b - a};
  const ExpVec w{-b, -a, 0};
  switch (coord) {
    case Coordinate::U:
      return u;
    case Coordinate::W:
      return w;
    case Coordinate::V:
      return exp_scale(-1, exp_add(u, w));
  }
  throw std::logic_error("unreachable");
}

GroupLawReport verify_group_law(int samples, std::uint64_t seed) {
  GroupLawReport report{true, true, samples};

  const MonomialTriple rst = componentwise_product(
      componentwise_product(generator_r(), generator_s()), generator_t());
  report.rst_product_trivial =
      rst.u == ExpVec{0, 0, 0} && rst.v == ExpVec{0, 0, 0} &&
      rst.w == ExpVec{0, 0, 0};

  std::mt19937_64 rng(seed);
  auto draw = [&rng]() -> long long {
    return static_cast<long long>(rng() % 101) - 50;
  };
  for (int i = 0; i < samples; ++i) {
    const YElement y1{draw(), draw()};
    const YElement y2{draw(), draw()};
    const YElement sum{y1.alpha + y2.alpha, y1.beta + y2.beta};
    for (Coordinate c : {Coordinate::U, Coordinate::V, Coordinate::W}) {
      const ExpVec lhs = y_action_on_coordinate(sum, c);
      const ExpVec rhs = exp_add(y_action_on_coordinate(y1, c),
                                 y_action_on_coordinate(y2, c));
      if (lhs != rhs) report.homomorphism_ok = false;
    }
  }
  return report;
}

LocusRelation family_locus(int m, const FamilyId& i) {
  if (m < 2) throw std::invalid_argument("family_locus: m >= 2");
  if (i.inf) return {{1, -(static_cast<long long>(m) - 1), 0}};
  return {{0, i.c, -(static_cast<long long>(m) - i.c)}};
}

YElement family_generator(int m, const FamilyId& i) {
  if (m < 2) throw std::invalid_argument("family_generator: m >= 2");
  if (i.inf) return {-(static_cast<long long>(m) - 1), 1};
  return {i.c, m};
}

IdealInvarianceReport check_ideal_invariance(int m, const FamilyId& i,
                                             const YElement& y) {
  IdealInvarianceReport report;
  report.generator = y;
  report.locus = family_locus(m, i);
  report.multiplier =
      y_action_on_coordinate(y, i.inf ? Coordinate::W : Coordinate::U);

  // The multiplier is trivial on the locus iff it is an integer power of the
  // locus relation.
  const ExpVec& u = report.multiplier;
  const ExpVec& l = report.locus.exp;
  report.reduces_to_identity = false;
  for (int k = 0; k < 3; ++k) {
    if (l[k] == 0) continue;
    if (u[k] % l[k] != 0) break;
    const long long q = u[k] / l[k];
    report.reduces_to_identity = u == exp_scale(q, l);
    break;
  }
  if (u == ExpVec{0, 0, 0}) report.reduces_to_identity = true;
  return report;
}

IdealInvarianceReport verify_ideal_invariance(int m, const FamilyId& i) {
  i.validate(m);
  return check_ideal_invariance(m, i, family_generator(m, i));
}

std::string to_string(SurfaceType s) {
  switch (s) {
    case SurfaceType::P1BundleOverElliptic:
      return "P1BundleOverElliptic";
    case SurfaceType::P1xP1:
      return "P1xP1";
    case SurfaceType::TwoP2PlusBlowup:
      return "TwoP2PlusBlowup";
  }
  throw std::logic_error("unreachable");
}

std::string to_string(StratumId s) {
  switch (s) {
    case StratumId::I:
      return "I";
    case StratumId::II:
      return "II";
    case StratumId::III:
      return "III";
  }
  throw std::logic_error("unreachable");
}

StratumId stratum_from_string(const std::string& s) {
  if (s == "I") return StratumId::I;
  if (s == "II") return StratumId::II;
  if (s == "III") return StratumId::III;
  throw std::invalid_argument("unknown stratum '" + s + "' (expected I, II, III)");
}

std::string DualGraph::to_dot() const {
  std::ostringstream os;
  os << "graph fiber {\n";
  if (surface) os << "  surface=\"" << to_string(*surface) << "\";\n";
  for (const auto& v : vertices) os << "  " << v << ";\n";
  for (const auto& [i, j] : edges)
    os << "  " << vertices[i] << " -- " << vertices[j] << ";\n";
  os << "}\n";
  return os.str();
}

std::string DualGraph::to_json_string() const {
  if (!stratum || !surface)
    throw std::logic_error("DualGraph::to_json_string: stratum not set");
  nlohmann::json j;
  j["m"] = m;
  j["stratum"] = to_string(*stratum);
  j["surface_type"] = to_string(*surface);
  j["vertices"] = vertices;
  auto edge_names = nlohmann::json::array();
  for (const auto& [a, b] : edges)
    edge_names.push_back({vertices[a], vertices[b]});
  j["edges"] = edge_names;
  return j.dump();
}

namespace {

// Cycle of the given length; a length-1 cycle is a vertex with a self-loop.
DualGraph make_cycle(int length) {
  DualGraph g;
  for (int k = 0; k < length; ++k) g.vertices.push_back("Z" + std::to_string(k));
  for (int k = 0; k < length; ++k) {
    const int a = k, b = (k + 1) % length;
    g.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

}  // namespace

int stratum_shift(int m, StratumId s) {
  if (m < 2) throw std::invalid_argument("stratum_shift: m >= 2");
  switch (s) {
    case StratumId::I:
      return m;  // r acts inside each Z_k, s moves the chain by one
    case StratumId::II:
      return m - 1;  // r^{-(m-1)} s sends Z_{k,0} to Z_{k-(m-1),1}
    case StratumId::III:
      return 2 * m - 1;
  }
  throw std::logic_error("unreachable");
}

DualGraph degenerate_fiber(int m, StratumId s) {
  DualGraph g = make_cycle(stratum_shift(m, s));
  g.m = m;
  g.stratum = s;
  switch (s) {
    case StratumId::I:
      g.surface = SurfaceType::P1BundleOverElliptic;
      break;
    case StratumId::II:
      g.surface = SurfaceType::P1xP1;
      break;
    case StratumId::III:
      g.surface = SurfaceType::TwoP2PlusBlowup;
      break;
  }
  return g;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

DualGraph quotient_cycle_oracle(int window, int shift) {
  if (shift < 1)
    throw std::invalid_argument("quotient_cycle_oracle: shift >= 1");
  if (window < 3 * shift)
    throw WindowTooSmall("quotient_cycle_oracle: window " +
                         std::to_string(window) + " < 3 * shift");

  UnionFind verts(window);
  for (int k = 0; k + shift < window; ++k) verts.unite(k, k + shift);
  UnionFind chain_edges(window - 1);  // edge k joins vertices k, k+1
  for (int k = 0; k + shift < window - 1; ++k)
    chain_edges.unite(k, k + shift);

  DualGraph g;
  std::vector<int> vertex_index(window, -1);
  for (int k = 0; k < window; ++k) {
    const int root = verts.find(k);
    if (vertex_index[root] < 0) {
      vertex_index[root] = static_cast<int>(g.vertices.size());
      g.vertices.push_back("Z" + std::to_string(vertex_index[root]));
    }
  }
  std::vector<bool> seen(window - 1, false);
  for (int k = 0; k < window - 1; ++k) {
    const int root = chain_edges.find(k);
    if (seen[root]) continue;
    seen[root] = true;
    const int a = vertex_index[verts.find(k)];
    const int b = vertex_index[verts.find(k + 1)];
    g.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

void FamilyId::validate(long long m) const {
  if (m < 2) throw std::invalid_argument("FamilyId: m >= 2");
  if (inf) return;
  if (c < 0 || c > m || e < 0 || e > m)
    throw std::invalid_argument("FamilyId: need 0 <= c, e <= m");
  if (std::gcd(std::gcd(m, c), e) != 1)
    throw std::invalid_argument("FamilyId: gcd(m, c, e) != 1");
}

}  // namespace humbert
