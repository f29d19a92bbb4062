#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "humbert/corank1.hpp"
#include "humbert/corank2.hpp"
#include "humbert/families.hpp"
#include "humbert/mumford.hpp"
#include "humbert/siegel.hpp"
#include "humbert/verify.hpp"

namespace py = pybind11;
using namespace humbert;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Humbert loci of abelian surfaces, their toroidal boundary limits and "
      "the combinatorics of Mumford degenerate fibers";

  py::register_exception<SamplingFailed>(m, "SamplingFailed");
  py::register_exception<InvalidVector>(m, "InvalidVector");
  py::register_exception<NotInSiegel>(m, "NotInSiegel");
  py::register_exception<DegenerateImage>(m, "DegenerateImage");
  py::register_exception<LatticeNotFound>(m, "LatticeNotFound");
  py::register_exception<WindowTooSmall>(m, "WindowTooSmall");

  // siegel ------------------------------------------------------------------
  py::class_<DiscriminantVector>(m, "DiscriminantVector")
      .def(py::init<long long, long long, long long, long long, long long>(),
           py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
           py::arg("e"))
      .def_readonly("a", &DiscriminantVector::a)
      .def_readonly("b", &DiscriminantVector::b)
      .def_readonly("c", &DiscriminantVector::c)
      .def_readonly("d", &DiscriminantVector::d)
      .def_readonly("e", &DiscriminantVector::e)
      .def_readonly("m", &DiscriminantVector::m)
      .def("normalized", &DiscriminantVector::normalized)
      .def("__repr__", [](const DiscriminantVector& v) {
        std::ostringstream os;
        os << "DiscriminantVector(" << v.a << ", " << v.b << ", " << v.c
           << ", " << v.d << ", " << v.e << ")";
        return os.str();
      });

  py::class_<PeriodMatrix>(m, "PeriodMatrix")
      .def(py::init<Complex, Complex, Complex>(), py::arg("tau11"),
           py::arg("tau12"), py::arg("tau22"))
      .def_readwrite("tau11", &PeriodMatrix::tau11)
      .def_readwrite("tau12", &PeriodMatrix::tau12)
      .def_readwrite("tau22", &PeriodMatrix::tau22)
      .def("in_siegel", &PeriodMatrix::in_siegel, py::arg("margin") = 0.0);

  m.def("humbert_residual",
        py::overload_cast<const DiscriminantVector&, const PeriodMatrix&>(
            &humbert_residual));
  m.def("humbert_residual_raw",
        py::overload_cast<long long, long long, long long, long long,
                          long long, const PeriodMatrix&>(&humbert_residual));
  m.def("enumerate_vectors", &enumerate_vectors, py::arg("m"),
        py::arg("coefficient_bound"));
  m.def("sample_point", &sample_point, py::arg("v"), py::arg("seed") = 0);

  // corank 1 -----------------------------------------------------------------
  py::class_<Corank1Point>(m, "Corank1Point")
      .def_readonly("q", &Corank1Point::q)
      .def_readonly("z", &Corank1Point::z)
      .def_readonly("tau", &Corank1Point::tau);

  py::class_<Corank1LimitCurve>(m, "Corank1LimitCurve")
      .def_readonly("c", &Corank1LimitCurve::c)
      .def_readonly("e", &Corank1LimitCurve::e)
      .def_readonly("m", &Corank1LimitCurve::m)
      .def_readonly("tracked_sign", &Corank1LimitCurve::tracked_sign)
      .def("at", &Corank1LimitCurve::at, py::arg("tau"), py::arg("sign"));

  m.def("e1_map", &e1_map);
  m.def("corank1_limit", &corank1_limit);
  m.def("track_limit_corank1", &track_limit_corank1, py::arg("v"),
        py::arg("tau22"), py::arg("heights"));

  py::class_<TorsionClass>(m, "TorsionClass")
      .def(py::init<long long, long long, long long>(), py::arg("c"),
           py::arg("e"), py::arg("m"))
      .def_readonly("c", &TorsionClass::c)
      .def_readonly("e", &TorsionClass::e)
      .def_readonly("m", &TorsionClass::m)
      .def("canonical", &TorsionClass::canonical)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__",
           [](const TorsionClass& t) {
             return py::hash(py::make_tuple(t.c, t.e, t.m));
           })
      .def("__repr__", [](const TorsionClass& t) {
        std::ostringstream os;
        os << "TorsionClass(" << t.c << ", " << t.e << ", " << t.m << ")";
        return os.str();
      });

  m.def("sl2_mod_m_orbit", &sl2_mod_m_orbit, py::arg("m"), py::arg("start"));

  py::class_<BoundaryGroupElement>(m, "BoundaryGroupElement")
      .def(py::init([](int epsilon, long long mm, long long nn, Mat2 sl2) {
             BoundaryGroupElement g;
             g.epsilon = epsilon;
             g.mm = mm;
             g.nn = nn;
             g.sl2 = sl2;
             return g;
           }),
           py::arg("epsilon") = 1, py::arg("mm") = 0, py::arg("nn") = 0,
           py::arg("sl2") = Mat2{{{1, 0}, {0, 1}}})
      .def_readonly("epsilon", &BoundaryGroupElement::epsilon)
      .def_readonly("mm", &BoundaryGroupElement::mm)
      .def_readonly("nn", &BoundaryGroupElement::nn)
      .def_readonly("sl2", &BoundaryGroupElement::sl2);

  m.def("compose", &compose);
  m.def("apply_boundary_group", &apply_boundary_group, py::arg("g"),
        py::arg("z"), py::arg("tau"));
  m.def("boundary_group_on_torsion", &boundary_group_on_torsion);

  // corank 2 -------------------------------------------------------------------
  py::class_<TorusPoint>(m, "TorusPoint")
      .def(py::init<Complex, Complex, Complex>(), py::arg("t1"), py::arg("t2"),
           py::arg("t3"))
      .def_readonly("t1", &TorusPoint::t1)
      .def_readonly("t2", &TorusPoint::t2)
      .def_readonly("t3", &TorusPoint::t3);

  py::class_<ChartPoint>(m, "ChartPoint")
      .def_readonly("n", &ChartPoint::n)
      .def_readonly("x1", &ChartPoint::x1)
      .def_readonly("x2", &ChartPoint::x2)
      .def_readonly("x3", &ChartPoint::x3);

  m.def("e2_map", &e2_map);
  m.def("iota_n", &iota_n, py::arg("p"), py::arg("n"));
  m.def("iota_sec3", &iota_sec3);
  m.def("psi_map", &psi_map);
  m.def("psi_limit_family", &psi_limit_family, py::arg("m"), py::arg("z"),
        py::arg("heights"));
  m.def("chart_boundary_range", &chart_boundary_range, py::arg("b"),
        py::arg("m"));

  py::enum_<BranchTag>(m, "BranchTag")
      .value("RootOfUnity", BranchTag::RootOfUnity)
      .value("Origin", BranchTag::Origin)
      .value("Diverges", BranchTag::Diverges);

  py::class_<BranchPoint>(m, "BranchPoint")
      .def_readonly("a", &BranchPoint::a)
      .def_readonly("b", &BranchPoint::b)
      .def_readonly("x", &BranchPoint::x)
      .def_readonly("y", &BranchPoint::y)
      .def_readonly("sym_sum", &BranchPoint::sym_sum)
      .def_readonly("sym_prod", &BranchPoint::sym_prod)
      .def_readonly("tag", &BranchPoint::tag);

  py::class_<BoundaryPoint>(m, "BoundaryPoint")
      .def_readonly("tag", &BoundaryPoint::tag)
      .def_readonly("unit_exp", &BoundaryPoint::unit_exp)
      .def_readonly("sym_sum", &BoundaryPoint::sym_sum)
      .def_readonly("sym_prod", &BoundaryPoint::sym_prod)
      .def_readonly("key", &BoundaryPoint::key);

  py::class_<BoundaryIntersection>(m, "BoundaryIntersection")
      .def_readonly("m", &BoundaryIntersection::m)
      .def_readonly("points", &BoundaryIntersection::points)
      .def_readonly("branches", &BoundaryIntersection::branches);

  m.def("boundary_intersection_points", &boundary_intersection_points,
        py::arg("m"));
  m.def("chart_limit_points", &chart_limit_points, py::arg("m"), py::arg("n"));
  m.def("verify_chart_reduction", &verify_chart_reduction, py::arg("m"));

  py::enum_<BranchStatus>(m, "BranchStatus")
      .value("Smooth", BranchStatus::Smooth)
      .value("Singular", BranchStatus::Singular)
      .value("Cancellation", BranchStatus::Cancellation);

  py::class_<BranchOrders>(m, "BranchOrders")
      .def_readonly("ord_sum", &BranchOrders::ord_sum)
      .def_readonly("ord_prod", &BranchOrders::ord_prod)
      .def_readonly("status", &BranchOrders::status);

  m.def("branch_multiplicity", &branch_multiplicity, py::arg("a"),
        py::arg("b"), py::arg("m"));

  // mumford ---------------------------------------------------------------------
  py::class_<MonomialTriple>(m, "MonomialTriple")
      .def_readonly("u", &MonomialTriple::u)
      .def_readonly("v", &MonomialTriple::v)
      .def_readonly("w", &MonomialTriple::w);

  m.def("generator_r", &generator_r);
  m.def("generator_s", &generator_s);
  m.def("generator_t", &generator_t);
  m.def("componentwise_product", &componentwise_product);

  py::class_<YElement>(m, "YElement")
      .def(py::init<long long, long long>(), py::arg("alpha"), py::arg("beta"))
      .def_readonly("alpha", &YElement::alpha)
      .def_readonly("beta", &YElement::beta);

  py::enum_<Coordinate>(m, "Coordinate")
      .value("U", Coordinate::U)
      .value("V", Coordinate::V)
      .value("W", Coordinate::W);

  m.def("y_action_on_coordinate", &y_action_on_coordinate, py::arg("y"),
        py::arg("coord"));

  py::class_<GroupLawReport>(m, "GroupLawReport")
      .def_readonly("rst_product_trivial", &GroupLawReport::rst_product_trivial)
      .def_readonly("homomorphism_ok", &GroupLawReport::homomorphism_ok)
      .def_readonly("samples", &GroupLawReport::samples);

  m.def("verify_group_law", &verify_group_law, py::arg("samples"),
        py::arg("seed") = 0);

  py::class_<FamilyId>(m, "FamilyId")
      .def_static("finite", &FamilyId::finite, py::arg("c"), py::arg("e"))
      .def_static("infinity", &FamilyId::infinity)
      .def_readonly("inf", &FamilyId::inf)
      .def_readonly("c", &FamilyId::c)
      .def_readonly("e", &FamilyId::e);

  py::class_<LocusRelation>(m, "LocusRelation")
      .def_readonly("exp", &LocusRelation::exp);

  m.def("family_locus", &family_locus, py::arg("m"), py::arg("i"));
  m.def("family_generator", &family_generator, py::arg("m"), py::arg("i"));

  py::class_<IdealInvarianceReport>(m, "IdealInvarianceReport")
      .def_readonly("generator", &IdealInvarianceReport::generator)
      .def_readonly("multiplier", &IdealInvarianceReport::multiplier)
      .def_readonly("locus", &IdealInvarianceReport::locus)
      .def_readonly("reduces_to_identity",
                    &IdealInvarianceReport::reduces_to_identity);

  m.def("check_ideal_invariance", &check_ideal_invariance, py::arg("m"),
        py::arg("i"), py::arg("y"));
  m.def("verify_ideal_invariance", &verify_ideal_invariance, py::arg("m"),
        py::arg("i"));

  py::enum_<SurfaceType>(m, "SurfaceType")
      .value("P1BundleOverElliptic", SurfaceType::P1BundleOverElliptic)
      .value("P1xP1", SurfaceType::P1xP1)
      .value("TwoP2PlusBlowup", SurfaceType::TwoP2PlusBlowup);

  py::enum_<StratumId>(m, "StratumId")
      .value("I", StratumId::I)
      .value("II", StratumId::II)
      .value("III", StratumId::III);

  py::class_<DualGraph>(m, "DualGraph")
      .def_readonly("vertices", &DualGraph::vertices)
      .def_readonly("edges", &DualGraph::edges)
      .def_readonly("surface", &DualGraph::surface)
      .def_readonly("m", &DualGraph::m)
      .def_readonly("stratum", &DualGraph::stratum)
      .def("to_dot", &DualGraph::to_dot)
      .def("to_json_string", &DualGraph::to_json_string);

  m.def("stratum_shift", &stratum_shift, py::arg("m"), py::arg("stratum"));
  m.def("degenerate_fiber", &degenerate_fiber, py::arg("m"),
        py::arg("stratum"));
  m.def("quotient_cycle_oracle", &quotient_cycle_oracle, py::arg("window"),
        py::arg("shift"));

  // families ----------------------------------------------------------------------
  m.def("family_vector", &family_vector, py::arg("i"), py::arg("m"));
  m.def("family_period_matrix", &family_period_matrix, py::arg("i"),
        py::arg("m"), py::arg("p1"), py::arg("p2"));
  m.def("subvariety_image", &subvariety_image, py::arg("v"), py::arg("tau"));

  py::class_<SublatticeWithForm>(m, "SublatticeWithForm")
      .def_readonly("basis", &SublatticeWithForm::basis)
      .def_readonly("pfaffian", &SublatticeWithForm::pfaffian);

  m.def("subtorus_lattice", &subtorus_lattice, py::arg("v"), py::arg("tau"),
        py::arg("bound") = 0);
  m.def("subtorus_lattice_closed_form", &subtorus_lattice_closed_form,
        py::arg("i"), py::arg("m"));
  m.def("exponent_of_subtorus", &exponent_of_subtorus, py::arg("v"),
        py::arg("tau"));

  py::class_<SubtorusLocus>(m, "SubtorusLocus")
      .def_readonly("u_exp", &SubtorusLocus::u_exp)
      .def_readonly("v_exp", &SubtorusLocus::v_exp)
      .def("text", &SubtorusLocus::text);

  m.def("exp_image_locus", &exp_image_locus, py::arg("i"));

  m.def("build_Mv_entries", [](const DiscriminantVector& v) {
    const auto data = build_Mv(v);
    std::vector<std::vector<std::pair<long long, long long>>> out(4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        out[i].push_back({data.Mv[i][j].numerator(),
                          data.Mv[i][j].denominator()});
    return out;
  });

  // verification sweep -----------------------------------------------------------
  py::class_<CriterionResult>(m, "CriterionResult")
      .def_readonly("id", &CriterionResult::id)
      .def_readonly("name", &CriterionResult::name)
      .def_readonly("pass_", &CriterionResult::pass)
      .def_readonly("detail", &CriterionResult::detail);

  m.def(
      "run_acceptance",
      [](int fiber_m_max, std::uint64_t seed) {
        AcceptanceConfig cfg;
        cfg.fiber_m_max = fiber_m_max;
        cfg.seed = seed;
        return run_acceptance(cfg);
      },
      py::arg("fiber_m_max") = 12, py::arg("seed") = 0);
}
