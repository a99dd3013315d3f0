// Python bindings for the stacksimplex core library.
//
// Exact rationals cross the boundary as fractions.Fraction (ints and "p/q"
// strings are accepted on the way in); big integers cross as Python ints.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "stacksimplex/catalog.hpp"
#include "stacksimplex/ehrhart.hpp"
#include "stacksimplex/errors.hpp"
#include "stacksimplex/explore.hpp"
#include "stacksimplex/lecture_hall.hpp"
#include "stacksimplex/linalg.hpp"
#include "stacksimplex/permutation.hpp"
#include "stacksimplex/polytope.hpp"
#include "stacksimplex/rational.hpp"
#include "stacksimplex/serialize.hpp"
#include "stacksimplex/verify.hpp"

namespace py = pybind11;

namespace pybind11 {
namespace detail {

// Arbitrary-precision integers pass through their decimal representation.
template <>
struct type_caster<stacksimplex::Int> {
    PYBIND11_TYPE_CASTER(stacksimplex::Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr()) || PyBool_Check(src.ptr())) return false;
        try {
            value = stacksimplex::parse_int(str(src).cast<std::string>());
        } catch (const stacksimplex::ParseError&) {
            return false;
        }
        return true;
    }

    static handle cast(const stacksimplex::Int& n, return_value_policy, handle) {
        return PyLong_FromString(stacksimplex::to_string(n).c_str(), nullptr, 10);
    }
};

// Rationals accept Fraction, int, or a "p/q" string, and always come back as
// fractions.Fraction.
template <>
struct type_caster<stacksimplex::Rational> {
    PYBIND11_TYPE_CASTER(stacksimplex::Rational, const_name("Fraction"));

    bool load(handle src, bool) {
        bool fraction_like = PyUnicode_Check(src.ptr()) ||
                             (hasattr(src, "denominator") && !PyBool_Check(src.ptr()));
        if (!fraction_like) return false;
        try {
            value = stacksimplex::parse_rational(str(src).cast<std::string>());
        } catch (const stacksimplex::ParseError&) {
            return false;
        }
        return true;
    }

    static handle cast(const stacksimplex::Rational& r, return_value_policy, handle) {
        object fraction = module_::import("fractions").attr("Fraction");
        return fraction(stacksimplex::to_string(r)).release();
    }
};

}  // namespace detail
}  // namespace pybind11

namespace {

using namespace stacksimplex;

py::object optional_int(const std::optional<Int>& v) {
    return v ? py::cast(*v) : py::object(py::none());
}

std::vector<Vec> matrix_rows(const Mat& m) {
    std::vector<Vec> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    using namespace stacksimplex;

    m.doc() = "Exact lattice-point counting for stack-sorting orbit simplices";
    m.attr("__version__") = "1.0.0";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<UnsupportedQueryError>(m, "UnsupportedQueryError", PyExc_RuntimeError);
    py::register_exception<UnderdeterminedError>(m, "UnderdeterminedError", PyExc_ValueError);

    py::enum_<MembershipClass>(m, "MembershipClass")
        .value("Outside", MembershipClass::Outside)
        .value("RelativeBoundary", MembershipClass::RelativeBoundary)
        .value("RelativeInterior", MembershipClass::RelativeInterior);

    py::enum_<Region>(m, "Region")
        .value("Closed", Region::Closed)
        .value("RelativeInterior", Region::RelativeInterior);

    py::class_<Permutation>(m, "Permutation")
        .def(py::init(&Permutation::parse), py::arg("one_line"))
        .def(py::init<std::vector<int>>(), py::arg("entries"))
        .def_static("identity", &Permutation::identity, py::arg("n"))
        .def("str", &Permutation::str)
        .def("__str__", &Permutation::str)
        .def("__repr__",
             [](const Permutation& p) { return "Permutation('" + p.str() + "')"; })
        .def("__len__", &Permutation::size)
        .def("__getitem__",
             [](const Permutation& p, int i) {
                 if (i < 0 || i >= p.size()) throw py::index_error();
                 return p[i];
             })
        .def("__hash__",
             [](const Permutation& p) { return py::hash(py::tuple(py::cast(p.entries()))); })
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def_property_readonly("entries",
                               [](const Permutation& p) { return p.entries(); })
        .def("is_identity", &Permutation::is_identity);

    py::class_<SortOrbit>(m, "SortOrbit")
        .def_readonly("steps", &SortOrbit::steps)
        .def_property_readonly("index", &SortOrbit::index)
        .def("__len__", [](const SortOrbit& o) { return o.steps.size(); });

    m.def("stack_sort", &stack_sort, py::arg("p"),
          "One pass of the LIFO sorting map.");
    m.def("sort_orbit", &sort_orbit, py::arg("p"),
          "Trajectory under repeated sorting passes, ending at the identity.");
    m.def("is_exactly_t_sortable", &is_exactly_t_sortable, py::arg("p"), py::arg("t"));
    m.def("is_ln1", &is_ln1, py::arg("p"),
          "True iff p ends with its maximum followed by 1 (n >= 3).");
    m.def("enumerate_ln1", &enumerate_ln1, py::arg("n"));
    m.def("tau", &tau, py::arg("n"), "The cycle 2 3 ... n 1.");
    m.def("tail_form_check", &tail_form_check, py::arg("p"), py::arg("i"));
    m.def("descent_count", &descent_count, py::arg("p"));

    py::class_<VPolytope>(m, "VPolytope")
        .def_static("from_points", &VPolytope::from_points, py::arg("points"))
        .def_property_readonly("ambient", &VPolytope::ambient)
        .def_property_readonly("affine_dim", &VPolytope::affine_dim)
        .def("points", &VPolytope::points)
        .def("extreme", &VPolytope::extreme)
        .def("is_simplex", &VPolytope::is_simplex)
        .def("is_lattice", &VPolytope::is_lattice)
        .def("coordinate_sum",
             [](const VPolytope& p) { return p.coordinate_sum(); })
        .def("membership", &VPolytope::membership, py::arg("x"))
        .def("membership_dilated", &VPolytope::membership_dilated, py::arg("x"),
             py::arg("lam"))
        .def("contains_dilated", &VPolytope::contains_dilated, py::arg("x"), py::arg("lam"))
        .def("barycentric", &VPolytope::barycentric, py::arg("x"))
        .def("in_affine_hull", &VPolytope::in_affine_hull, py::arg("x"))
        .def("dilate", &VPolytope::dilate, py::arg("lam"))
        .def("translate", &VPolytope::translate, py::arg("t"))
        .def("project_last_to_zero", &VPolytope::project_last_to_zero)
        .def("drop_last", &VPolytope::drop_last)
        .def("lift_append_zero", &VPolytope::lift_append_zero)
        .def("normalized_volume", &VPolytope::normalized_volume)
        .def("__repr__", [](const VPolytope& p) {
            return "VPolytope(ambient=" + std::to_string(p.ambient()) +
                   ", points=" + std::to_string(p.points().size()) + ")";
        });

    m.def("orbit_polytope", &orbit_polytope, py::arg("p"),
          "Convex hull of the sorting trajectory of p.");
    m.def("polytope_from_spec", &polytope_from_spec, py::arg("spec"),
          "Builds tau:n, lecturehall:n, cube:n, point, or a permutation's orbit hull.");
    m.def("affinely_independent", &affinely_independent, py::arg("points"));

    m.def("count_lattice", &count_lattice, py::arg("p"), py::arg("lam"),
          py::arg("region") = Region::Closed,
          "Number of integer points in lam * P (or its relative interior).");
    m.def("lattice_points", &lattice_points, py::arg("p"), py::arg("lam"),
          py::arg("region") = Region::Closed);
    m.def("ehrhart_polynomial", &ehrhart_polynomial, py::arg("p"),
          "Counting-polynomial coefficients, constant term first.");
    m.def("eval_poly", &eval_poly, py::arg("poly"), py::arg("t"));
    m.def("hstar_vector", &hstar_vector, py::arg("p"));
    m.def("eulerian", &eulerian, py::arg("n"), py::arg("k"));
    m.def("reciprocity_check", &reciprocity_check, py::arg("p"), py::arg("t"));

    py::class_<GorensteinResult>(m, "GorensteinResult")
        .def_readonly("index", &GorensteinResult::index)
        .def_readonly("symbolic", &GorensteinResult::symbolic)
        .def_readonly("checked_tmax", &GorensteinResult::checked_tmax);

    m.def("gorenstein_index", &gorenstein_index, py::arg("p"), py::arg("tmax") = 6);

    py::class_<EhrhartResult>(m, "EhrhartResult")
        .def_readonly("poly", &EhrhartResult::poly)
        .def_readonly("hstar", &EhrhartResult::hstar)
        .def_readonly("hollow", &EhrhartResult::hollow)
        .def_readonly("gorenstein", &EhrhartResult::gorenstein);

    m.def("analyze", &analyze, py::arg("p"), py::arg("tmax") = 8);

    m.def("tau_simplex", &tau_simplex, py::arg("n"));
    m.def("tau_simplex_translated", &tau_simplex_translated, py::arg("n"));
    m.def("recurrence_check", &recurrence_check, py::arg("n"), py::arg("lam"));
    m.def("interior_recurrence_check", &interior_recurrence_check, py::arg("n"),
          py::arg("lam"));
    m.def("real_gorenstein_check", &real_gorenstein_check, py::arg("n"), py::arg("lam"),
          "Closed count at lam equals interior count at lam + 2 (needs (n-1)*lam integral).");
    m.def("projection_count_check", &projection_count_check, py::arg("n"), py::arg("lam"),
          py::arg("p"));
    m.def("translation_count_check", &translation_count_check, py::arg("n"), py::arg("t"));
    m.def("floor_identity_check", &floor_identity_check, py::arg("n"), py::arg("t"));

    m.def("lecture_hall_simplex", &lecture_hall_simplex, py::arg("n"));
    m.def("lecture_hall_count_direct", &lecture_hall_count_direct, py::arg("n"),
          py::arg("t"), "Chain-inequality enumeration, no polytope machinery.");
    m.def("drop_zero_vertex_lift", &drop_zero_vertex_lift, py::arg("n"));

    py::class_<TransformCertificate>(m, "TransformCertificate")
        .def(py::init([](const std::vector<Vec>& matrix, const Vec& translation) {
                 TransformCertificate c;
                 c.matrix = Mat::from_rows(matrix);
                 c.translation = translation;
                 return c;
             }),
             py::arg("matrix"), py::arg("translation"))
        .def_property_readonly(
            "matrix", [](const TransformCertificate& c) { return matrix_rows(c.matrix); })
        .def_readonly("translation", &TransformCertificate::translation);

    py::class_<EquivalenceReport>(m, "EquivalenceReport")
        .def_readonly("ok", &EquivalenceReport::ok)
        .def_readonly("witness", &EquivalenceReport::witness)
        .def("__bool__", [](const EquivalenceReport& r) { return r.ok; });

    m.def("simplex_to_lecturehall_certificate", &simplex_to_lecturehall_certificate,
          py::arg("n"));
    m.def("verify_integral_equivalence", &verify_integral_equivalence, py::arg("src"),
          py::arg("dst"), py::arg("cert"), py::arg("tmax"));

    m.def(
        "run_verification",
        [](int nmax, int tmax, unsigned seed, int jobs, bool corrupt_certificate) {
            VerifyOptions o;
            o.nmax = nmax;
            o.tmax = tmax;
            o.seed = seed;
            o.jobs = jobs;
            o.corrupt_certificate = corrupt_certificate;
            std::string dumped;
            {
                py::gil_scoped_release release;
                dumped = report_to_json(run_verification(o)).dump();
            }
            return py::module_::import("json").attr("loads")(dumped);
        },
        py::arg("nmax") = 5, py::arg("tmax") = 3, py::arg("seed") = 0, py::arg("jobs") = 1,
        py::arg("corrupt_certificate") = false,
        "Runs the whole battery of cross-checks; returns the report as a dict.");

    m.def(
        "explore",
        [](int n, int jobs) {
            std::vector<ExploreRow> rows;
            {
                py::gil_scoped_release release;
                rows = explore_sn(n, jobs);
                sort_rows(rows);
            }
            py::list out;
            for (const auto& r : rows) {
                py::dict d;
                d["permutation"] = r.perm;
                d["orbit_index"] = r.orbit_index;
                d["orbit_size"] = r.orbit_size;
                d["affine_dim"] = r.affine_dim;
                d["simplex"] = r.simplex;
                d["normalized_volume"] = optional_int(r.normalized_volume);
                d["points_t1"] = r.points_t1;
                d["hollow"] = r.hollow ? py::cast(*r.hollow) : py::object(py::none());
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("n"), py::arg("jobs") = 1,
        "Surveys every sort-orbit hull in S_n; one dict per permutation.");

    m.def(
        "explore_csv",
        [](int n, int jobs) {
            py::gil_scoped_release release;
            auto rows = explore_sn(n, jobs);
            sort_rows(rows);
            return explore_csv(rows);
        },
        py::arg("n"), py::arg("jobs") = 1);
}
