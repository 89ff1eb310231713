#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "spinlab/clifford.hpp"
#include "spinlab/errors.hpp"
#include "spinlab/harness.hpp"
#include "spinlab/norms.hpp"
#include "spinlab/observer.hpp"
#include "spinlab/spin_factor.hpp"

namespace py = pybind11;
using namespace spinlab;

namespace {

using DblMv = clifford::Multivector<double>;

observer::ObserverFrame<double> standard_frame() {
    return observer::ObserverFrame<double>::standard();
}

DblMv vector_from_coords(const std::array<double, 4>& c) {
    return observer::from_frame_coordinates<double>(c, standard_frame());
}

std::array<double, 4> coords_of(const DblMv& a) {
    return observer::frame_coordinates(a, standard_frame());
}

SpinFactorElement<double> element_from(double scalar, const std::vector<double>& vec, int m,
                                       int n) {
    return SpinFactorElement<double>(scalar, vec, Signature{m, n});
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "spin-factor algebra, uncurling metrics, and spacetime products";

    py::register_exception<SignatureMismatch>(m, "SignatureMismatchError");
    py::register_exception<NullElement>(m, "NullElementError");
    py::register_exception<OutsideNormDomain>(m, "OutsideNormDomainError");
    py::register_exception<PathCrossesNullCone>(m, "PathCrossesNullConeError");
    py::register_exception<EmptySolution>(m, "EmptySolutionError");
    py::register_exception<SamplingFailure>(m, "SamplingFailureError");
    py::register_exception<UsageError>(m, "UsageError");

    // --- spin factor --------------------------------------------------------

    py::class_<Signature>(m, "Signature")
        .def(py::init([](int plus, int minus) { return Signature{plus, minus}; }),
             py::arg("m"), py::arg("n"))
        .def_readonly("m", &Signature::plus)
        .def_readonly("n", &Signature::minus)
        .def("__repr__", [](const Signature& s) {
            return "Signature(" + std::to_string(s.plus) + "," + std::to_string(s.minus) + ")";
        });

    py::class_<SpinFactorElement<double>>(m, "SpinFactorElement")
        .def(py::init(&element_from), py::arg("scalar"), py::arg("vector"), py::arg("m") = 3,
             py::arg("n") = 0)
        .def_readonly("scalar", &SpinFactorElement<double>::scalar)
        .def_readonly("vector", &SpinFactorElement<double>::vec)
        .def("__eq__", [](const SpinFactorElement<double>& a,
                          const SpinFactorElement<double>& b) { return a == b; })
        .def("__repr__", [](const SpinFactorElement<double>& x) {
            std::string out = "SpinFactorElement(" + std::to_string(x.scalar) + ", [";
            for (std::size_t i = 0; i < x.vec.size(); ++i)
                out += (i ? "," : "") + std::to_string(x.vec[i]);
            return out + "])";
        });

    m.def("identity", [](int mm, int nn) {
        return SpinFactorElement<double>::identity(Signature{mm, nn});
    }, py::arg("m") = 3, py::arg("n") = 0);
    m.def("bullet", &bullet<double>, "Jordan product on R (+) R^{m,n}");
    m.def("conjugate", &conjugate<double>);
    m.def("quadratic_form", &quadratic_form<double>);
    m.def("inverse", &inverse<double>);
    m.def("minkowski_inner", &minkowski_inner<double>);
    m.def("circ", &circ<double>, "non-unital product x bullet conjugate(y)");

    // --- clifford kernel ----------------------------------------------------

    py::class_<clifford::CliffordSignature>(m, "CliffordSignature")
        .def(py::init([](int p, int q) { return clifford::CliffordSignature{p, q}; }),
             py::arg("p"), py::arg("q"))
        .def_readonly("p", &clifford::CliffordSignature::p)
        .def_readonly("q", &clifford::CliffordSignature::q);

    py::class_<DblMv>(m, "Multivector")
        .def_static("scalar",
                    [](int p, int q, double v) {
                        return DblMv::scalar(clifford::CliffordSignature{p, q}, v);
                    })
        .def_static("basis_vector",
                    [](int p, int q, int i) {
                        return DblMv::basis_vector(clifford::CliffordSignature{p, q}, i);
                    })
        .def_static("basis_blade",
                    [](int p, int q, unsigned mask, double v) {
                        return DblMv::basis_blade(clifford::CliffordSignature{p, q}, mask, v);
                    },
                    py::arg("p"), py::arg("q"), py::arg("mask"), py::arg("value") = 1.0)
        .def("coefficients",
             [](const DblMv& x) {
                 std::vector<double> c(x.blade_count());
                 for (std::size_t i = 0; i < c.size(); ++i) c[i] = x[i];
                 return c;
             })
        .def("grade", [](const DblMv& x, int k) { return clifford::grade_project(x, k); })
        .def("reverse", [](const DblMv& x) { return clifford::reverse(x); })
        .def("scalar_part", [](const DblMv& x) { return clifford::scalar_part(x); })
        .def("__add__", [](const DblMv& a, const DblMv& b) { return a + b; })
        .def("__sub__", [](const DblMv& a, const DblMv& b) { return a - b; })
        .def("__mul__", [](const DblMv& a, const DblMv& b) {
            return clifford::geometric_product(a, b);
        })
        .def("__rmul__", [](const DblMv& a, double c) { return c * a; })
        .def("__xor__", [](const DblMv& a, const DblMv& b) { return clifford::wedge(a, b); })
        .def("__eq__", [](const DblMv& a, const DblMv& b) { return a == b; });

    m.def("geometric_product", &clifford::geometric_product<double>);
    m.def("wedge", &clifford::wedge<double>);
    m.def("grade_project", &clifford::grade_project<double>);
    m.def("vector_inner", &clifford::vector_inner<double>);

    // --- observer products (standard frame, coordinate lists) ----------------

    m.def("quad_product",
          [](const std::array<double, 4>& a, const std::array<double, 4>& b) {
              return observer::quad_product(vector_from_coords(a), vector_from_coords(b),
                                            standard_frame());
          },
          "quad pseudoscalar product of two grade-1 elements given by frame coordinates");
    m.def("quad_product_paths",
          [](const std::array<double, 4>& a, const std::array<double, 4>& b) {
              const auto paths = observer::quad_product_paths(
                  vector_from_coords(a), vector_from_coords(b), standard_frame());
              return py::make_tuple(paths.wedge_value, paths.determinant_value);
          });
    m.def("partial_wedge",
          [](const std::array<double, 4>& a, const std::array<double, 4>& b) {
              const auto c = coords_of(observer::partial_wedge(
                  vector_from_coords(a), vector_from_coords(b), standard_frame()));
              return std::vector<double>{c[1], c[2], c[3]};
          });
    m.def("partial_wedge_dagger",
          [](const std::array<double, 4>& a, const std::array<double, 4>& b) {
              const auto c = coords_of(observer::partial_wedge_dagger(
                  vector_from_coords(a), vector_from_coords(b), standard_frame()));
              return std::vector<double>{c[1], c[2], c[3]};
          });
    m.def("diamond", [](const std::array<double, 4>& a, const std::array<double, 4>& b) {
        return coords_of(observer::diamond(vector_from_coords(a), vector_from_coords(b),
                                           standard_frame()));
    });
    m.def("spacetime_split", [](const std::array<double, 4>& a) {
        const auto split = observer::spacetime_split(vector_from_coords(a), standard_frame());
        return py::make_tuple(split.time,
                              std::vector<double>{split.space[0], split.space[1], split.space[2]});
    });
    m.def("boost",
          [](const std::array<double, 4>& w, double v) {
              return coords_of(observer::boost(vector_from_coords(w),
                                               observer::BoostVelocity(v), standard_frame()));
          },
          py::arg("w"), py::arg("v"));
    m.def("check_invariances",
          [](const std::array<double, 4>& a, const std::array<double, 4>& b, double v) {
              const auto r = observer::check_invariances(
                  vector_from_coords(a), vector_from_coords(b), standard_frame(),
                  observer::BoostVelocity(v));
              py::dict out;
              out["boost_invariant"] = r.boost_invariant;
              out["exchange_invariant"] = r.exchange_invariant;
              out["commutative"] = r.commutative;
              out["hemi_linear"] = r.hemi_linear;
              out["boost_residual"] = r.boost_residual;
              out["exchange_residual"] = r.exchange_residual;
              out["commutativity_residual"] = r.commutativity_residual;
              out["hemi_residual"] = r.hemi_residual;
              return out;
          },
          py::arg("a"), py::arg("b"), py::arg("v"));

    // --- norms ----------------------------------------------------------------

    m.def("closed_form_norm", &norms::closed_form_norm);
    m.def("unital_norm",
          [](const SpinFactorElement<double>& s, int steps) {
              const auto r = norms::unital_norm(s, norms::identity_candidate(s.sig), steps);
              return py::make_tuple(r.value, r.path_steps, r.residual_estimate);
          },
          py::arg("s"), py::arg("steps") = 1024,
          "integrated unital norm with the identity uncurling metric; returns "
          "(value, path_steps, residual_estimate)");
    m.def("solve_uncurling",
          [](int mm, int nn, int samples, std::uint64_t seed) {
              norms::SolverConfig cfg;
              cfg.sample_count = samples;
              cfg.seed = seed;
              const auto r = norms::solve_uncurling(Signature{mm, nn}, cfg);
              const std::size_t dim = r.candidate.entries.size();
              std::vector<std::vector<double>> entries(dim, std::vector<double>(dim));
              for (std::size_t i = 0; i < dim; ++i)
                  for (std::size_t j = 0; j < dim; ++j) entries[i][j] = r.candidate.entries(i, j);
              py::dict out;
              out["curl_nullspace_dim"] = r.curl_nullspace_dim;
              out["L"] = entries;
              out["constraint_residual"] = r.constraint_residual;
              return out;
          },
          py::arg("m") = 3, py::arg("n") = 0, py::arg("samples") = 200,
          py::arg("seed") = std::uint64_t{0x5EEDCAFE});
    m.def("gradient_relation_residual",
          [](const SpinFactorElement<double>& s, int steps) {
              return norms::gradient_relation_residual(s, norms::identity_candidate(s.sig),
                                                       steps);
          },
          py::arg("s"), py::arg("steps") = 256);

    // --- harness ----------------------------------------------------------------

    m.def("run_suite",
          [](const std::string& suite, std::uint64_t seed, int trials, double tol,
             const std::string& mode, const std::string& json_path) {
              harness::RunConfig cfg;
              cfg.suite = suite;
              cfg.seed = seed;
              cfg.trials = trials;
              cfg.tol = tol;
              cfg.mode = harness::parse_mode(mode);
              if (!json_path.empty()) cfg.json_path = json_path;
              const auto report = harness::run_suite(cfg);
              return py::make_tuple(report.passed, harness::to_json(report));
          },
          py::arg("suite") = "all", py::arg("seed") = std::uint64_t{42},
          py::arg("trials") = 200, py::arg("tol") = 1e-9, py::arg("mode") = "float",
          py::arg("json_path") = "",
          "run the registered property suites; returns (passed, report_json)");

#ifdef SPINLAB_VERSION
    m.attr("__version__") = SPINLAB_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
