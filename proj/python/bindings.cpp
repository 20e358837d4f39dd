#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thetafock/coeffs.hpp"
#include "thetafock/elliptic.hpp"
#include "thetafock/errors.hpp"
#include "thetafock/hermite.hpp"
#include "thetafock/kernel.hpp"
#include "thetafock/verify.hpp"
#include "thetafock/zeros.hpp"

namespace py = pybind11;
using namespace thetafock;

PYBIND11_MODULE(_core, m) {
    m.doc() = "automorphic reproducing kernels, lattice sums and complex "
              "Hermite machinery (C++ core)";

    py::register_exception<Error>(m, "ThetafockError", PyExc_RuntimeError);

    // lattice
    py::class_<LatticePoint>(m, "LatticePoint")
        .def_readonly("m", &LatticePoint::m)
        .def_readonly("n", &LatticePoint::n)
        .def_readonly("value", &LatticePoint::value)
        .def("__repr__", [](const LatticePoint& p) {
            return "LatticePoint(m=" + std::to_string(p.m) +
                   ", n=" + std::to_string(p.n) + ")";
        });

    py::class_<Lattice>(m, "Lattice")
        .def(py::init<cplx, cplx>(), py::arg("omega1"), py::arg("omega2"))
        .def_property_readonly("omega1", &Lattice::omega1)
        .def_property_readonly("omega2", &Lattice::omega2)
        .def("cell_area", &Lattice::cell_area)
        .def("point", &Lattice::point, py::arg("m"), py::arg("n"))
        .def("shell", &Lattice::shell, py::arg("k"))
        .def("dimension", &Lattice::dimension, py::arg("nu"));

    py::class_<FundamentalCell>(m, "FundamentalCell")
        .def(py::init<const Lattice&, cplx>(), py::arg("lattice"),
             py::arg("origin") = cplx(0.0))
        .def("reduce",
             [](const FundamentalCell& c, cplx z) {
                 auto r = c.reduce(z);
                 return py::make_tuple(r.z0, r.gamma);
             },
             py::arg("z"))
        .def("map", &FundamentalCell::map, py::arg("s"), py::arg("t"));

    // pseudo-character
    py::class_<PseudoCharacter>(m, "PseudoCharacter")
        .def_static("from_generators", &PseudoCharacter::from_generators,
                    py::arg("lattice"), py::arg("nu"), py::arg("u1"), py::arg("u2"))
        .def_static("weierstrass", &PseudoCharacter::weierstrass,
                    py::arg("lattice"), py::arg("nu"))
        .def("evaluate",
             py::overload_cast<std::int64_t, std::int64_t>(
                 &PseudoCharacter::evaluate, py::const_),
             py::arg("m"), py::arg("n"))
        .def("verify_cocycle", &PseudoCharacter::verify_cocycle, py::arg("radius"))
        .def_property_readonly("is_real", &PseudoCharacter::is_real)
        .def_property_readonly("nu", &PseudoCharacter::nu)
        .def_property_readonly("k", &PseudoCharacter::k);

    // kernel
    py::class_<ThetaFockSpace>(m, "ThetaFockSpace")
        .def(py::init<const Lattice&, double, PseudoCharacter>(),
             py::arg("lattice"), py::arg("nu"), py::arg("chi"))
        .def(py::init<PseudoCharacter>(), py::arg("chi"))
        .def_property_readonly("lattice", &ThetaFockSpace::lattice)
        .def_property_readonly("nu", &ThetaFockSpace::nu)
        .def_property_readonly("dim", &ThetaFockSpace::dim);

    py::class_<SumResult>(m, "SumResult")
        .def_readonly("value", &SumResult::value)
        .def_readonly("tail_bound", &SumResult::tail_bound)
        .def_readonly("shells_used", &SumResult::shells_used)
        .def_readonly("abs_mass", &SumResult::abs_mass)
        .def("__repr__", [](const SumResult& r) {
            return "SumResult(value=(" + std::to_string(r.value.real()) + "," +
                   std::to_string(r.value.imag()) + "), shells=" +
                   std::to_string(r.shells_used) + ")";
        });

    m.def("kernel_eval", &kernel_eval, py::arg("space"), py::arg("z"),
          py::arg("w"), py::arg("eps") = 1e-12,
          py::arg("shell_cap") = kDefaultShellCap);
    m.def("kernel_eval_series", &kernel_eval_series, py::arg("space"),
          py::arg("z"), py::arg("w"), py::arg("M"), py::arg("N"),
          py::arg("eps") = 1e-14);
    m.def("poincare_monomial", &poincare_monomial, py::arg("space"),
          py::arg("m"), py::arg("z"), py::arg("eps") = 1e-12,
          py::arg("shell_cap") = kDefaultShellCap);
    m.def("kernel_via_poincare", &kernel_via_poincare, py::arg("space"),
          py::arg("z"), py::arg("w"), py::arg("M"), py::arg("eps") = 1e-12);
    m.def("bi_invariance_residual", &bi_invariance_residual, py::arg("space"),
          py::arg("z"), py::arg("w"), py::arg("gamma"), py::arg("gamma2"),
          py::arg("eps") = 1e-12);
    m.def("reproducing_residual", &reproducing_residual, py::arg("space"),
          py::arg("m"), py::arg("z"), py::arg("quad_n") = 48);

    // hermite
    m.def("hermite_eval", &hermite_eval, py::arg("nu"), py::arg("m"),
          py::arg("n"), py::arg("xi"), py::arg("degree_cap") = kHermiteDegreeCap);
    m.def("genfun2_residual", &genfun2_residual, py::arg("nu"), py::arg("a"),
          py::arg("b"), py::arg("xi"), py::arg("M"), py::arg("N"));
    m.def("genfun1_residual", &genfun1_residual, py::arg("nu"), py::arg("z"),
          py::arg("xi"), py::arg("n"), py::arg("M"));

    // coeffs
    py::class_<CoeffRequest>(m, "CoeffRequest")
        .def(py::init([](int m_, int n_, int p_, int q_, double eps) {
                 return CoeffRequest{m_, n_, p_, q_, eps};
             }),
             py::arg("m") = 0, py::arg("n") = 0, py::arg("p") = 0,
             py::arg("q") = 0, py::arg("eps") = 1e-14);
    m.def("coeff", &coeff, py::arg("space"), py::arg("request"));
    m.def("coeff",
          [](const ThetaFockSpace& sp, int m_, int n_, int p_, int q_, double eps) {
              return coeff(sp, CoeffRequest{m_, n_, p_, q_, eps});
          },
          py::arg("space"), py::arg("m"), py::arg("n") = 0, py::arg("p") = 0,
          py::arg("q") = 0, py::arg("eps") = 1e-14);
    m.def("gaussian_char_sum", &gaussian_char_sum, py::arg("t"));
    m.def("scaling_residual", &scaling_residual, py::arg("space"),
          py::arg("lambda_"), py::arg("m"), py::arg("n"), py::arg("p"),
          py::arg("q"));
    m.def("recurrence_residuals", &recurrence_residuals, py::arg("space"),
          py::arg("degree"));
    m.def("conj_symmetry_residual", &conj_symmetry_residual, py::arg("space"),
          py::arg("m"), py::arg("n"), py::arg("p"), py::arg("q"));

    py::class_<ParityRow>(m, "ParityRow")
        .def_readonly("m", &ParityRow::m)
        .def_readonly("n", &ParityRow::n)
        .def_readonly("p", &ParityRow::p)
        .def_readonly("q", &ParityRow::q)
        .def_readonly("magnitude", &ParityRow::magnitude)
        .def_readonly("mass", &ParityRow::mass)
        .def_readonly("mass_ratio", &ParityRow::mass_ratio)
        .def_readonly("vanishes", &ParityRow::vanishes);
    py::class_<ParityReport>(m, "ParityReport")
        .def_readonly("rows", &ParityReport::rows)
        .def_readonly("max_even_magnitude", &ParityReport::max_even_magnitude)
        .def_readonly("worst_scale_ratio", &ParityReport::worst_scale_ratio)
        .def_readonly("worst_mass_ratio", &ParityReport::worst_mass_ratio);
    m.def("parity_report", &parity_report, py::arg("space"), py::arg("degree"));

    // elliptic
    m.def("theta2", &theta2, py::arg("q"));
    m.def("theta3", &theta3, py::arg("q"));
    py::class_<ThetaIdentityReport>(m, "ThetaIdentityReport")
        .def_readonly("nu", &ThetaIdentityReport::nu)
        .def_readonly("printed_residual", &ThetaIdentityReport::printed_residual)
        .def_readonly("theta_combination", &ThetaIdentityReport::theta_combination)
        .def_readonly("split_sum_combination",
                      &ThetaIdentityReport::split_sum_combination);
    m.def("theta_identity_report", &theta_identity_report, py::arg("nu"));
    m.def("theta_identity_residual", &theta_identity_residual, py::arg("nu"));

    py::class_<WeierstrassData>(m, "WeierstrassData")
        .def(py::init<const Lattice&>(), py::arg("lattice"))
        .def_property_readonly("eta1", &WeierstrassData::eta1)
        .def_property_readonly("eta2", &WeierstrassData::eta2)
        .def("sigma", &WeierstrassData::sigma, py::arg("z"))
        .def("zeta", &WeierstrassData::zeta, py::arg("z"))
        .def("quasi_period", &WeierstrassData::quasi_period, py::arg("gamma"));
    py::class_<MuInvariant>(m, "MuInvariant")
        .def_readonly("mu", &MuInvariant::mu)
        .def_readonly("nu", &MuInvariant::nu);
    m.def("mu_invariant", &mu_invariant, py::arg("weierstrass"), py::arg("nu"));
    m.def("modified_sigma", &modified_sigma, py::arg("weierstrass"),
          py::arg("mu"), py::arg("z"));

    // zeros
    py::class_<ZeroCountResult>(m, "ZeroCountResult")
        .def_readonly("count", &ZeroCountResult::count)
        .def_readonly("winding_raw", &ZeroCountResult::winding_raw)
        .def_readonly("shift", &ZeroCountResult::shift)
        .def_readonly("path_min_abs", &ZeroCountResult::path_min_abs);
    m.def("zero_count", &zero_count, py::arg("space"), py::arg("w"),
          py::arg("nodes") = 64, py::arg("shift") = std::nullopt);

    py::class_<LocatedZero>(m, "LocatedZero")
        .def_readonly("location", &LocatedZero::location)
        .def_readonly("refined_abs", &LocatedZero::refined_abs);
    py::class_<ZeroList>(m, "ZeroList")
        .def_readonly("zeros", &ZeroList::zeros)
        .def_readonly("failed_seeds", &ZeroList::failed_seeds);
    m.def("zero_locate", &zero_locate, py::arg("space"), py::arg("w"),
          py::arg("grid") = 28);

    py::class_<XiProbeResult>(m, "XiProbeResult")
        .def_readonly("candidates", &XiProbeResult::candidates)
        .def_readonly("low_confidence", &XiProbeResult::low_confidence)
        .def_readonly("kernel_scale", &XiProbeResult::kernel_scale);
    m.def("xi_probe", &xi_probe, py::arg("space"), py::arg("wgrid"),
          py::arg("zgrid"));

    m.def("sigma_factor_residual", &sigma_factor_residual, py::arg("space"),
          py::arg("samples"));
    m.def("sigma_factor_default_samples", &sigma_factor_default_samples,
          py::arg("space"), py::arg("count") = 10);

    // verification suite
    py::class_<CriterionResult>(m, "CriterionResult")
        .def_readonly("id", &CriterionResult::id)
        .def_readonly("name", &CriterionResult::name)
        .def_readonly("passed", &CriterionResult::passed)
        .def_readonly("observed", &CriterionResult::observed)
        .def_readonly("threshold", &CriterionResult::threshold)
        .def_readonly("seconds", &CriterionResult::seconds)
        .def_readonly("detail", &CriterionResult::detail);
    m.def("run_acceptance", &run_acceptance);
}
