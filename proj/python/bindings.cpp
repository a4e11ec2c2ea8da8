#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "crsnoma/analytic_outage.hpp"
#include "crsnoma/analytic_rates.hpp"
#include "crsnoma/model.hpp"
#include "crsnoma/oracle.hpp"
#include "crsnoma/specfun.hpp"
#include "crsnoma/sweep.hpp"

namespace py = pybind11;
using namespace crsnoma;

PYBIND11_MODULE(_core, m) {
    m.doc() = "CRS-NOMA receive-diversity rate/outage analysis (C++ core)";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<UnsupportedOrderError>(m, "UnsupportedOrderError", PyExc_ValueError);
    py::register_exception<InfeasibleConfigError>(m, "InfeasibleConfigError", PyExc_ValueError);
    py::register_exception<NumericalRegimeError>(m, "NumericalRegimeError", PyExc_ArithmeticError);
    py::register_exception<ToleranceError>(m, "ToleranceError", PyExc_ArithmeticError);

    py::enum_<Combiner>(m, "Combiner")
        .value("SC", Combiner::sc)
        .value("MRC", Combiner::mrc);
    py::enum_<rates::Scheme>(m, "Scheme")
        .value("NOMA_SC", rates::Scheme::noma_sc)
        .value("NOMA_MRC", rates::Scheme::noma_mrc)
        .value("OMA_SC", rates::Scheme::oma_sc)
        .value("OMA_MRC", rates::Scheme::oma_mrc);
    py::enum_<oracle::RateKind>(m, "RateKind")
        .value("S1_SC", oracle::RateKind::s1_sc)
        .value("S2_SC", oracle::RateKind::s2_sc)
        .value("S1_MRC", oracle::RateKind::s1_mrc)
        .value("S2_MRC", oracle::RateKind::s2_mrc)
        .value("OMA_SC", oracle::RateKind::oma_sc)
        .value("OMA_MRC", oracle::RateKind::oma_mrc);
    py::enum_<oracle::OmaCombiner>(m, "OmaCombiner")
        .value("MRC_ACROSS_SLOTS", oracle::OmaCombiner::mrc_across_slots)
        .value("SC_ACROSS_SLOTS", oracle::OmaCombiner::sc_across_slots);

    py::class_<SystemConfig>(m, "SystemConfig")
        .def(py::init<>())
        .def_readwrite("omega_sd", &SystemConfig::omega_sd)
        .def_readwrite("omega_sr", &SystemConfig::omega_sr)
        .def_readwrite("omega_rd", &SystemConfig::omega_rd)
        .def_readwrite("n_r", &SystemConfig::n_r)
        .def_readwrite("n_d", &SystemConfig::n_d)
        .def_readwrite("a1", &SystemConfig::a1)
        .def_readwrite("a2", &SystemConfig::a2)
        .def_readwrite("r1", &SystemConfig::r1)
        .def_readwrite("r2", &SystemConfig::r2)
        .def_readwrite("max_antennas", &SystemConfig::max_antennas)
        .def("eps1", &SystemConfig::eps1)
        .def("eps2", &SystemConfig::eps2)
        .def("validate", &SystemConfig::validate);

    py::class_<FeasibilityReport>(m, "FeasibilityReport")
        .def_readonly("feasible", &FeasibilityReport::feasible)
        .def_readonly("eps1", &FeasibilityReport::eps1)
        .def_readonly("margin", &FeasibilityReport::margin)
        .def_readonly("note", &FeasibilityReport::note);
    m.def("validate_noma_feasibility", &validate_noma_feasibility);

    py::class_<DerivedConstants>(m, "DerivedConstants")
        .def(py::init<const SystemConfig&, double>())
        .def_property_readonly("rho", &DerivedConstants::rho)
        .def_property_readonly("eps1", &DerivedConstants::eps1)
        .def_property_readonly("eps2", &DerivedConstants::eps2)
        .def_property_readonly("feasible", &DerivedConstants::feasible)
        .def_property_readonly("theta1", &DerivedConstants::theta1)
        .def_property_readonly("theta2", &DerivedConstants::theta2)
        .def_property_readonly("theta", &DerivedConstants::theta)
        .def_property_readonly("phi", &DerivedConstants::phi)
        .def_property_readonly("xi", &DerivedConstants::xi)
        .def("chi", &DerivedConstants::chi)
        .def("theta_kj", &DerivedConstants::theta_kj);
    m.def("derive_constants", &derive_constants);
    m.def("db_to_linear", &db_to_linear);
    m.def("linear_to_db", &linear_to_db);

    m.def("upper_gamma_zero", &specfun::upper_gamma_zero);
    m.def("exp_scaled_upper_gamma_zero", &specfun::exp_scaled_upper_gamma_zero);
    m.def("upper_gamma_neg_int", &specfun::upper_gamma_neg_int);
    m.def("exp_scaled_upper_gamma_neg_int", &specfun::exp_scaled_upper_gamma_neg_int);
    m.def("regularized_lower_gamma", &specfun::regularized_lower_gamma);

    py::class_<rates::RateResult>(m, "RateResult")
        .def_readonly("c_s1", &rates::RateResult::c_s1)
        .def_readonly("c_s2", &rates::RateResult::c_s2)
        .def_readonly("c_sum", &rates::RateResult::c_sum);
    m.def("rate_s1_sc", &rates::rate_s1_sc);
    m.def("rate_s2_sc", &rates::rate_s2_sc);
    m.def("rate_sum_sc", &rates::rate_sum_sc);
    m.def("rate_s1_mrc", &rates::rate_s1_mrc);
    m.def("rate_s2_mrc", &rates::rate_s2_mrc);
    m.def("rate_sum_mrc", &rates::rate_sum_mrc);

    py::class_<outage::OutageValue>(m, "OutageValue")
        .def_readonly("p", &outage::OutageValue::p)
        .def_readonly("infeasible", &outage::OutageValue::infeasible);
    py::class_<outage::DiversityAsymptote>(m, "DiversityAsymptote")
        .def_readonly("coefficient", &outage::DiversityAsymptote::coefficient)
        .def_readonly("order", &outage::DiversityAsymptote::order);
    m.def("cdf_sc_gain", &outage::cdf_sc_gain);
    m.def("cdf_mrc_gain", &outage::cdf_mrc_gain);
    m.def("outage_s1", &outage::outage_s1);
    m.def("outage_s2", &outage::outage_s2);
    m.def("diversity_asymptote_s1", &outage::diversity_asymptote_s1);
    m.def("diversity_asymptote_s2", &outage::diversity_asymptote_s2);

    py::class_<oracle::McEstimate>(m, "McEstimate")
        .def_readonly("mean", &oracle::McEstimate::mean)
        .def_readonly("std_error", &oracle::McEstimate::std_error)
        .def_readonly("trials", &oracle::McEstimate::trials)
        .def_readonly("seed", &oracle::McEstimate::seed);
    py::class_<oracle::McRate>(m, "McRate")
        .def_readonly("s1", &oracle::McRate::s1)
        .def_readonly("s2", &oracle::McRate::s2)
        .def_readonly("sum", &oracle::McRate::sum);
    py::class_<oracle::McOutage>(m, "McOutage")
        .def_readonly("s1", &oracle::McOutage::s1)
        .def_readonly("s2", &oracle::McOutage::s2);
    m.def("mc_rate", &oracle::mc_rate, py::arg("cfg"), py::arg("rho"), py::arg("scheme"),
          py::arg("trials"), py::arg("seed"),
          py::arg("oma") = oracle::OmaCombiner::mrc_across_slots, py::arg("workers") = 0,
          py::call_guard<py::gil_scoped_release>());
    m.def("mc_outage", &oracle::mc_outage, py::arg("cfg"), py::arg("rho"), py::arg("combiner"),
          py::arg("trials"), py::arg("seed"), py::arg("workers") = 0,
          py::call_guard<py::gil_scoped_release>());
    m.def("quad_rate", &oracle::quad_rate, py::arg("cfg"), py::arg("rho"), py::arg("kind"),
          py::arg("oma") = oracle::OmaCombiner::mrc_across_slots);
    m.def("oma_second_hop_cdf", &oracle::oma_second_hop_cdf);

    m.def("sweep_csv", [](const sweep::SweepOptions& opts) {
        std::ostringstream os;
        sweep::run_sweep(opts).emit_csv(os);
        return os.str();
    });
    py::enum_<sweep::Quantity>(m, "Quantity")
        .value("RATES", sweep::Quantity::rates)
        .value("OUTAGE", sweep::Quantity::outage);
    py::enum_<rates::Method>(m, "Method")
        .value("CLOSED_FORM", rates::Method::closed_form)
        .value("QUADRATURE", rates::Method::quadrature)
        .value("MONTE_CARLO", rates::Method::monte_carlo);
    py::class_<sweep::SweepOptions>(m, "SweepOptions")
        .def(py::init<>())
        .def_readwrite("base", &sweep::SweepOptions::base)
        .def_readwrite("antennas", &sweep::SweepOptions::antennas)
        .def_readwrite("combiners", &sweep::SweepOptions::combiners)
        .def_readwrite("quantities", &sweep::SweepOptions::quantities)
        .def_readwrite("methods", &sweep::SweepOptions::methods)
        .def_readwrite("include_oma", &sweep::SweepOptions::include_oma)
        .def_readwrite("seed", &sweep::SweepOptions::seed)
        .def_readwrite("trials_rates", &sweep::SweepOptions::trials_rates)
        .def_readwrite("trials_outage", &sweep::SweepOptions::trials_outage)
        .def_readwrite("workers", &sweep::SweepOptions::workers)
        .def("set_snr_grid_db", [](sweep::SweepOptions& o, double start, double stop, double step) {
            o.grid = SnrGrid::from_db_range(start, stop, step);
        });
}
