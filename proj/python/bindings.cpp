#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polarlab/app.hpp"
#include "polarlab/channel.hpp"
#include "polarlab/characteristic.hpp"
#include "polarlab/coherency.hpp"
#include "polarlab/ensemble.hpp"
#include "polarlab/holonomy.hpp"
#include "polarlab/kernels.hpp"
#include "polarlab/pauli.hpp"

namespace py = pybind11;
using namespace polarlab;

namespace {

JonesEnsemble make_ensemble(const std::vector<std::pair<double, Jones>>& members) {
    std::vector<EnsembleMember> m;
    for (const auto& [w, J] : members) m.push_back({w, J});
    return JonesEnsemble(std::move(m), 1e-9);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "polarlab core: characteristic decomposition, antisymmetric Mueller generator, qubit channel cores";

    static py::exception<Error> exc(m, "PolarlabError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            const std::string msg = std::string(to_string(e.code())) + ": " + e.what();
            py::set_error(exc, msg.c_str());
        }
    });

    py::class_<Tolerances>(m, "Tolerances")
        .def(py::init<>())
        .def_readwrite("physical", &Tolerances::physical)
        .def_readwrite("degenerate_gap", &Tolerances::degenerate_gap)
        .def_readwrite("coherent_core", &Tolerances::coherent_core)
        .def_readwrite("nonregular", &Tolerances::nonregular)
        .def_readwrite("singular", &Tolerances::singular)
        .def_readwrite("pi_branch", &Tolerances::pi_branch)
        .def_readwrite("phase_undefined", &Tolerances::phase_undefined)
        .def_readwrite("trace_preserving", &Tolerances::trace_preserving);

    m.def("sigma", [](int i) { return Jones(sigma(i)); }, py::arg("i"));
    m.def("su2_rotation", &su2_rotation, py::arg("axis"), py::arg("angle"));
    m.def("spinor_to_bloch", &spinor_to_bloch, py::arg("psi"), py::arg("tol") = Tolerances{});
    m.def("jones_to_mueller", &jones_to_mueller, py::arg("J"));
    m.def("su2_to_so3", &su2_to_so3, py::arg("U"), py::arg("tol") = Tolerances{});

    py::class_<HermitianSpectrum>(m, "HermitianSpectrum")
        .def_readonly("eigenvalues", &HermitianSpectrum::eigenvalues)
        .def_readonly("eigenvectors", &HermitianSpectrum::eigenvectors)
        .def_readonly("degenerate", &HermitianSpectrum::degenerate);
    m.def("hermitian_eig", &hermitian_eig, py::arg("H"), py::arg("tol") = Tolerances{});

    py::class_<PolarFactors3>(m, "PolarFactors3")
        .def_readonly("rotation", &PolarFactors3::rotation)
        .def_readonly("stretch", &PolarFactors3::stretch)
        .def_readonly("degenerate", &PolarFactors3::degenerate);
    py::class_<PolarFactors2>(m, "PolarFactors2")
        .def_readonly("unitary", &PolarFactors2::unitary)
        .def_readonly("positive", &PolarFactors2::positive)
        .def_readonly("degenerate", &PolarFactors2::degenerate);
    m.def("polar3", &polar3, py::arg("m"), py::arg("tol") = Tolerances{});
    m.def("polar2", &polar2, py::arg("K"), py::arg("tol") = Tolerances{});

    py::class_<AxisAngle>(m, "AxisAngle")
        .def_readonly("axis", &AxisAngle::axis)
        .def_readonly("angle", &AxisAngle::angle)
        .def_readonly("pi_branch", &AxisAngle::pi_branch);
    m.def(
        "so3_log",
        [](const Rotation3& R, const Tolerances& tol) {
            const So3Log l = so3_log(R, tol);
            return py::make_tuple(l.generator, l.axis_angle);
        },
        py::arg("R"), py::arg("tol") = Tolerances{});
    m.def("so3_exp", &so3_exp, py::arg("G"), py::arg("tol") = Tolerances{});
    m.def(
        "su2_strip_phase",
        [](const Jones& V, const Tolerances& tol) {
            const PhaseStripped s = su2_strip_phase(V, tol);
            return py::make_tuple(s.special, s.global_phase);
        },
        py::arg("V"), py::arg("tol") = Tolerances{});

    m.def("mueller_to_cov", &mueller_to_cov, py::arg("M"));
    m.def("cov_to_mueller", &cov_to_mueller, py::arg("H"));

    py::class_<ValidityReport>(m, "ValidityReport")
        .def_property_readonly("physical", &ValidityReport::physical)
        .def_readonly("m00", &ValidityReport::m00)
        .def_readonly("eigenvalues", &ValidityReport::eigenvalues)
        .def_readonly("min_eigenvalue", &ValidityReport::min_eigenvalue)
        .def_readonly("violation", &ValidityReport::violation)
        .def_readonly("reason", &ValidityReport::reason);
    m.def("validate_mueller", &validate_mueller, py::arg("M"), py::arg("tol") = Tolerances{});

    py::class_<PurityIndices>(m, "PurityIndices")
        .def_readonly("P1", &PurityIndices::P1)
        .def_readonly("P2", &PurityIndices::P2)
        .def_readonly("P3", &PurityIndices::P3);
    m.def("compute_ipp", &compute_ipp, py::arg("lambdas"), py::arg("tol") = Tolerances{});

    py::class_<CharacteristicDecomposition>(m, "CharacteristicDecomposition")
        .def_readonly("m00", &CharacteristicDecomposition::m00)
        .def_readonly("normalized", &CharacteristicDecomposition::normalized)
        .def_readonly("purity", &CharacteristicDecomposition::purity)
        .def_property_readonly("lambdas", [](const CharacteristicDecomposition& d) { return d.spectrum.lambdas; })
        .def_property_readonly("dominant_jones",
                               [](const CharacteristicDecomposition& d) { return d.spectrum.jones[0]; })
        .def_readonly("pure_core", &CharacteristicDecomposition::pure_core)
        .def_readonly("mixture2", &CharacteristicDecomposition::mixture2)
        .def_readonly("mixture3", &CharacteristicDecomposition::mixture3)
        .def_readonly("depolarizer", &CharacteristicDecomposition::depolarizer)
        .def_readonly("nonpure", &CharacteristicDecomposition::nonpure)
        .def_property_readonly("discriminant",
                               [](const CharacteristicDecomposition& d) { return d.discriminant.rho; })
        .def_property_readonly("nonregular",
                               [](const CharacteristicDecomposition& d) { return d.discriminant.nonregular; })
        .def_readonly("no_coherent_core", &CharacteristicDecomposition::no_coherent_core)
        .def_readonly("core_not_unique", &CharacteristicDecomposition::core_not_unique)
        .def("weights", &CharacteristicDecomposition::weights)
        .def("reconstruct", &CharacteristicDecomposition::reconstruct)
        .def("reconstruct_grouped", &CharacteristicDecomposition::reconstruct_grouped);
    m.def("characteristic_decompose", &characteristic_decompose, py::arg("M"), py::arg("tol") = Tolerances{});

    py::class_<HolonomyReport>(m, "HolonomyReport")
        .def_readonly("rotation", &HolonomyReport::rotation)
        .def_readonly("stretch", &HolonomyReport::stretch)
        .def_readonly("generator", &HolonomyReport::generator)
        .def_readonly("axis_angle", &HolonomyReport::axis_angle)
        .def_readonly("canonical_lift", &HolonomyReport::canonical_lift)
        .def_readonly("P1", &HolonomyReport::P1)
        .def_readonly("degenerate", &HolonomyReport::degenerate);
    m.def("extract_amg", &extract_amg, py::arg("decomp"), py::arg("tol") = Tolerances{});
    m.def(
        "pancharatnam_phase",
        [](const Jones& U, const Spinor& psi, const Tolerances& tol) {
            const Overlap o = pancharatnam_phase(U, psi, tol);
            return py::make_tuple(o.phase, o.modulus);
        },
        py::arg("U"), py::arg("psi"), py::arg("tol") = Tolerances{});
    m.def(
        "coherent_visibility",
        [](const CharacteristicDecomposition& d, const HolonomyReport& h, const Spinor& psi, const Tolerances& tol) {
            const PhaseSample s = coherent_visibility(d, h, psi, tol);
            return py::make_tuple(s.geometric_phase, s.coherent_visibility_modulus);
        },
        py::arg("decomp"), py::arg("report"), py::arg("psi"), py::arg("tol") = Tolerances{});

    m.def(
        "ensemble_to_mueller",
        [](const std::vector<std::pair<double, Jones>>& members) { return ensemble_to_mueller(make_ensemble(members)); },
        py::arg("members"), "members: list of (weight, jones)");
    m.def(
        "ensemble_visibility",
        [](const std::vector<std::pair<double, Jones>>& members, const Spinor& psi) {
            return ensemble_visibility(make_ensemble(members), psi);
        },
        py::arg("members"), py::arg("psi"));
    m.def("random_physical_mueller", &random_physical_mueller, py::arg("seed"), py::arg("rank"));

    m.def(
        "choi_from_kraus", [](const KrausSet& ks) { return choi_from_kraus(ks).rho; }, py::arg("kraus"));
    m.def(
        "check_trace_preservation",
        [](const Eigen::Matrix4cd& rho) {
            const TraceCheck t = check_trace_preservation(choi_from_matrix(rho));
            return py::make_tuple(t.preserving, t.deviation);
        },
        py::arg("rho"));

    py::class_<ChannelCoreReport>(m, "ChannelCoreReport")
        .def_readonly("lambdas", &ChannelCoreReport::lambdas)
        .def_readonly("purity", &ChannelCoreReport::purity)
        .def_readonly("kraus_dominant", &ChannelCoreReport::kraus_dominant)
        .def_readonly("tp_core", &ChannelCoreReport::tp_core)
        .def_readonly("unitary_factor", &ChannelCoreReport::unitary_factor)
        .def_readonly("special_unitary", &ChannelCoreReport::special_unitary)
        .def_readonly("global_phase", &ChannelCoreReport::global_phase)
        .def_readonly("generator", &ChannelCoreReport::generator)
        .def_readonly("dissipative", &ChannelCoreReport::dissipative);
    m.def(
        "channel_core",
        [](const Eigen::Matrix4cd& rho, const Tolerances& tol) { return channel_core(choi_from_matrix(rho, tol), tol); },
        py::arg("rho"), py::arg("tol") = Tolerances{});
    m.def("amplitude_damping", &amplitude_damping, py::arg("gamma"));

    m.def(
        "analyze",
        [](const std::string& mode, const std::string& path, const std::vector<std::string>& probes) {
            AnalysisRequest req;
            req.mode = parse_mode(mode);
            req.input_path = path;
            req.probes = probes;
            req.format = Format::Report;
            const RunResult r = run_request(req);
            return py::make_tuple(r.exit_status, r.report.dump());
        },
        py::arg("mode"), py::arg("path"), py::arg("probes") = std::vector<std::string>{},
        "Run a CLI analysis mode on a file; returns (exit_status, report_json)");
}
