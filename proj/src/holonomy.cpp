#include "polarlab/holonomy.hpp"

#include <cmath>
#include <numbers>

#include "polarlab/pauli.hpp"

namespace polarlab {

double wrap_phase(double a) {
    constexpr double pi = std::numbers::pi;
    a = std::remainder(a, 2.0 * pi);
    if (a <= -pi) a += 2.0 * pi;
    return a;
}

HolonomyReport amg_from_pure_mueller(const Mueller& pure, const Tolerances& tol) {
    const Eigen::Matrix3d block = pure.bottomRightCorner<3, 3>();
    const PolarFactors3 polar = polar3(block, tol);
    const So3Log log = so3_log(polar.rotation, tol);

    HolonomyReport rep;
    rep.rotation = polar.rotation;
    rep.stretch = polar.stretch;
    rep.generator = log.generator;
    rep.axis_angle = log.axis_angle;
    rep.canonical_lift = su2_rotation(log.axis_angle.axis, log.axis_angle.angle);
    rep.degenerate = polar.degenerate;
    return rep;
}

HolonomyReport extract_amg(const CharacteristicDecomposition& decomp, const Tolerances& tol) {
    if (decomp.purity.P1 < tol.coherent_core) {
        throw Error(ErrorCode::NoCoherentCore, "holonomy undefined: no coherent core (P1 below threshold)");
    }
    if (decomp.core_not_unique) {
        throw Error(ErrorCode::CoreNotUnique,
                    "holonomy undefined: dominant covariance eigenvalue is degenerate, pure core not unique");
    }
    HolonomyReport rep = amg_from_pure_mueller(decomp.pure_core, tol);
    rep.P1 = decomp.purity.P1;
    return rep;
}

Overlap pancharatnam_phase(const Jones& U, const Spinor& psi, const Tolerances& tol) {
    if (std::abs(psi.norm() - 1.0) > tol.spinor_norm) {
        throw Error(ErrorCode::InvalidSpinor, "pancharatnam_phase: spinor is not normalized");
    }
    const cplx v = (psi.adjoint() * U * psi)(0, 0);
    Overlap out;
    out.modulus = std::abs(v);
    if (out.modulus < tol.phase_undefined) {
        throw Error(ErrorCode::PhaseUndefined, "phase undefined: overlap modulus vanishes at this probe");
    }
    out.phase = wrap_phase(std::arg(v));
    return out;
}

PhaseSample coherent_visibility(const CharacteristicDecomposition& decomp, const HolonomyReport& report,
                                const Spinor& psi, const Tolerances& tol) {
    PhaseSample s;
    s.probe = spinor_to_bloch(psi, tol);
    s.geometric_phase = pancharatnam_phase(report.canonical_lift, psi, tol).phase;

    const Jones& J0 = decomp.spectrum.jones[0];
    Eigen::JacobiSVD<Jones> svd(J0);
    const double opnorm = svd.singularValues()[0];
    const double overlap = opnorm > 0.0 ? std::abs((psi.adjoint() * J0 * psi)(0, 0)) / opnorm : 0.0;
    s.coherent_visibility_modulus = decomp.purity.P1 * overlap;
    return s;
}

std::vector<PhaseSample> phase_sweep(const CharacteristicDecomposition& decomp, const HolonomyReport& report,
                                     const std::vector<Spinor>& probes, const Tolerances& tol) {
    std::vector<PhaseSample> out;
    out.reserve(probes.size());
    for (const auto& psi : probes) out.push_back(coherent_visibility(decomp, report, psi, tol));
    return out;
}

}  // namespace polarlab
