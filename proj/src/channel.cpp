#include "polarlab/channel.hpp"

#include <cmath>

#include "polarlab/coherency.hpp"
#include "polarlab/pauli.hpp"

namespace polarlab {

ChoiState choi_from_kraus(const KrausSet& ks, const Tolerances& tol) {
    if (ks.empty()) throw Error(ErrorCode::InvalidEnsemble, "Kraus set is empty");
    ChoiState out;
    out.rho.setZero();
    Jones completeness = Jones::Zero();
    for (const auto& A : ks) {
        // (A (x) I)|Omega> has components A(r, i) / sqrt(2) at index 2 r + i.
        const Eigen::Vector4cd v = vec_rowmajor(A) / std::sqrt(2.0);
        out.rho += v * v.adjoint();
        completeness += A.adjoint() * A;
    }
    out.completeness_deviation = (completeness - Jones::Identity()).cwiseAbs().maxCoeff();
    out.cptp_warning = out.completeness_deviation > tol.kraus_completeness;
    return out;
}

ChoiState choi_from_matrix(const Eigen::Matrix4cd& rho, const Tolerances& tol) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol.hermitian) {
        throw Error(ErrorCode::NotHermitian, "Choi matrix is not Hermitian");
    }
    ChoiState out;
    out.rho = 0.5 * (rho + rho.adjoint());
    return out;
}

Eigen::Matrix2cd partial_trace_output(const Eigen::Matrix4cd& rho) {
    Eigen::Matrix2cd t = Eigen::Matrix2cd::Zero();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int r = 0; r < 2; ++r) t(i, j) += rho(2 * r + i, 2 * r + j);
        }
    }
    return t;
}

TraceCheck check_trace_preservation(const ChoiState& rho, const Tolerances& tol) {
    const Eigen::Matrix2cd diff = partial_trace_output(rho.rho) - 0.5 * Eigen::Matrix2cd::Identity();
    TraceCheck out;
    out.deviation = diff.cwiseAbs().maxCoeff();
    out.preserving = out.deviation < tol.trace_preserving;
    return out;
}

ChannelCoreReport channel_core(const ChoiState& rho, const Tolerances& tol) {
    const CharacteristicDecomposition d = characteristic_decompose_cov(rho.rho, tol);
    if (d.purity.P1 < tol.coherent_core) {
        throw Error(ErrorCode::NoCoherentCore, "channel core undefined: no coherent core (P1 below threshold)");
    }
    if (d.core_not_unique) {
        throw Error(ErrorCode::CoreNotUnique, "channel core undefined: dominant Choi eigenvalue is degenerate");
    }
    ChannelCoreReport rep;
    rep.lambdas = d.spectrum.lambdas;
    rep.purity = d.purity;
    rep.kraus_dominant = d.spectrum.jones[0];

    const Jones& K = rep.kraus_dominant;
    rep.tp_core = (K.adjoint() * K - Jones::Identity()).cwiseAbs().maxCoeff() < tol.trace_preserving;
    rep.dissipative = !rep.tp_core;

    const PolarFactors2 polar = polar2(K, tol);
    rep.unitary_factor = polar.unitary;
    rep.positive_factor = polar.positive;
    rep.polar_degenerate = polar.degenerate;

    const PhaseStripped stripped = su2_strip_phase(polar.unitary, tol);
    rep.special_unitary = stripped.special;
    rep.global_phase = stripped.global_phase;
    rep.generator = su2_log(stripped.special, tol);
    return rep;
}

ChoiState unitary_channel_choi(const Jones& U) { return choi_from_kraus({U}); }

KrausSet amplitude_damping(double gamma) {
    Jones K0;
    Jones K1;
    K0 << 1.0, 0.0, 0.0, std::sqrt(1.0 - gamma);
    K1 << 0.0, std::sqrt(gamma), 0.0, 0.0;
    return {K0, K1};
}

KrausSet completely_depolarizing() {
    return {0.5 * sigma(0), 0.5 * sigma(1), 0.5 * sigma(2), 0.5 * sigma(3)};
}

}  // namespace polarlab
