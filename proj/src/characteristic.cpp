#include "polarlab/characteristic.hpp"

#include <cmath>
#include <sstream>

#include "polarlab/pauli.hpp"

namespace polarlab {

PurityIndices compute_ipp(const Eigen::Vector4d& l, const Tolerances& tol) {
    constexpr double order_slack = 1e-12;
    for (int k = 0; k < 3; ++k) {
        if (l[k] + order_slack < l[k + 1]) {
            throw Error(ErrorCode::InvalidSpectrum, "compute_ipp: eigenvalues are not descending");
        }
    }
    if (l[3] < -tol.physical) {
        throw Error(ErrorCode::InvalidSpectrum, "compute_ipp: negative eigenvalue");
    }
    if (std::abs(l.sum() - 1.0) > tol.ipp_sum) {
        std::ostringstream os;
        os << "compute_ipp: eigenvalues sum to " << l.sum() << ", expected 1";
        throw Error(ErrorCode::InvalidSpectrum, os.str());
    }
    return {l[0] - l[1], l[0] + l[1] - 2.0 * l[2], l[0] + l[1] + l[2] - 3.0 * l[3]};
}

Discriminant discriminant_component(const Covariance& H, const SpectralComponents& spec,
                                    const PurityIndices& purity, const Tolerances& tol) {
    const Eigen::Matrix4cd Hn = H / H.trace().real();
    const Eigen::Vector4cd v0 = spec.eigenvectors.col(0);
    Discriminant d;
    d.rho = Hn - purity.P1 * (v0 * v0.adjoint()) - (1.0 - purity.P3) * 0.25 * Eigen::Matrix4cd::Identity();
    d.max_imag = d.rho.imag().cwiseAbs().maxCoeff();
    d.nonregular = d.max_imag > tol.nonregular;
    return d;
}

Mueller ideal_depolarizer() {
    Mueller D = Mueller::Zero();
    D(0, 0) = 1.0;
    return D;
}

Eigen::Vector4d CharacteristicDecomposition::weights() const {
    return {purity.P1, purity.P2 - purity.P1, purity.P3 - purity.P2, 1.0 - purity.P3};
}

Mueller CharacteristicDecomposition::reconstruct() const {
    const Eigen::Vector4d w = weights();
    return w[0] * pure_core + w[1] * mixture2 + w[2] * mixture3 + w[3] * depolarizer;
}

Mueller CharacteristicDecomposition::reconstruct_grouped() const {
    if (!nonpure) return pure_core;
    return purity.P1 * pure_core + (1.0 - purity.P1) * *nonpure;
}

namespace {

CharacteristicDecomposition decompose_normalized(const Covariance& Hn, const Mueller& normalized,
                                                 double m00, const Tolerances& tol) {
    CharacteristicDecomposition d;
    d.m00 = m00;
    d.normalized = normalized;
    d.spectrum = spectral_components(Hn, tol);
    d.purity = compute_ipp(d.spectrum.lambdas, tol);

    std::array<Mueller, 4> pure;
    for (int k = 0; k < 4; ++k) pure[k] = jones_to_mueller(d.spectrum.jones[k]);

    d.pure_core = pure[0];
    d.mixture2 = (pure[0] + pure[1]) / 2.0;
    d.mixture3 = (pure[0] + pure[1] + pure[2]) / 3.0;
    d.depolarizer = ideal_depolarizer();

    const Eigen::Vector4d w = d.weights();
    d.discriminant_mueller = w[1] * d.mixture2 + w[2] * d.mixture3;
    d.discriminant_weight = d.purity.P3 - d.purity.P1;
    if (d.purity.P1 < 1.0 - 1e-12) {
        d.nonpure = (d.discriminant_mueller + w[3] * d.depolarizer) / (1.0 - d.purity.P1);
    }
    d.discriminant = discriminant_component(Hn, d.spectrum, d.purity, tol);
    d.core_not_unique = d.spectrum.degenerate[0];
    d.no_coherent_core = d.purity.P1 < tol.coherent_core || d.core_not_unique;
    return d;
}

}  // namespace

CharacteristicDecomposition characteristic_decompose(const Mueller& M, const Tolerances& tol) {
    const ValidityReport validity = validate_mueller(M, tol);
    if (!validity.physical()) {
        throw Error(ErrorCode::NonPhysical, "Mueller matrix is not physically realizable: " + validity.reason);
    }
    const Mueller normalized = M / validity.m00;
    return decompose_normalized(mueller_to_cov(normalized), normalized, validity.m00, tol);
}

CharacteristicDecomposition characteristic_decompose_cov(const Covariance& H, const Tolerances& tol) {
    const double trace = H.trace().real();
    if (!(trace > 0.0)) throw Error(ErrorCode::NonPhysical, "covariance trace must be positive");
    const Covariance Hn = H / trace;
    return decompose_normalized(Hn, cov_to_mueller(Hn), trace, tol);
}

}  // namespace polarlab
