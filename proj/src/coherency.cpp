#include "polarlab/coherency.hpp"

#include <cmath>
#include <sstream>

#include "polarlab/pauli.hpp"

namespace polarlab {

namespace {

Eigen::Matrix4cd kron(const Jones& a, const Jones& b) {
    Eigen::Matrix4cd out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        }
    }
    return out;
}

const std::array<std::array<Eigen::Matrix4cd, 4>, 4>& pauli_products() {
    static const auto table = [] {
        std::array<std::array<Eigen::Matrix4cd, 4>, 4> t;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) t[i][j] = kron(sigma(i), sigma(j).conjugate());
        }
        return t;
    }();
    return table;
}

// Clamp tiny negative eigenvalues and rescale so the sum is one.
Eigen::Vector4d clamp_spectrum(const Eigen::Vector4d& lambdas) {
    Eigen::Vector4d c = lambdas.cwiseMax(0.0);
    const double sum = c.sum();
    if (sum > 0.0) c /= sum;
    return c;
}

}  // namespace

Covariance mueller_to_cov(const Mueller& M) {
    Covariance H = Covariance::Zero();
    const auto& P = pauli_products();
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) H += (0.25 * M(i, j)) * P[i][j];
    }
    return H;
}

Mueller cov_to_mueller(const Covariance& H) {
    Mueller M;
    const auto& P = pauli_products();
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) M(i, j) = (H * P[i][j]).trace().real();
    }
    return M;
}

Eigen::Vector4cd vec_rowmajor(const Jones& J) {
    return Eigen::Vector4cd{J(0, 0), J(0, 1), J(1, 0), J(1, 1)};
}

Jones unvec_rowmajor(const Eigen::Vector4cd& v) {
    Jones J;
    J << v[0], v[1], v[2], v[3];
    return J;
}

ValidityReport validate_mueller(const Mueller& M, const Tolerances& tol) {
    ValidityReport rep;
    rep.m00 = M(0, 0);
    if (!M.allFinite()) {
        rep.reason = "non-finite entries";
        return rep;
    }
    if (!(rep.m00 > 0.0)) {
        rep.reason = "m00 must be positive";
        rep.violation = -rep.m00;
        return rep;
    }
    const Covariance H = mueller_to_cov(M / rep.m00);
    const HermitianSpectrum spec = hermitian_eig(H, tol);
    rep.eigenvalues = spec.eigenvalues;
    rep.min_eigenvalue = spec.eigenvalues[3];
    if (rep.min_eigenvalue < -tol.physical) {
        rep.violation = -rep.min_eigenvalue;
        std::ostringstream os;
        os << "negative covariance eigenvalue " << rep.min_eigenvalue;
        rep.reason = os.str();
        return rep;
    }
    rep.verdict = Verdict::Physical;
    rep.clamped = clamp_spectrum(spec.eigenvalues);
    return rep;
}

SpectralComponents spectral_components(const Covariance& H, const Tolerances& tol) {
    const double trace = H.trace().real();
    if (!(trace > 0.0)) {
        throw Error(ErrorCode::NonPhysical, "covariance trace must be positive");
    }
    const HermitianSpectrum spec = hermitian_eig(H / trace, tol);
    if (spec.eigenvalues[3] < -tol.physical) {
        std::ostringstream os;
        os << "covariance has negative eigenvalue " << spec.eigenvalues[3];
        throw Error(ErrorCode::NonPhysical, os.str());
    }
    SpectralComponents out;
    out.lambdas = clamp_spectrum(spec.eigenvalues);
    out.eigenvectors = spec.eigenvectors;
    out.degenerate = spec.degenerate;
    for (int k = 0; k < 4; ++k) {
        // unit eigenvector has Tr(J^H J) = 1; scale to 2 so m00 = 1
        out.jones[k] = std::sqrt(2.0) * unvec_rowmajor(spec.eigenvectors.col(k));
    }
    return out;
}

}  // namespace polarlab
