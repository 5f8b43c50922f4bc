#pragma once

#include <array>

#include "polarlab/kernels.hpp"
#include "polarlab/types.hpp"

namespace polarlab {

// Covariance convention: H = 1/4 sum_ij m_ij (sigma_i (x) conj(sigma_j)), with
// the first tensor factor the output index and the second the input index.
// A pure M(J) maps to 1/2 vec(J) vec(J)^H where vec(J)[2 r + c] = J(r, c), so
// covariance eigenvectors reshape row-major straight into Jones matrices.

Covariance mueller_to_cov(const Mueller& M);
Mueller cov_to_mueller(const Covariance& H);

/// Row-major vectorization J(r, c) -> v[2 r + c].
Eigen::Vector4cd vec_rowmajor(const Jones& J);
Jones unvec_rowmajor(const Eigen::Vector4cd& v);

enum class Verdict { Physical, NonPhysical };

struct ValidityReport {
    Verdict verdict = Verdict::NonPhysical;
    double m00 = 0.0;
    Eigen::Vector4d eigenvalues = Eigen::Vector4d::Zero();  // of H / m00, descending
    Eigen::Vector4d clamped = Eigen::Vector4d::Zero();      // after clamping, trace 1
    double min_eigenvalue = 0.0;
    double violation = 0.0;  // magnitude of the offending negativity, 0 when physical
    std::string reason;

    bool physical() const { return verdict == Verdict::Physical; }
};

/// Cloude test on the normalized covariance. Eigenvalues in [-tol, 0) are
/// clamped to zero and the rest rescaled to keep unit trace.
ValidityReport validate_mueller(const Mueller& M, const Tolerances& tol = {});

struct SpectralComponents {
    Eigen::Vector4d lambdas;             // descending, clamped, sum to 1 for normalized input
    Eigen::Matrix4cd eigenvectors;       // gauge-fixed
    std::array<Jones, 4> jones;          // Tr(J^H J) = 2
    std::array<bool, 3> degenerate{};
};

/// Spectrum of a physical covariance matrix with Jones realizations of each
/// eigenvector. Throws NonPhysical when eigenvalues fall below -tol.physical
/// (relative to the trace).
SpectralComponents spectral_components(const Covariance& H, const Tolerances& tol = {});

}  // namespace polarlab
