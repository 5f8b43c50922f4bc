#pragma once

// Random generators and implementation-independent oracles for the test suites.

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "polarlab/types.hpp"

namespace polarlab::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20261015);
    return gen;
}

inline double uniform(double a = 0.0, double b = 1.0) {
    return std::uniform_real_distribution<double>(a, b)(rng());
}

inline double gaussian() { return std::normal_distribution<double>(0.0, 1.0)(rng()); }

inline cplx cgauss() { return {gaussian(), gaussian()}; }

inline Eigen::Vector3d random_unit3() {
    Eigen::Vector3d v(gaussian(), gaussian(), gaussian());
    return v.normalized();
}

inline Spinor random_spinor() {
    Spinor psi(cgauss(), cgauss());
    return psi.normalized();
}

inline Jones random_complex2() {
    Jones J;
    J << cgauss(), cgauss(), cgauss(), cgauss();
    return J;
}

/// Haar-ish unitary from QR of a complex Gaussian matrix.
inline Jones random_unitary() {
    Eigen::HouseholderQR<Jones> qr(random_complex2());
    Jones Q = qr.householderQ();
    const Jones R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < 2; ++k) Q.col(k) *= R(k, k) / std::abs(R(k, k));
    return Q;
}

/// PSD Hermitian 2x2 with eigenvalues in [lo, hi].
inline Jones random_psd2(double lo, double hi) {
    const Jones V = random_unitary();
    Eigen::Vector2cd d(uniform(lo, hi), uniform(lo, hi));
    return V * d.asDiagonal() * V.adjoint();
}

inline Eigen::Matrix4cd random_hermitian_psd4(int rank = 4) {
    Eigen::Matrix4cd H = Eigen::Matrix4cd::Zero();
    for (int k = 0; k < rank; ++k) {
        Eigen::Vector4cd g(cgauss(), cgauss(), cgauss(), cgauss());
        H += uniform(0.1, 1.0) * g * g.adjoint();
    }
    return H / H.trace().real();
}

/// exp of the antisymmetric matrix, via Eigen's general matrix exponential.
inline Eigen::Matrix3d expm(const Eigen::Matrix3d& G) { return G.exp(); }

inline Eigen::Matrix3d random_rotation(double max_angle = 3.0) {
    const Eigen::Vector3d n = random_unit3();
    const double t = uniform(0.0, max_angle);
    return Eigen::AngleAxisd(t, n).toRotationMatrix();
}

/// Mueller matrix via A (J (x) J*) A^-1, independent of the trace formula.
inline Mueller mueller_via_kronecker(const Jones& J) {
    const cplx i{0.0, 1.0};
    Eigen::Matrix4cd A;
    // rows: (|x|^2 + |y|^2, |x|^2 - |y|^2, 2 Re x y*, -2 Im x y*) on (xx*, xy*, yx*, yy*)
    A << 1, 0, 0, 1,
         1, 0, 0, -1,
         0, 1, 1, 0,
         0, i, -i, 0;
    Eigen::Matrix4cd JJ;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) JJ.block<2, 2>(2 * r, 2 * c) = J(r, c) * J.conjugate();
    return (A * JJ * A.inverse()).real();
}

template <typename A, typename B>
double max_abs_diff(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace polarlab::testing
