#pragma once

#include <array>

#include "polarlab/types.hpp"

namespace polarlab {

/// Eigen-decomposition of a 4x4 Hermitian matrix, eigenvalues descending.
struct HermitianSpectrum {
    Eigen::Vector4d eigenvalues;   // lambda0 >= lambda1 >= lambda2 >= lambda3
    Eigen::Matrix4cd eigenvectors; // column k belongs to eigenvalues[k]
    std::array<bool, 3> degenerate{};  // gap k -> k+1 below tolerance
    int sweeps = 0;

    bool any_degenerate() const { return degenerate[0] || degenerate[1] || degenerate[2]; }
};

struct PolarFactors3 {
    Rotation3 rotation;   // det = +1
    Eigen::Matrix3d stretch;  // symmetric; one negative eigenvalue iff det(input) < 0
    bool degenerate = false;  // rotation not unique
};

struct PolarFactors2 {
    Jones unitary;
    Jones positive;  // Hermitian PSD
    bool degenerate = false;
};

struct AxisAngle {
    Eigen::Vector3d axis = Eigen::Vector3d::UnitX();
    double angle = 0.0;  // [0, pi]
    bool pi_branch = false;
};

struct So3Log {
    Eigen::Matrix3d generator;  // antisymmetric, exp(generator) = R
    AxisAngle axis_angle;
};

struct PhaseStripped {
    Jones special;   // det = 1
    double global_phase = 0.0;  // in (-pi/2, pi/2]
};

/// Cyclic complex Jacobi; each eigenvector's largest-magnitude entry is made
/// real positive (ties go to the lowest index).
HermitianSpectrum hermitian_eig(const Eigen::Matrix4cd& H, const Tolerances& tol = {});

/// Same solver on a 2x2 Hermitian matrix (eigenvalues descending).
std::pair<Eigen::Vector2d, Eigen::Matrix2cd> hermitian_eig2(const Eigen::Matrix2cd& H);

PolarFactors3 polar3(const Eigen::Matrix3d& m, const Tolerances& tol = {});
PolarFactors2 polar2(const Jones& K, const Tolerances& tol = {});

/// [v]_x, the cross-product matrix of v.
Eigen::Matrix3d hat(const Eigen::Vector3d& v);
/// Inverse of hat on the antisymmetric part.
Eigen::Vector3d vee(const Eigen::Matrix3d& G);

So3Log so3_log(const Rotation3& R, const Tolerances& tol = {});
Rotation3 so3_exp(const Eigen::Matrix3d& G, const Tolerances& tol = {});

PhaseStripped su2_strip_phase(const Jones& V, const Tolerances& tol = {});

/// (theta, n) with W = cos(theta/2) I - i sin(theta/2) n.sigma, theta in [0, pi].
/// W must have det 1; the sign ambiguity -W ~ W is resolved onto theta <= pi.
AxisAngle su2_log(const Jones& W, const Tolerances& tol = {});

/// Conventional axis sign at theta = pi: first nonzero component positive.
Eigen::Vector3d canonical_axis_sign(const Eigen::Vector3d& axis);

}  // namespace polarlab
