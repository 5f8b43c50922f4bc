#pragma once

#include <array>

#include "polarlab/types.hpp"

namespace polarlab {

// Polarization-optics Pauli basis:
//   sigma(0) = identity
//   sigma(1) = diag(1, -1)          horizontal/vertical
//   sigma(2) = [[0, 1], [1, 0]]     +45/-45 linear
//   sigma(3) = [[0, -i], [i, 0]]    circular (the purely imaginary one)
// sigma(1) sigma(2) = i sigma(3) cyclically, so SU(2) -> SO(3) is right-handed.
const Jones& sigma(int i);
const std::array<Jones, 4>& pauli_basis();

/// Jones matrix n . (sigma1, sigma2, sigma3).
Jones pauli_dot(const Eigen::Vector3d& n);

/// exp(-i angle n.sigma / 2) for a unit axis n.
Jones su2_rotation(const Eigen::Vector3d& axis, double angle);

/// u_i = <psi|sigma_i|psi>, i = 1..3. Throws InvalidSpinor unless |psi| = 1.
Bloch spinor_to_bloch(const Spinor& psi, const Tolerances& tol = {});

/// Inverse of spinor_to_bloch on the unit sphere with c0 real and nonnegative.
Spinor bloch_to_spinor(const Bloch& u);

Stokes stokes_from_spinor(const Spinor& psi, const Tolerances& tol = {});

/// m_ij = 1/2 Tr(sigma_i J sigma_j J^H).
Mueller jones_to_mueller(const Jones& J);

/// Adjoint representation R_ij = 1/2 Tr(sigma_i U sigma_j U^H), i, j = 1..3.
Rotation3 su2_to_so3(const Jones& U, const Tolerances& tol = {});

Stokes apply_mueller(const Mueller& M, const Stokes& s);

/// Degree of polarization |(s1,s2,s3)| / s0.
double degree_of_polarization(const Stokes& s);

bool is_unitary(const Jones& U, double tol);

}  // namespace polarlab
