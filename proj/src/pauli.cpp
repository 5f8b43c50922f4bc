#include "polarlab/pauli.hpp"

#include <algorithm>
#include <cmath>

namespace polarlab {

namespace {

std::array<Jones, 4> make_basis() {
    const cplx i{0.0, 1.0};
    std::array<Jones, 4> s;
    s[0] << 1.0, 0.0, 0.0, 1.0;
    s[1] << 1.0, 0.0, 0.0, -1.0;
    s[2] << 0.0, 1.0, 1.0, 0.0;
    s[3] << 0.0, -i, i, 0.0;
    return s;
}

}  // namespace

const std::array<Jones, 4>& pauli_basis() {
    static const std::array<Jones, 4> basis = make_basis();
    return basis;
}

const Jones& sigma(int i) { return pauli_basis().at(static_cast<std::size_t>(i)); }

Jones pauli_dot(const Eigen::Vector3d& n) {
    return n[0] * sigma(1) + n[1] * sigma(2) + n[2] * sigma(3);
}

Jones su2_rotation(const Eigen::Vector3d& axis, double angle) {
    const cplx i{0.0, 1.0};
    return std::cos(angle / 2) * sigma(0) - i * std::sin(angle / 2) * pauli_dot(axis);
}

Bloch spinor_to_bloch(const Spinor& psi, const Tolerances& tol) {
    if (std::abs(psi.norm() - 1.0) > tol.spinor_norm) {
        throw Error(ErrorCode::InvalidSpinor,
                    "spinor is not normalized (|psi| = " + std::to_string(psi.norm()) + ")");
    }
    Bloch u;
    for (int k = 1; k <= 3; ++k) {
        u[k - 1] = (psi.adjoint() * sigma(k) * psi)(0, 0).real();
    }
    return u;
}

Spinor bloch_to_spinor(const Bloch& u) {
    const Bloch n = u.normalized();
    // u1 is the polar axis of the sigma1 eigenbasis; azimuth lives in (u2, u3).
    const double polar = std::acos(std::clamp(n[0], -1.0, 1.0));
    const double azimuth = std::atan2(n[2], n[1]);
    Spinor psi;
    psi[0] = std::cos(polar / 2);
    psi[1] = std::polar(std::sin(polar / 2), azimuth);
    return psi;
}

Stokes stokes_from_spinor(const Spinor& psi, const Tolerances& tol) {
    const Bloch u = spinor_to_bloch(psi, tol);
    return Stokes{1.0, u[0], u[1], u[2]};
}

Mueller jones_to_mueller(const Jones& J) {
    const Jones Jh = J.adjoint();
    Mueller M;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            M(i, j) = 0.5 * (sigma(i) * J * sigma(j) * Jh).trace().real();
        }
    }
    return M;
}

bool is_unitary(const Jones& U, double tol) {
    return ((U.adjoint() * U) - Jones::Identity()).cwiseAbs().maxCoeff() <= tol;
}

Rotation3 su2_to_so3(const Jones& U, const Tolerances& tol) {
    if (!is_unitary(U, tol.unitary)) {
        throw Error(ErrorCode::InvalidUnitary, "su2_to_so3: input is not unitary");
    }
    const Jones Uh = U.adjoint();
    Rotation3 R;
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            R(i - 1, j - 1) = 0.5 * (sigma(i) * U * sigma(j) * Uh).trace().real();
        }
    }
    return R;
}

Stokes apply_mueller(const Mueller& M, const Stokes& s) { return M * s; }

double degree_of_polarization(const Stokes& s) {
    return s.tail<3>().norm() / s[0];
}

}  // namespace polarlab
