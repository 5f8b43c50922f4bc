#include "polarlab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "polarlab/pauli.hpp"

namespace polarlab {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalThreshold = 1e-14;

template <int N>
double off_diagonal_norm(const Eigen::Matrix<cplx, N, N>& A) {
    double sum = 0.0;
    for (int p = 0; p < N; ++p) {
        for (int q = 0; q < N; ++q) {
            if (p != q) sum += std::norm(A(p, q));
        }
    }
    return std::sqrt(sum);
}

// Multiply column so that its largest-magnitude entry is real positive.
template <typename Vec>
void fix_gauge(Vec&& v) {
    Eigen::Index best = 0;
    double best_mag = std::abs(v[0]);
    for (Eigen::Index k = 1; k < v.size(); ++k) {
        const double mag = std::abs(v[k]);
        if (mag > best_mag * (1.0 + 1e-12) + 1e-15) {
            best = k;
            best_mag = mag;
        }
    }
    if (best_mag > 0.0) v *= std::conj(v[best]) / best_mag;
    v[best] = cplx(std::abs(v[best]), 0.0);
}

template <int N>
int jacobi(Eigen::Matrix<cplx, N, N>& A, Eigen::Matrix<cplx, N, N>& V) {
    using Mat = Eigen::Matrix<cplx, N, N>;
    V.setIdentity();
    const double scale = std::max(1.0, A.norm());
    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm<N>(A) <= kOffDiagonalThreshold * scale) break;
        for (int p = 0; p < N - 1; ++p) {
            for (int q = p + 1; q < N; ++q) {
                const cplx apq = A(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                // Phase rotation makes the (p, q) element real, then a real
                // Jacobi rotation annihilates it.
                const cplx phase = apq / mag;
                const double app = A(p, p).real();
                const double aqq = A(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                Mat G = Mat::Identity();
                G(p, p) = c;
                G(p, q) = s;
                G(q, p) = -s * std::conj(phase);
                G(q, q) = c * std::conj(phase);
                A = G.adjoint() * A * G;
                A(p, q) = 0.0;
                A(q, p) = 0.0;
                V = V * G;
            }
        }
        A = 0.5 * (A + A.adjoint()).eval();
    }
    return sweep;
}

template <int N>
std::vector<int> descending_order(const Eigen::Matrix<cplx, N, N>& A) {
    std::vector<int> order(N);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return A(a, a).real() > A(b, b).real(); });
    return order;
}

}  // namespace

HermitianSpectrum hermitian_eig(const Eigen::Matrix4cd& H, const Tolerances& tol) {
    if ((H - H.adjoint()).cwiseAbs().maxCoeff() >= tol.hermitian) {
        throw Error(ErrorCode::NotHermitian, "hermitian_eig: input is not Hermitian");
    }
    Eigen::Matrix4cd A = 0.5 * (H + H.adjoint());
    Eigen::Matrix4cd V;
    HermitianSpectrum out;
    out.sweeps = jacobi<4>(A, V);

    const auto order = descending_order<4>(A);
    for (int k = 0; k < 4; ++k) {
        out.eigenvalues[k] = A(order[k], order[k]).real();
        out.eigenvectors.col(k) = V.col(order[k]);
        fix_gauge(out.eigenvectors.col(k));
    }
    for (int k = 0; k < 3; ++k) {
        out.degenerate[k] = out.eigenvalues[k] - out.eigenvalues[k + 1] < tol.degenerate_gap;
    }
    return out;
}

std::pair<Eigen::Vector2d, Eigen::Matrix2cd> hermitian_eig2(const Eigen::Matrix2cd& H) {
    Eigen::Matrix2cd A = 0.5 * (H + H.adjoint());
    Eigen::Matrix2cd V;
    jacobi<2>(A, V);
    const auto order = descending_order<2>(A);
    Eigen::Vector2d values;
    Eigen::Matrix2cd vectors;
    for (int k = 0; k < 2; ++k) {
        values[k] = A(order[k], order[k]).real();
        vectors.col(k) = V.col(order[k]);
        fix_gauge(vectors.col(k));
    }
    return {values, vectors};
}

PolarFactors3 polar3(const Eigen::Matrix3d& m, const Tolerances& tol) {
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::Matrix3d& U = svd.matrixU();
    const Eigen::Matrix3d& V = svd.matrixV();
    Eigen::Vector3d sv = svd.singularValues();
    const double smallest = sv[2];

    const double sign = (U * V.transpose()).determinant() < 0 ? -1.0 : 1.0;
    const Eigen::Vector3d flip{1.0, 1.0, sign};
    sv[2] *= sign;

    PolarFactors3 out;
    out.rotation = U * flip.asDiagonal() * V.transpose();
    out.stretch = V * sv.asDiagonal() * V.transpose();
    out.stretch = 0.5 * (out.stretch + out.stretch.transpose()).eval();
    out.degenerate = smallest < tol.singular;
    return out;
}

PolarFactors2 polar2(const Jones& K, const Tolerances& tol) {
    // U(2) is connected, so U V^H needs no determinant correction.
    Eigen::JacobiSVD<Jones> svd(K, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Jones& U = svd.matrixU();
    const Jones& V = svd.matrixV();
    const Eigen::Vector2d sv = svd.singularValues();

    PolarFactors2 out;
    out.unitary = U * V.adjoint();
    out.positive = V * sv.cast<cplx>().asDiagonal() * V.adjoint();
    out.positive = 0.5 * (out.positive + out.positive.adjoint()).eval();
    out.degenerate = sv[1] < tol.singular;
    return out;
}

Eigen::Matrix3d hat(const Eigen::Vector3d& v) {
    Eigen::Matrix3d G;
    G << 0.0, -v[2], v[1],
         v[2], 0.0, -v[0],
         -v[1], v[0], 0.0;
    return G;
}

Eigen::Vector3d vee(const Eigen::Matrix3d& G) {
    return 0.5 * Eigen::Vector3d{G(2, 1) - G(1, 2), G(0, 2) - G(2, 0), G(1, 0) - G(0, 1)};
}

Eigen::Vector3d canonical_axis_sign(const Eigen::Vector3d& axis) {
    for (int k = 0; k < 3; ++k) {
        if (std::abs(axis[k]) > 1e-12) return axis[k] < 0 ? Eigen::Vector3d(-axis) : axis;
    }
    return axis;
}

So3Log so3_log(const Rotation3& R, const Tolerances& tol) {
    const double orth = (R.transpose() * R - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
    if (orth > tol.rotation || std::abs(R.determinant() - 1.0) > tol.rotation) {
        throw Error(ErrorCode::NotRotation, "so3_log: input is not in SO(3)");
    }
    constexpr double pi = std::numbers::pi;

    // sin(theta) n = vee(R), cos(theta) = (tr R - 1) / 2
    const Eigen::Vector3d w = vee(R);
    const double cos_t = std::clamp((R.trace() - 1.0) / 2.0, -1.0, 1.0);
    const double sin_t = w.norm();
    const double theta = std::atan2(sin_t, cos_t);

    So3Log out;
    out.axis_angle.angle = theta;
    out.axis_angle.pi_branch = theta > pi - tol.pi_branch;

    if (sin_t == 0.0 && cos_t > 0.0) {
        out.generator.setZero();
        out.axis_angle.angle = 0.0;
        return out;
    }
    if (!out.axis_angle.pi_branch) {
        out.axis_angle.axis = w / sin_t;
    } else {
        // Symmetric part: cos(theta) I + (1 - cos(theta)) n n^T.
        const Eigen::Matrix3d nn =
            (0.5 * (R + R.transpose()) - cos_t * Eigen::Matrix3d::Identity()) / (1.0 - cos_t);
        Eigen::Index col = 0;
        nn.diagonal().maxCoeff(&col);
        Eigen::Vector3d n = nn.col(col) / std::sqrt(std::max(nn(col, col), 0.0));
        n.normalize();
        const double along = n.dot(w);
        if (std::abs(along) > 1e-12) {
            if (along < 0) n = -n;
        } else {
            n = canonical_axis_sign(n);
        }
        out.axis_angle.axis = n;
    }
    out.generator = theta * hat(out.axis_angle.axis);
    return out;
}

Rotation3 so3_exp(const Eigen::Matrix3d& G, const Tolerances& tol) {
    if ((G + G.transpose()).cwiseAbs().maxCoeff() > tol.antisymmetry) {
        throw Error(ErrorCode::NotAntisymmetric, "so3_exp: generator is not antisymmetric");
    }
    const Eigen::Vector3d w = vee(G);
    const double theta = w.norm();
    const Eigen::Matrix3d K = hat(w);
    double a;  // sin(theta) / theta
    double b;  // (1 - cos(theta)) / theta^2
    if (theta < 1e-6) {
        const double t2 = theta * theta;
        a = 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
        b = 0.5 - t2 / 24.0 + t2 * t2 / 720.0;
    } else {
        a = std::sin(theta) / theta;
        b = (1.0 - std::cos(theta)) / (theta * theta);
    }
    return Eigen::Matrix3d::Identity() + a * K + b * K * K;
}

PhaseStripped su2_strip_phase(const Jones& V, const Tolerances& tol) {
    if (!is_unitary(V, tol.unitary)) {
        throw Error(ErrorCode::InvalidUnitary, "su2_strip_phase: input is not unitary");
    }
    PhaseStripped out;
    // std::arg lies in [-pi, pi]; map -pi onto pi so alpha lands in (-pi/2, pi/2].
    double arg_det = std::arg(V.determinant());
    if (arg_det <= -std::numbers::pi) arg_det = std::numbers::pi;
    out.global_phase = arg_det / 2.0;
    out.special = std::polar(1.0, -out.global_phase) * V;
    return out;
}

AxisAngle su2_log(const Jones& W, const Tolerances& tol) {
    if (!is_unitary(W, tol.unitary) || std::abs(W.determinant() - 1.0) > tol.unitary) {
        throw Error(ErrorCode::InvalidUnitary, "su2_log: input is not in SU(2)");
    }
    const cplx i{0.0, 1.0};
    double c = 0.5 * W.trace().real();
    Eigen::Vector3d s;
    for (int k = 1; k <= 3; ++k) s[k - 1] = (0.5 * i * (sigma(k) * W).trace()).real();
    if (c < 0.0) {
        c = -c;
        s = -s;
    }
    AxisAngle out;
    const double sn = s.norm();
    out.angle = 2.0 * std::atan2(sn, c);
    if (sn == 0.0) {
        out.angle = 0.0;
        return out;
    }
    out.axis = s / sn;
    out.pi_branch = out.angle > std::numbers::pi - tol.pi_branch;
    if (out.pi_branch) out.axis = canonical_axis_sign(out.axis);
    return out;
}

}  // namespace polarlab
