#include <doctest.h>

#include <numbers>

#include "polarlab/kernels.hpp"
#include "polarlab/pauli.hpp"
#include "support.hpp"

using namespace polarlab;
using namespace polarlab::testing;
using std::numbers::pi;

namespace {

void check_spectrum(const Eigen::Matrix4cd& H, const HermitianSpectrum& s, double tol) {
    Eigen::Matrix4cd synth = Eigen::Matrix4cd::Zero();
    for (int k = 0; k < 4; ++k) synth += s.eigenvalues[k] * s.eigenvectors.col(k) * s.eigenvectors.col(k).adjoint();
    CHECK(max_abs_diff(synth, H) < tol);
    CHECK(max_abs_diff(s.eigenvectors.adjoint() * s.eigenvectors, Eigen::Matrix4cd::Identity()) < tol);
    for (int k = 0; k < 3; ++k) CHECK(s.eigenvalues[k] >= s.eigenvalues[k + 1]);
}

}  // namespace

TEST_SUITE("matrix_kernels") {

TEST_CASE("hermitian_eig: maximally mixed input is fully degenerate") {
    const auto s = hermitian_eig(Eigen::Matrix4cd::Identity() / 4.0);
    CHECK(max_abs_diff(s.eigenvalues, Eigen::Vector4d::Constant(0.25)) < 1e-15);
    CHECK(s.degenerate[0]);
    CHECK(s.degenerate[1]);
    CHECK(s.degenerate[2]);
    check_spectrum(Eigen::Matrix4cd::Identity() / 4.0, s, 1e-14);
}

TEST_CASE("hermitian_eig: diag(1,0,0,0)") {
    Eigen::Matrix4cd H = Eigen::Matrix4cd::Zero();
    H(0, 0) = 1.0;
    const auto s = hermitian_eig(H);
    CHECK(max_abs_diff(s.eigenvalues, Eigen::Vector4d(1, 0, 0, 0)) < 1e-15);
    CHECK(max_abs_diff(s.eigenvectors.col(0), Eigen::Vector4cd::Unit(0)) < 1e-15);
}

TEST_CASE("hermitian_eig: equal-weight pair of orthonormal vectors") {
    for (int k = 0; k < 50; ++k) {
        Eigen::Matrix4cd G;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) G(i, j) = cgauss();
        const Eigen::Matrix4cd Q = Eigen::HouseholderQR<Eigen::Matrix4cd>(G).householderQ();
        const Eigen::Matrix4cd H = 0.5 * (Q.col(0) * Q.col(0).adjoint() + Q.col(1) * Q.col(1).adjoint());
        const auto s = hermitian_eig(H);
        CHECK(max_abs_diff(s.eigenvalues, Eigen::Vector4d(0.5, 0.5, 0, 0)) < 1e-12);
        CHECK(s.degenerate[0]);
        check_spectrum(H, s, 1e-12);
    }
}

TEST_CASE("hermitian_eig: agrees with a reference solver on random PSD inputs") {
    for (int k = 0; k < 1000; ++k) {
        const Eigen::Matrix4cd H = random_hermitian_psd4(1 + k % 4);
        const auto s = hermitian_eig(H);
        check_spectrum(H, s, 1e-10);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> ref(H);
        const Eigen::Vector4d expected = ref.eigenvalues().reverse();
        CHECK(max_abs_diff(s.eigenvalues, expected) < 1e-12);
    }
}

TEST_CASE("hermitian_eig: gauge makes the largest entry real positive") {
    const Eigen::Matrix4cd H = random_hermitian_psd4();
    const auto s = hermitian_eig(H);
    for (int k = 0; k < 4; ++k) {
        Eigen::Index idx = 0;
        s.eigenvectors.col(k).cwiseAbs().maxCoeff(&idx);
        CHECK(s.eigenvectors(idx, k).imag() == 0.0);
        CHECK(s.eigenvectors(idx, k).real() > 0.0);
    }
    // the rephased input gives identical vectors
    const auto again = hermitian_eig(H);
    CHECK(max_abs_diff(again.eigenvectors, s.eigenvectors) == 0.0);
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
    Eigen::Matrix4cd H = Eigen::Matrix4cd::Identity();
    H(0, 1) = 1e-3;
    CHECK_THROWS_AS(hermitian_eig(H), Error);
}

TEST_CASE("polar3 examples") {
    const Rotation3 R = random_rotation();
    const auto p = polar3(R);
    CHECK(max_abs_diff(p.rotation, R) < 1e-12);
    CHECK(max_abs_diff(p.stretch, Eigen::Matrix3d::Identity()) < 1e-12);

    const Eigen::Matrix3d D = Eigen::Vector3d(0.9, 0.9, 0.8).asDiagonal();
    const auto q = polar3(D);
    CHECK(max_abs_diff(q.rotation, Eigen::Matrix3d::Identity()) < 1e-14);
    CHECK(max_abs_diff(q.stretch, D) < 1e-14);
    CHECK_FALSE(q.degenerate);
}

TEST_CASE("polar3 recovers random R D factors") {
    for (int k = 0; k < 1000; ++k) {
        const Rotation3 R = random_rotation();
        const Rotation3 Q = random_rotation();
        const Eigen::Vector3d d(uniform(0.1, 2.0), uniform(0.1, 2.0), uniform(0.1, 2.0));
        const Eigen::Matrix3d D = Q * d.asDiagonal() * Q.transpose();
        const auto p = polar3(R * D);
        CHECK(max_abs_diff(p.rotation, R) < 1e-10);
        CHECK(max_abs_diff(p.stretch, D) < 1e-10);
        CHECK(max_abs_diff(p.rotation * p.stretch, R * D) < 1e-10);
    }
}

TEST_CASE("polar3 on negative determinant keeps a proper rotation") {
    for (int k = 0; k < 200; ++k) {
        const Rotation3 R = random_rotation();
        const Eigen::Matrix3d m = R * Eigen::Vector3d(uniform(0.2, 1), uniform(0.2, 1), -uniform(0.2, 1)).asDiagonal();
        const auto p = polar3(m);
        CHECK(std::abs(p.rotation.determinant() - 1.0) < 1e-10);
        CHECK(max_abs_diff(p.rotation * p.stretch, m) < 1e-10);
        const Eigen::Vector3d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d>(p.stretch).eigenvalues();
        CHECK((ev.array() < 0).count() == 1);
    }
}

TEST_CASE("polar3 flags singular input") {
    const Eigen::Matrix3d m = Eigen::Vector3d(1.0, 0.5, 0.0).asDiagonal();
    const auto p = polar3(m);
    CHECK(p.degenerate);
    CHECK(max_abs_diff(p.rotation * p.stretch, m) < 1e-14);
    CHECK(std::abs(p.rotation.determinant() - 1.0) < 1e-14);
}

TEST_CASE("so3_log examples") {
    const auto zero = so3_log(Rotation3::Identity());
    CHECK(zero.generator.isZero());
    CHECK(zero.axis_angle.angle == 0.0);

    const Rotation3 quarter = Eigen::AngleAxisd(pi / 2, Eigen::Vector3d::UnitZ()).toRotationMatrix();
    const auto q = so3_log(quarter);
    CHECK(max_abs_diff(q.generator, (pi / 2) * hat(Eigen::Vector3d::UnitZ())) < 1e-15);

    const Rotation3 half = Eigen::Vector3d(-1, -1, 1).asDiagonal();
    const auto h = so3_log(half);
    CHECK(h.axis_angle.pi_branch);
    CHECK(std::abs(h.axis_angle.angle - pi) < 1e-15);
    CHECK(max_abs_diff(h.axis_angle.axis, Eigen::Vector3d::UnitZ()) < 1e-15);
    CHECK(max_abs_diff(so3_exp(h.generator), half) < 1e-9);
    CHECK(max_abs_diff(expm(h.generator), half) < 1e-9);
}

TEST_CASE("so3_log at pi picks the conventional axis sign") {
    for (int k = 0; k < 200; ++k) {
        const Eigen::Vector3d n = random_unit3();
        const Rotation3 R = Eigen::AngleAxisd(pi, n).toRotationMatrix();
        const auto l = so3_log(R);
        CHECK(l.axis_angle.pi_branch);
        CHECK(max_abs_diff(so3_exp(l.generator), R) < 1e-9);
        CHECK(l.axis_angle.axis == canonical_axis_sign(l.axis_angle.axis));
    }
}

TEST_CASE("so3_log near pi keeps the axis orientation") {
    const Eigen::Vector3d n = Eigen::Vector3d(1, -2, 0.5).normalized();
    for (double eps : {1e-7, 5e-7, 2e-6}) {
        const Rotation3 R = Eigen::AngleAxisd(pi - eps, -n).toRotationMatrix();
        const auto l = so3_log(R);
        CHECK(max_abs_diff(so3_exp(l.generator), R) < 1e-9);
    }
}

TEST_CASE("so3_log rejects non-rotations") {
    CHECK_THROWS_AS(so3_log(Rotation3(Eigen::Vector3d(1, 1, -1).asDiagonal())), Error);
    CHECK_THROWS_AS(so3_log(Rotation3(1.01 * Rotation3::Identity())), Error);
}

TEST_CASE("so3_exp examples and errors") {
    CHECK(max_abs_diff(so3_exp(Eigen::Matrix3d::Zero()), Rotation3::Identity()) == 0.0);
    Rotation3 quarter;
    quarter << 1, 0, 0, 0, 0, -1, 0, 1, 0;
    CHECK(max_abs_diff(so3_exp((pi / 2) * hat(Eigen::Vector3d::UnitX())), quarter) < 1e-15);
    CHECK_THROWS_AS(so3_exp(Eigen::Matrix3d::Identity()), Error);
}

TEST_CASE("so3_exp matches the general matrix exponential and inverts so3_log") {
    for (int k = 0; k < 1000; ++k) {
        const Eigen::Vector3d w = random_unit3() * uniform(0.0, pi - 1e-6);
        const Eigen::Matrix3d G = hat(w);
        const Rotation3 R = so3_exp(G);
        CHECK(max_abs_diff(R, expm(G)) < 1e-12);
        CHECK(max_abs_diff(so3_log(R).generator, G) < 1e-9);
        CHECK(max_abs_diff(so3_exp(so3_log(R).generator), R) < 1e-9);
    }
    // tiny angles go through the series branch
    const Eigen::Matrix3d tiny = hat(Eigen::Vector3d(1e-9, -2e-9, 3e-9));
    CHECK(max_abs_diff(so3_exp(tiny), expm(tiny)) < 1e-16);
    CHECK(max_abs_diff(so3_log(so3_exp(tiny)).generator, tiny) < 1e-15);
}

TEST_CASE("su2 rotation maps onto so3_exp of the same generator") {
    for (int k = 0; k < 500; ++k) {
        const Eigen::Vector3d n = random_unit3();
        const double t = uniform(0.0, pi);
        CHECK(max_abs_diff(su2_to_so3(su2_rotation(n, t)), so3_exp(t * hat(n))) < 1e-10);
    }
}

TEST_CASE("polar2 examples") {
    const Jones U = random_unitary();
    const auto p = polar2(U);
    CHECK(max_abs_diff(p.unitary, U) < 1e-12);
    CHECK(max_abs_diff(p.positive, Jones::Identity()) < 1e-12);

    Jones K = Jones::Zero();
    K(0, 0) = 1.0;
    K(1, 1) = std::sqrt(0.7);
    const auto q = polar2(K);
    CHECK(max_abs_diff(q.unitary, Jones::Identity()) < 1e-14);
    CHECK(max_abs_diff(q.positive, K) < 1e-14);
    CHECK_FALSE(q.degenerate);
}

TEST_CASE("polar2 recovers random V P factors") {
    for (int k = 0; k < 1000; ++k) {
        const Jones V = random_unitary();
        const Jones P = random_psd2(0.1, 2.0);
        const auto p = polar2(V * P);
        CHECK(max_abs_diff(p.unitary, V) < 1e-10);
        CHECK(max_abs_diff(p.positive, P) < 1e-10);
        CHECK(max_abs_diff(p.unitary.adjoint() * p.unitary, Jones::Identity()) < 1e-10);
    }
}

TEST_CASE("polar2 flags rank-deficient input") {
    Jones K = Jones::Zero();
    K(0, 0) = 1.0;
    const auto p = polar2(K);
    CHECK(p.degenerate);
    CHECK(max_abs_diff(p.unitary * p.positive, K) < 1e-14);
}

TEST_CASE("su2_strip_phase") {
    const auto s = su2_strip_phase(cplx(0, 1) * Jones::Identity());
    CHECK(std::abs(s.global_phase - pi / 2) < 1e-15);
    CHECK(max_abs_diff(s.special, Jones::Identity()) < 1e-15);

    const auto t = su2_strip_phase(Jones::Identity());
    CHECK(t.global_phase == 0.0);
    CHECK(max_abs_diff(t.special, Jones::Identity()) == 0.0);

    for (int k = 0; k < 500; ++k) {
        const Jones V = random_unitary();
        const auto r = su2_strip_phase(V);
        CHECK(std::abs(r.special.determinant() - 1.0) < 1e-12);
        CHECK(max_abs_diff(std::polar(1.0, r.global_phase) * r.special, V) < 1e-12);
        CHECK(r.global_phase > -pi / 2);
        CHECK(r.global_phase <= pi / 2);
    }
    CHECK_THROWS_AS(su2_strip_phase(2.0 * Jones::Identity()), Error);
}

TEST_CASE("su2_log inverts su2_rotation on the principal branch") {
    for (int k = 0; k < 500; ++k) {
        const Eigen::Vector3d n = random_unit3();
        const double t = uniform(0.0, pi - 1e-6);
        const auto a = su2_log(su2_rotation(n, t));
        CHECK(std::abs(a.angle - t) < 1e-10);
        CHECK(max_abs_diff(a.axis, n) < 1e-9);
        // -W is the same rotation; theta stays in [0, pi]
        const auto b = su2_log(-su2_rotation(n, t));
        CHECK(max_abs_diff(su2_to_so3(su2_rotation(b.axis, b.angle)), su2_to_so3(su2_rotation(n, t))) < 1e-10);
    }
}

}
