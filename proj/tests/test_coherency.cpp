#include <doctest.h>

#include <numbers>

#include "polarlab/coherency.hpp"
#include "polarlab/pauli.hpp"
#include "support.hpp"

using namespace polarlab;
using namespace polarlab::testing;
using std::numbers::pi;

namespace {

Eigen::Matrix4cd omega_projector() {
    const Eigen::Vector4cd omega = Eigen::Vector4cd(1, 0, 0, 1) / std::sqrt(2.0);
    return omega * omega.adjoint();
}

}  // namespace

TEST_SUITE("coherency") {

TEST_CASE("mueller_to_cov examples") {
    CHECK(max_abs_diff(mueller_to_cov(Mueller::Identity()), omega_projector()) < 1e-15);

    Mueller dep = Mueller::Zero();
    dep(0, 0) = 1.0;
    CHECK(max_abs_diff(mueller_to_cov(dep), Eigen::Matrix4cd::Identity() / 4.0) < 1e-15);
}

TEST_CASE("a pure Mueller matrix has covariance 1/2 vec(J) vec(J)^H") {
    for (int k = 0; k < 200; ++k) {
        const Jones J = random_complex2();
        const Covariance H = mueller_to_cov(mueller_via_kronecker(J));
        const Eigen::Vector4cd v(J(0, 0), J(0, 1), J(1, 0), J(1, 1));
        CHECK(max_abs_diff(H, 0.5 * v * v.adjoint()) < 1e-12);
        CHECK(std::abs(H.trace().real() - 0.5 * (J.adjoint() * J).trace().real()) < 1e-12);
        const Eigen::Vector4d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd>(H).eigenvalues();
        CHECK(std::abs(ev[3] - 0.5 * v.squaredNorm()) < 1e-12);
        CHECK(ev.head<3>().cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("cov_to_mueller examples and round trip") {
    Mueller dep = Mueller::Zero();
    dep(0, 0) = 1.0;
    CHECK(max_abs_diff(cov_to_mueller(Eigen::Matrix4cd::Identity() / 4.0), dep) < 1e-15);
    CHECK(max_abs_diff(cov_to_mueller(omega_projector()), Mueller::Identity()) < 1e-15);

    for (int k = 0; k < 500; ++k) {
        const Mueller M = Mueller::Random();
        CHECK(max_abs_diff(cov_to_mueller(mueller_to_cov(M)), M) < 1e-12);
        const Covariance H = mueller_to_cov(M);
        CHECK(max_abs_diff(H, H.adjoint()) < 1e-15);
        CHECK(std::abs(H.trace().real() - M(0, 0)) < 1e-15);
    }
}

TEST_CASE("mueller_to_cov is linear") {
    for (int k = 0; k < 100; ++k) {
        const Mueller A = Mueller::Random();
        const Mueller B = Mueller::Random();
        const double a = uniform(-2, 2);
        const double b = uniform(-2, 2);
        CHECK(max_abs_diff(mueller_to_cov(a * A + b * B), a * mueller_to_cov(A) + b * mueller_to_cov(B)) < 1e-12);
    }
}

TEST_CASE("validate_mueller examples") {
    const auto id = validate_mueller(Mueller::Identity());
    CHECK(id.physical());
    CHECK(max_abs_diff(id.eigenvalues, Eigen::Vector4d(1, 0, 0, 0)) < 1e-15);

    // diag(1,1,1,-1): covariance spectrum {1/2, 1/2, 1/2, -1/2} (numpy eigvalsh oracle)
    const auto bad = validate_mueller(Eigen::Vector4d(1, 1, 1, -1).asDiagonal());
    CHECK_FALSE(bad.physical());
    CHECK(std::abs(bad.min_eigenvalue + 0.5) < 1e-14);
    CHECK(std::abs(bad.violation - 0.5) < 1e-14);

    for (int k = 0; k < 100; ++k) {
        const Mueller M = 0.5 * jones_to_mueller(random_unitary()) + 0.5 * jones_to_mueller(random_unitary());
        const auto v = validate_mueller(M);
        CHECK(v.physical());
        CHECK(v.clamped[2] < 1e-15);
        CHECK(v.clamped[3] < 1e-15);
    }
}

TEST_CASE("validate_mueller rejects nonpositive m00 and non-finite entries") {
    CHECK_FALSE(validate_mueller(Mueller::Zero()).physical());
    CHECK_FALSE(validate_mueller(-Mueller::Identity()).physical());
    Mueller M = Mueller::Identity();
    M(1, 2) = std::numeric_limits<double>::quiet_NaN();
    CHECK_FALSE(validate_mueller(M).physical());
}

TEST_CASE("validate_mueller clamps noise-level negativity") {
    Covariance H = Covariance::Zero();
    H.diagonal() << 0.6, 0.4, 0.0, -5e-10;
    H /= H.trace();
    const auto v = validate_mueller(cov_to_mueller(H));
    CHECK(v.physical());
    CHECK(v.clamped[3] == 0.0);
    CHECK(std::abs(v.clamped.sum() - 1.0) < 1e-15);
    H.diagonal()[3] = -1e-6;
    CHECK_FALSE(validate_mueller(cov_to_mueller(H)).physical());
}

TEST_CASE("spectral_components examples") {
    const auto s = spectral_components(mueller_to_cov(Mueller::Identity()));
    CHECK(max_abs_diff(s.lambdas, Eigen::Vector4d(1, 0, 0, 0)) < 1e-15);
    CHECK(max_abs_diff(s.jones[0], Jones::Identity()) < 1e-15);

    const auto d = spectral_components(Eigen::Matrix4cd::Identity() / 4.0);
    CHECK(max_abs_diff(d.lambdas, Eigen::Vector4d::Constant(0.25)) < 1e-15);
    CHECK(d.degenerate[0]);
    CHECK(d.degenerate[1]);
    CHECK(d.degenerate[2]);
}

TEST_CASE("spectral synthesis reconstructs a two-retarder mixture") {
    const double phi = 1.1;
    const Mueller M = 0.5 * jones_to_mueller(su2_rotation(Eigen::Vector3d::UnitX(), phi)) +
                      0.5 * jones_to_mueller(su2_rotation(Eigen::Vector3d::UnitY(), phi));
    const auto s = spectral_components(mueller_to_cov(M));
    CHECK(s.lambdas[1] > 0.01);
    CHECK(s.lambdas[2] < 1e-12);
    Mueller synth = Mueller::Zero();
    for (int k = 0; k < 4; ++k) {
        const Mueller Mk = jones_to_mueller(s.jones[k]);
        CHECK(std::abs(Mk(0, 0) - 1.0) < 1e-10);
        synth += s.lambdas[k] * Mk;
    }
    CHECK(max_abs_diff(synth, M) < 1e-10);
}

TEST_CASE("spectral synthesis on random physical inputs") {
    for (int k = 0; k < 500; ++k) {
        const Covariance H = random_hermitian_psd4(1 + k % 4);
        const Mueller M = cov_to_mueller(H);
        const auto s = spectral_components(H);
        CHECK(std::abs(s.lambdas.sum() - 1.0) < 1e-12);
        Mueller synth = Mueller::Zero();
        for (int j = 0; j < 4; ++j) synth += s.lambdas[j] * jones_to_mueller(s.jones[j]);
        CHECK(max_abs_diff(synth, M) < 1e-10);
    }
}

TEST_CASE("spectral_components refuses nonphysical covariance") {
    CHECK_THROWS_AS(spectral_components(mueller_to_cov(Eigen::Vector4d(1, 1, 1, -1).asDiagonal())), Error);
}

}
