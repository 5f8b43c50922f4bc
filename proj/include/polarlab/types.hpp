#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace polarlab {

using cplx = std::complex<double>;

using Mueller = Eigen::Matrix4d;        // real 4x4 map on Stokes space
using Stokes = Eigen::Vector4d;         // (s0, s1, s2, s3)
using Jones = Eigen::Matrix2cd;         // complex 2x2 field operator
using Spinor = Eigen::Vector2cd;        // Jones state vector
using Bloch = Eigen::Vector3d;          // Poincare / Bloch vector
using Rotation3 = Eigen::Matrix3d;
using Covariance = Eigen::Matrix4cd;    // Hermitian 4x4, output (x) input ordering

enum class ErrorCode {
    InvalidSpinor,
    InvalidUnitary,
    NotHermitian,
    NotRotation,
    NotAntisymmetric,
    InvalidSpectrum,
    NonPhysical,
    NoCoherentCore,
    CoreNotUnique,
    PhaseUndefined,
    InvalidEnsemble,
    Parse,
    Usage,
};

const char* to_string(ErrorCode code);

/// Process exit status used by the CLI for each error category.
int exit_status(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Numerical thresholds shared by every stage of the pipeline. The defaults
/// are the reference values; the CLI exposes each one as an override.
struct Tolerances {
    double spinor_norm = 1e-9;       // |psi| gate
    double unitary = 1e-10;          // U^H U = I gate
    double rotation = 1e-8;          // R in SO(3) gate
    double antisymmetry = 1e-10;     // G + G^T = 0 gate
    double hermitian = 1e-8;         // H = H^H gate
    double physical = 1e-9;          // negative covariance eigenvalue clamp
    double degenerate_gap = 1e-12;   // eigenvalue gap reported as degenerate
    double coherent_core = 1e-9;     // P1 below this: no coherent core
    double nonregular = 1e-9;        // imaginary content of the discriminant
    double singular = 1e-10;         // smallest singular value of a polar input
    double pi_branch = 1e-6;         // angle distance from pi for the pi branch
    double phase_undefined = 1e-12;  // overlap modulus below which arg is undefined
    double trace_preserving = 1e-9;  // partial-trace deviation gate
    double kraus_completeness = 1e-6;
    double ipp_sum = 1e-9;           // sum of eigenvalues must be 1
};

}  // namespace polarlab
