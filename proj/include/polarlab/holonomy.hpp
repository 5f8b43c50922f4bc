#pragma once

#include <vector>

#include "polarlab/characteristic.hpp"
#include "polarlab/kernels.hpp"

namespace polarlab {

/// Rotational content of the pure characteristic core.
struct HolonomyReport {
    Rotation3 rotation;            // m_R
    Eigen::Matrix3d stretch;       // m_D
    Eigen::Matrix3d generator;     // antisymmetric Mueller generator, log(m_R)
    AxisAngle axis_angle;
    Jones canonical_lift;          // cos(theta/2) I - i sin(theta/2) n.sigma
    double P1 = 0.0;
    bool degenerate = false;       // singular m_J, rotation is the SVD convention
};

HolonomyReport extract_amg(const CharacteristicDecomposition& decomp, const Tolerances& tol = {});

/// Polar/log step on the 3x3 block of any pure normalized Mueller matrix.
HolonomyReport amg_from_pure_mueller(const Mueller& pure, const Tolerances& tol = {});

struct Overlap {
    double phase = 0.0;    // arg in (-pi, pi]
    double modulus = 0.0;
};

/// arg and modulus of <psi|U|psi>. Throws PhaseUndefined when the overlap vanishes.
Overlap pancharatnam_phase(const Jones& U, const Spinor& psi, const Tolerances& tol = {});

struct PhaseSample {
    Bloch probe;
    double geometric_phase = 0.0;
    double coherent_visibility_modulus = 0.0;
};

/// Geometric phase from the canonical lift; modulus is P1 |<psi|J0|psi>| with
/// the dominant Jones scaled to unit operator norm.
PhaseSample coherent_visibility(const CharacteristicDecomposition& decomp, const HolonomyReport& report,
                                const Spinor& psi, const Tolerances& tol = {});

std::vector<PhaseSample> phase_sweep(const CharacteristicDecomposition& decomp, const HolonomyReport& report,
                                     const std::vector<Spinor>& probes, const Tolerances& tol = {});

double wrap_phase(double a);

}  // namespace polarlab
