#pragma once

#include <vector>

#include "polarlab/characteristic.hpp"
#include "polarlab/kernels.hpp"

namespace polarlab {

using KrausSet = std::vector<Jones>;

/// Trace-one Choi state (E (x) id)(|Omega><Omega|), output factor first.
struct ChoiState {
    Eigen::Matrix4cd rho;
    double completeness_deviation = 0.0;  // max |sum A^H A - I|, 0 when built from a matrix
    bool cptp_warning = false;            // Kraus completeness violated
};

ChoiState choi_from_kraus(const KrausSet& ks, const Tolerances& tol = {});

/// Wraps a raw 4x4 matrix (e.g. loaded from file). Throws NotHermitian.
ChoiState choi_from_matrix(const Eigen::Matrix4cd& rho, const Tolerances& tol = {});

/// Tr_out(rho), a 2x2 operator on the input factor.
Eigen::Matrix2cd partial_trace_output(const Eigen::Matrix4cd& rho);

struct TraceCheck {
    bool preserving = false;
    double deviation = 0.0;  // max |Tr_out(rho) - I/2|
};

TraceCheck check_trace_preservation(const ChoiState& rho, const Tolerances& tol = {});

struct ChannelCoreReport {
    Eigen::Vector4d lambdas;
    PurityIndices purity;
    Jones kraus_dominant;   // Tr(K^H K) = 2
    bool tp_core = false;   // K^H K = I
    Jones unitary_factor;   // polar factor of K
    Jones positive_factor;
    bool polar_degenerate = false;
    Jones special_unitary;  // det-1 part of the unitary factor
    double global_phase = 0.0;
    AxisAngle generator;    // theta in [0, pi]
    bool dissipative = false;
};

/// Throws NoCoherentCore / CoreNotUnique when the dominant eigenvalue is not isolated.
ChannelCoreReport channel_core(const ChoiState& rho, const Tolerances& tol = {});

/// Choi state of rho -> U rho U^H.
ChoiState unitary_channel_choi(const Jones& U);

KrausSet amplitude_damping(double gamma);
KrausSet completely_depolarizing();

}  // namespace polarlab
