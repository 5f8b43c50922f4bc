#pragma once

#include <optional>

#include "polarlab/coherency.hpp"
#include "polarlab/types.hpp"

namespace polarlab {

/// Indices of polarimetric purity, 0 <= P1 <= P2 <= P3 <= 1.
struct PurityIndices {
    double P1 = 0.0;
    double P2 = 0.0;
    double P3 = 0.0;
};

/// lambdas must be descending, nonnegative and sum to one.
PurityIndices compute_ipp(const Eigen::Vector4d& lambdas, const Tolerances& tol = {});

struct Discriminant {
    Eigen::Matrix4cd rho;     // H/TrH - P1 v0 v0^H - (1 - P3) I/4
    bool nonregular = false;  // any |Im rho_ij| above tolerance
    double max_imag = 0.0;
};

Discriminant discriminant_component(const Covariance& H, const SpectralComponents& spec,
                                    const PurityIndices& purity, const Tolerances& tol = {});

struct CharacteristicDecomposition {
    double m00 = 1.0;
    Mueller normalized;  // M / m00
    SpectralComponents spectrum;
    PurityIndices purity;

    Mueller pure_core;       // M_J, generated by the dominant eigenvector
    Mueller mixture2;        // equiprobable mixture of the first two components
    Mueller mixture3;        // equiprobable mixture of the first three components
    Mueller depolarizer;     // diag(1, 0, 0, 0)
    std::optional<Mueller> nonpure;  // grouped non-pure part, absent when P1 = 1

    /// Unnormalized (P2-P1) M_(2) + (P3-P2) M_(3); its total weight is P3 - P1.
    Mueller discriminant_mueller;
    double discriminant_weight = 0.0;
    Discriminant discriminant;

    bool no_coherent_core = false;  // P1 below tolerance
    bool core_not_unique = false;   // lambda0 == lambda1

    /// (P1, P2 - P1, P3 - P2, 1 - P3)
    Eigen::Vector4d weights() const;
    /// Weighted sum of the four characteristic components.
    Mueller reconstruct() const;
    /// P1 M_J + (1 - P1) M_np; equals M_J when P1 = 1.
    Mueller reconstruct_grouped() const;
};

Mueller ideal_depolarizer();

/// Throws NonPhysical when validate_mueller rejects the input.
CharacteristicDecomposition characteristic_decompose(const Mueller& M, const Tolerances& tol = {});

/// Decomposition of a trace-normalized covariance / Choi state directly.
CharacteristicDecomposition characteristic_decompose_cov(const Covariance& H, const Tolerances& tol = {});

}  // namespace polarlab
