#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "polarlab/types.hpp"

namespace polarlab {

struct EnsembleMember {
    double weight = 0.0;
    Jones jones;
};

/// Weighted Jones ensemble. Member phases matter for visibility but not for
/// the synthesized Mueller matrix.
class JonesEnsemble {
public:
    JonesEnsemble() = default;
    /// Throws InvalidEnsemble unless all weights are positive and sum to one.
    explicit JonesEnsemble(std::vector<EnsembleMember> members, double tol = 1e-12);

    static JonesEnsemble equiprobable(const std::vector<Jones>& ops);

    const std::vector<EnsembleMember>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }

private:
    std::vector<EnsembleMember> members_;
};

Mueller ensemble_to_mueller(const JonesEnsemble& ens);

/// sum_k p_k <psi|J_k|psi>
cplx ensemble_visibility(const JonesEnsemble& ens, const Spinor& psi);

struct VisibilitySample {
    double parameter = 0.0;
    cplx visibility;
    std::optional<double> arg;  // present only when the modulus exceeds the tolerance
    double modulus = 0.0;
};

using VisibilityCurve = std::vector<VisibilitySample>;
using EnsembleBuilder = std::function<JonesEnsemble(double)>;

VisibilityCurve sweep_visibility(const EnsembleBuilder& builder, const std::vector<double>& grid,
                                 const Spinor& psi, const Tolerances& tol = {});

/// `count` points from start to stop inclusive (a single point sits at start).
std::vector<double> linear_grid(double start, double stop, int count);

/// The two-retarder mixture {exp(-i phi sigma1/2), exp(-i phi sigma2/2)}, weights 1/2.
JonesEnsemble two_retarder_ensemble(double phi);

/// 64-bit LCG (Knuth MMIX constants), outputs the high 53 bits in [0, 1).
class Lcg64 {
public:
    explicit Lcg64(std::uint64_t seed) : state_(seed) {}
    double next();

private:
    std::uint64_t state_;
};

/// Deterministic physical Mueller matrix of covariance rank `rank` (1..4).
Mueller random_physical_mueller(std::uint64_t seed, int rank);

}  // namespace polarlab
