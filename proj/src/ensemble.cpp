#include "polarlab/ensemble.hpp"

#include <cmath>
#include <sstream>

#include "polarlab/coherency.hpp"
#include "polarlab/pauli.hpp"

namespace polarlab {

JonesEnsemble::JonesEnsemble(std::vector<EnsembleMember> members, double tol) : members_(std::move(members)) {
    if (members_.empty()) throw Error(ErrorCode::InvalidEnsemble, "ensemble has no members");
    double total = 0.0;
    for (const auto& m : members_) {
        if (!(m.weight > 0.0)) throw Error(ErrorCode::InvalidEnsemble, "ensemble weights must be positive");
        total += m.weight;
    }
    if (std::abs(total - 1.0) > tol) {
        std::ostringstream os;
        os << "ensemble weights sum to " << total << ", expected 1";
        throw Error(ErrorCode::InvalidEnsemble, os.str());
    }
}

JonesEnsemble JonesEnsemble::equiprobable(const std::vector<Jones>& ops) {
    std::vector<EnsembleMember> members;
    members.reserve(ops.size());
    for (const auto& J : ops) members.push_back({1.0 / static_cast<double>(ops.size()), J});
    return JonesEnsemble(std::move(members));
}

Mueller ensemble_to_mueller(const JonesEnsemble& ens) {
    Mueller M = Mueller::Zero();
    for (const auto& m : ens.members()) M += m.weight * jones_to_mueller(m.jones);
    return M;
}

cplx ensemble_visibility(const JonesEnsemble& ens, const Spinor& psi) {
    cplx v{0.0, 0.0};
    for (const auto& m : ens.members()) v += m.weight * (psi.adjoint() * m.jones * psi)(0, 0);
    return v;
}

VisibilityCurve sweep_visibility(const EnsembleBuilder& builder, const std::vector<double>& grid,
                                 const Spinor& psi, const Tolerances& tol) {
    VisibilityCurve curve;
    curve.reserve(grid.size());
    for (double p : grid) {
        VisibilitySample s;
        s.parameter = p;
        s.visibility = ensemble_visibility(builder(p), psi);
        s.modulus = std::abs(s.visibility);
        if (s.modulus > tol.phase_undefined) s.arg = std::arg(s.visibility);
        curve.push_back(s);
    }
    return curve;
}

std::vector<double> linear_grid(double start, double stop, int count) {
    if (count < 1) throw Error(ErrorCode::Usage, "grid count must be at least 1");
    std::vector<double> g(static_cast<std::size_t>(count));
    if (count == 1) {
        g[0] = start;
        return g;
    }
    const double step = (stop - start) / (count - 1);
    for (int k = 0; k < count; ++k) g[k] = start + step * k;
    g.back() = stop;
    return g;
}

JonesEnsemble two_retarder_ensemble(double phi) {
    return JonesEnsemble::equiprobable({su2_rotation(Eigen::Vector3d::UnitX(), phi),
                                        su2_rotation(Eigen::Vector3d::UnitY(), phi)});
}

double Lcg64::next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(state_ >> 11) * 0x1.0p-53;
}

Mueller random_physical_mueller(std::uint64_t seed, int rank) {
    if (rank < 1 || rank > 4) throw Error(ErrorCode::Usage, "rank must be in 1..4");
    Lcg64 rng(seed);
    Covariance H = Covariance::Zero();
    for (int k = 0; k < rank; ++k) {
        Eigen::Vector4cd g;
        for (int i = 0; i < 4; ++i) {
            const double re = 2.0 * rng.next() - 1.0;
            const double im = 2.0 * rng.next() - 1.0;
            g[i] = cplx(re, im);
        }
        const double w = 0.1 + rng.next();
        H += w * (g * g.adjoint());
    }
    H /= H.trace().real();
    return cov_to_mueller(H);
}

}  // namespace polarlab
