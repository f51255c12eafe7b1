#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <optional>

#include <Eigen/Dense>

#include "gemq/constants.hpp"
#include "gemq/quantity.hpp"

/*
 * Entanglement witness model: two mass qubits coupled to one quantized
 * field mode through the non-commuting pair (number, quadrature),
 *
 *     H / hbar = omega a^dag a + (f1 s1 + f2 s2)(a + a^dag),
 *
 * s_i = +/-1 the branch label of mass i, field starting in vacuum. With
 * f_s = f1 s1 + f2 s2 each branch evolves in closed form to
 * e^{i theta_s} |alpha_s>,
 *
 *     alpha_s(t) = (f_s/omega) (e^{-i omega t} - 1),
 *     theta_s(t) = (f_s/omega)^2 (omega t - sin omega t).
 *
 * At omega t = 2 pi n the mode returns to vacuum in every branch and the
 * masses are left pure with entangling phase
 *
 *     dphi(t) = theta_pp + theta_mm - theta_pm - theta_mp
 *             = 8 f1 f2 (omega t - sin omega t) / omega^2,
 *
 * giving negativity |sin(dphi/2)|/2 at revival. A commuting (classical)
 * drive produces only branch-local phases and never entangles; that
 * contrast is the witness logic.
 */
namespace gemq::witness {

using complexd = std::complex<double>;

// Branch basis order used everywhere: (s1,s2) = (+,+), (+,-), (-,+), (-,-).
inline constexpr int kBranches = 4;
inline constexpr int branch_s1[kBranches] = {+1, +1, -1, -1};
inline constexpr int branch_s2[kBranches] = {+1, -1, +1, -1};

using BranchWeights = std::array<complexd, 4>;

inline BranchWeights equal_weights() {
    return {complexd(0.5, 0.0), complexd(0.5, 0.0), complexd(0.5, 0.0), complexd(0.5, 0.0)};
}

/// One quantized field mode: angular frequency and the two branch coupling
/// rates (all 1/s). Couplings may carry either sign.
struct FieldMode {
    Quantity omega;
    Quantity f1;
    Quantity f2;

    static FieldMode make(const Quantity& omega, const Quantity& f1, const Quantity& f2) {
        for (const auto* q : {&omega, &f1, &f2})
            if (q->dim() != dims::frequency || !q->is_scalar())
                throw dimension_error("FieldMode: omega, f1, f2 must be scalar rates in 1/s");
        if (omega.si() <= 0.0) throw domain_error("FieldMode: omega must be positive");
        if (!std::isfinite(f1.si()) || !std::isfinite(f2.si()))
            throw domain_error("FieldMode: couplings must be finite");
        return FieldMode{omega, f1, f2};
    }

    static FieldMode from_si(double omega, double f1, double f2) {
        return make(per_second(omega), per_second(f1), per_second(f2));
    }
};

struct BranchRecord {
    int s1 = +1;
    int s2 = +1;
    complexd alpha; // coherent amplitude of the mode in this branch
    double theta = 0.0; // accumulated phase [rad]
};

namespace detail {
inline void require_time(const Quantity& t) {
    if (t.dim() != dims::time || !t.is_scalar())
        throw dimension_error("t must be a scalar time in s");
    if (t.si() < 0.0) throw domain_error("t must be non-negative");
}

inline double branch_coupling(const FieldMode& mode, int s1, int s2) {
    return mode.f1.si() * s1 + mode.f2.si() * s2;
}

// <beta|alpha> = exp(-(|alpha|^2 + |beta|^2 - 2 conj(beta) alpha)/2)
inline complexd coherent_overlap(complexd alpha, complexd beta) {
    const complexd expo =
        -(std::norm(alpha) + std::norm(beta) - 2.0 * std::conj(beta) * alpha) / 2.0;
    return std::exp(expo);
}

inline void check_weights(const BranchWeights& w) {
    double total = 0.0;
    for (const auto& c : w) total += std::norm(c);
    if (std::abs(total - 1.0) > 1e-9)
        throw domain_error("branch weights must satisfy sum |w|^2 = 1 (tolerance 1e-9)");
}
} // namespace detail

// Closed-form evolution of one branch from the vacuum.
inline BranchRecord branch_evolution(const FieldMode& mode, int s1, int s2, const Quantity& t) {
    detail::require_time(t);
    const double w = mode.omega.si();
    const double fs = detail::branch_coupling(mode, s1, s2);
    const double wt = w * t.si();
    BranchRecord rec;
    rec.s1 = s1;
    rec.s2 = s2;
    rec.alpha = (fs / w) * (std::exp(complexd(0.0, -wt)) - 1.0);
    rec.theta = (fs / w) * (fs / w) * (wt - std::sin(wt));
    return rec;
}

// dphi(t) = 8 f1 f2 (omega t - sin omega t) / omega^2
inline double entangling_phase(const FieldMode& mode, const Quantity& t) {
    detail::require_time(t);
    const double w = mode.omega.si();
    const double wt = w * t.si();
    return 8.0 * mode.f1.si() * mode.f2.si() * (wt - std::sin(wt)) / (w * w);
}

/// Validated 4x4 density matrix over the branch basis: Hermitian to 1e-12,
/// unit trace to 1e-12, eigenvalues >= -1e-10.
class TwoQubitDensity {
public:
    explicit TwoQubitDensity(const Eigen::Matrix4cd& rho) : rho_(rho) { validate(); }

    const Eigen::Matrix4cd& matrix() const { return rho_; }

    double purity() const { return (rho_ * rho_).trace().real(); }

    Eigen::Vector4d eigenvalues() const {
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho_, Eigen::EigenvaluesOnly);
        return es.eigenvalues();
    }

private:
    void validate() const {
        const double herm = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
        if (herm > 1e-12)
            throw domain_error("TwoQubitDensity: matrix not Hermitian (defect " +
                               std::to_string(herm) + ")");
        const complexd tr = rho_.trace();
        if (std::abs(tr - complexd(1.0, 0.0)) > 1e-12)
            throw domain_error("TwoQubitDensity: trace must be 1");
        if (eigenvalues().minCoeff() < -1e-10)
            throw domain_error("TwoQubitDensity: matrix not positive semidefinite");
    }

    Eigen::Matrix4cd rho_;
};

// Reduced two-qubit state after tracing out the mode:
// rho[s,s'] = w_s conj(w_s') e^{i(theta_s - theta_s')} <alpha_s'|alpha_s>.
inline TwoQubitDensity reduced_state(const FieldMode& mode, const Quantity& t,
                                     const BranchWeights& weights = equal_weights()) {
    detail::require_time(t);
    detail::check_weights(weights);

    std::array<BranchRecord, kBranches> rec;
    for (int b = 0; b < kBranches; ++b)
        rec[b] = branch_evolution(mode, branch_s1[b], branch_s2[b], t);

    Eigen::Matrix4cd rho;
    for (int i = 0; i < kBranches; ++i) {
        for (int j = 0; j < kBranches; ++j) {
            const complexd phase = std::exp(complexd(0.0, rec[i].theta - rec[j].theta));
            rho(i, j) = weights[static_cast<std::size_t>(i)] *
                        std::conj(weights[static_cast<std::size_t>(j)]) * phase *
                        detail::coherent_overlap(rec[i].alpha, rec[j].alpha);
        }
    }
    // Hermitize away the last-bit asymmetry of exp() before validation.
    rho = ((rho + rho.adjoint()) / 2.0).eval();
    return TwoQubitDensity(rho);
}

// Partial transpose on the second qubit: index i = 2*a + b.
inline Eigen::Matrix4cd partial_transpose_second(const Eigen::Matrix4cd& rho) {
    Eigen::Matrix4cd pt;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    pt(2 * a + b, 2 * c + d) = rho(2 * a + d, 2 * c + b);
    return pt;
}

// N = (||rho^T2||_1 - 1) / 2, in [0, 1/2] for two qubits.
inline double negativity(const TwoQubitDensity& state) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(partial_transpose_second(state.matrix()),
                                                       Eigen::EigenvaluesOnly);
    const double trace_norm = es.eigenvalues().cwiseAbs().sum();
    return (trace_norm - 1.0) / 2.0;
}

// Entropy of entanglement across the 1|2 cut, in bits. Only defined for
// (numerically) pure states; nullopt when purity < 1 - 1e-8.
inline std::optional<double> entanglement_entropy(const TwoQubitDensity& state) {
    if (state.purity() < 1.0 - 1e-8) return std::nullopt;
    Eigen::Matrix2cd rho1 = Eigen::Matrix2cd::Zero();
    const auto& rho = state.matrix();
    for (int a = 0; a < 2; ++a)
        for (int c = 0; c < 2; ++c)
            for (int b = 0; b < 2; ++b) rho1(a, c) += rho(2 * a + b, 2 * c + b);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(rho1, Eigen::EigenvaluesOnly);
    double entropy = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double p = es.eigenvalues()(i);
        if (p > 1e-15) entropy -= p * std::log2(p);
    }
    return entropy;
}

/// Commuting-field baseline: the quadrature is replaced by the c-number
/// drive xi0 cos(omega t), so each mass only accumulates the local phase
/// phi_i(s_i) = -f_i s_i xi0 sin(omega t)/omega and the joint state stays
/// an exact product. Populations match the quantum model; negativity is
/// identically zero.
inline TwoQubitDensity classical_baseline(const FieldMode& mode, const Quantity& t,
                                          double xi0 = 1.0) {
    detail::require_time(t);
    const double w = mode.omega.si();
    const double envelope = xi0 * std::sin(w * t.si()) / w;
    const double phi1 = -mode.f1.si() * envelope;
    const double phi2 = -mode.f2.si() * envelope;

    const complexd inv_sqrt2(1.0 / std::sqrt(2.0), 0.0);
    Eigen::Vector2cd mass1, mass2;
    mass1 << inv_sqrt2 * std::exp(complexd(0.0, phi1)), inv_sqrt2 * std::exp(complexd(0.0, -phi1));
    mass2 << inv_sqrt2 * std::exp(complexd(0.0, phi2)), inv_sqrt2 * std::exp(complexd(0.0, -phi2));

    Eigen::Vector4cd joint;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) joint(2 * a + b) = mass1(a) * mass2(b);
    Eigen::Matrix4cd rho = joint * joint.adjoint();
    rho = ((rho + rho.adjoint()) / 2.0).eval();
    return TwoQubitDensity(rho);
}

/// Static-limit phase map: branch pairs at fixed separations d_s accumulate
/// phi_s = G m1 m2 T / (hbar d_s) over time T.
struct NewtonianSetup {
    Quantity m1; // kg
    Quantity m2; // kg
    Quantity duration; // s
    std::array<Quantity, 4> separations; // m, branch order (++, +-, -+, --)

    static NewtonianSetup make(const Quantity& m1, const Quantity& m2, const Quantity& duration,
                               const std::array<Quantity, 4>& separations) {
        for (const auto* q : {&m1, &m2})
            if (q->dim() != dims::mass || q->si() <= 0.0)
                throw domain_error("NewtonianSetup: masses must be positive kg scalars");
        if (duration.dim() != dims::time || duration.si() <= 0.0)
            throw domain_error("NewtonianSetup: duration must be a positive time");
        for (const auto& d : separations)
            if (d.dim() != dims::length || d.si() <= 0.0)
                throw domain_error("NewtonianSetup: separations must be positive lengths");
        return NewtonianSetup{m1, m2, duration, separations};
    }
};

struct NewtonianPhaseResult {
    std::array<double, 4> phases; // rad, branch order
    double delta_phi;             // rad
    double negativity;            // via partial transpose of the phase state
};

inline TwoQubitDensity phase_state(const std::array<double, 4>& phases) {
    Eigen::Vector4cd amp;
    for (int b = 0; b < kBranches; ++b)
        amp(b) = 0.5 * std::exp(complexd(0.0, phases[static_cast<std::size_t>(b)]));
    Eigen::Matrix4cd rho = amp * amp.adjoint();
    rho = ((rho + rho.adjoint()) / 2.0).eval();
    return TwoQubitDensity(rho);
}

inline NewtonianPhaseResult newtonian_phase_model(const NewtonianSetup& setup,
                                                  const Constants& k) {
    NewtonianPhaseResult out;
    for (int b = 0; b < kBranches; ++b) {
        const Quantity phi =
            k.G * setup.m1 * setup.m2 * setup.duration /
            (k.hbar * setup.separations[static_cast<std::size_t>(b)]);
        out.phases[static_cast<std::size_t>(b)] = phi.si(); // dimensionless
    }
    out.delta_phi = out.phases[0] + out.phases[3] - out.phases[1] - out.phases[2];
    out.negativity = negativity(phase_state(out.phases));
    return out;
}

} // namespace gemq::witness
