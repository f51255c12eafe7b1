#pragma once

#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "gemq/witness.hpp"

namespace gemq::witness {

/// Result of brute-force integration in the truncated branch x Fock space.
struct FockEvolution {
    Eigen::VectorXcd joint;   // amplitudes, index = branch*(cutoff+1) + n
    Eigen::Matrix4cd reduced; // two-qubit matrix before validation
    double norm_defect = 0.0; // |  ||psi||^2 - 1 |  before renormalization
    int cutoff = 0;

    TwoQubitDensity state() const { return TwoQubitDensity(reduced); }
};

namespace detail {

// H psi for H/hbar = omega a^dag a + f_b (a + a^dag), blockwise over the
// four branches; the coupling never flips branch labels.
inline void apply_hamiltonian(const Eigen::VectorXcd& psi, Eigen::VectorXcd& out, double omega,
                              const std::array<double, 4>& f, int cutoff) {
    const int dim = cutoff + 1;
    out.setZero();
    for (int b = 0; b < kBranches; ++b) {
        const int base = b * dim;
        const double fb = f[static_cast<std::size_t>(b)];
        for (int n = 0; n <= cutoff; ++n) {
            complexd acc = omega * static_cast<double>(n) * psi(base + n);
            if (n > 0) acc += fb * std::sqrt(static_cast<double>(n)) * psi(base + n - 1);
            if (n < cutoff) acc += fb * std::sqrt(static_cast<double>(n + 1)) * psi(base + n + 1);
            out(base + n) = acc;
        }
    }
}

} // namespace detail

/// Integrates the Schroedinger equation in the 4 x (cutoff+1) joint space
/// with a fixed-step classical RK4, step <= 2 pi / (1000 omega), starting
/// from (branch weights) x vacuum. Independent of the closed-form path.
///
/// Preconditions: the worst-case displacement must fit the truncation,
/// (2 max_s |f_s| / omega)^2 <= cutoff / 10; norm leakage beyond 1e-8
/// after integration reports the cutoff as too small.
inline FockEvolution fock_oracle(const FieldMode& mode, const Quantity& t, int cutoff,
                                 const BranchWeights& weights = equal_weights()) {
    detail::require_time(t);
    detail::check_weights(weights);
    if (cutoff < 1) throw domain_error("fock_oracle: cutoff must be at least 1");

    const double omega = mode.omega.si();
    std::array<double, 4> f{};
    double worst = 0.0;
    for (int b = 0; b < kBranches; ++b) {
        f[static_cast<std::size_t>(b)] = detail::branch_coupling(mode, branch_s1[b], branch_s2[b]);
        const double alpha_max = 2.0 * std::abs(f[static_cast<std::size_t>(b)]) / omega;
        worst = std::max(worst, alpha_max * alpha_max);
    }
    if (worst > cutoff / 10.0)
        throw domain_error("fock_oracle: cutoff too small for couplings (needs max |alpha|^2 <= "
                           "cutoff/10)");

    const int dim = cutoff + 1;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4 * dim);
    for (int b = 0; b < kBranches; ++b) psi(b * dim) = weights[static_cast<std::size_t>(b)];

    const double duration = t.si();
    const double max_step = 2.0 * M_PI / (1000.0 * omega);
    const int steps = duration > 0.0 ? static_cast<int>(std::ceil(duration / max_step)) : 0;
    const double h = steps > 0 ? duration / steps : 0.0;

    Eigen::VectorXcd k1(4 * dim), k2(4 * dim), k3(4 * dim), k4(4 * dim), tmp(4 * dim),
        hpsi(4 * dim);
    const complexd minus_i(0.0, -1.0);
    for (int step = 0; step < steps; ++step) {
        detail::apply_hamiltonian(psi, hpsi, omega, f, cutoff);
        k1 = minus_i * hpsi;
        tmp = psi + (h / 2.0) * k1;
        detail::apply_hamiltonian(tmp, hpsi, omega, f, cutoff);
        k2 = minus_i * hpsi;
        tmp = psi + (h / 2.0) * k2;
        detail::apply_hamiltonian(tmp, hpsi, omega, f, cutoff);
        k3 = minus_i * hpsi;
        tmp = psi + h * k3;
        detail::apply_hamiltonian(tmp, hpsi, omega, f, cutoff);
        k4 = minus_i * hpsi;
        psi += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }

    FockEvolution ev;
    ev.cutoff = cutoff;
    ev.norm_defect = std::abs(psi.squaredNorm() - 1.0);
    if (ev.norm_defect > 1e-8)
        throw domain_error("fock_oracle: norm leakage exceeds 1e-8, cutoff too small");
    psi /= psi.norm();
    ev.joint = psi;

    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    for (int i = 0; i < kBranches; ++i)
        for (int j = 0; j < kBranches; ++j)
            for (int n = 0; n < dim; ++n)
                rho(i, j) += psi(i * dim + n) * std::conj(psi(j * dim + n));
    ev.reduced = (rho + rho.adjoint()) / 2.0;
    return ev;
}

} // namespace gemq::witness
