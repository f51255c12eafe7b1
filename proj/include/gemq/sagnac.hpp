#pragma once

#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "gemq/constants.hpp"
#include "gemq/quantity.hpp"

// Toy model of an interferometer spun at a superposition of two angular
// frequencies. The matter-wave rotation phase phi = 4 m A omega / hbar
// maps each rotor branch to an output-port state; the rotor angular
// momentum states for distinct frequencies are idealized as orthogonal.
namespace gemq::sagnac {

using complexd = std::complex<double>;

struct SagnacScenario {
    Quantity omega1; // rad/s
    Quantity omega2; // rad/s
    complexd c1;     // rotor branch amplitudes, |c1|^2 + |c2|^2 = 1
    complexd c2;
    Quantity area;   // m^2, enclosed by the interferometer path
    Quantity mass;   // kg, interfering particle

    static SagnacScenario make(const Quantity& omega1, const Quantity& omega2, complexd c1,
                               complexd c2, const Quantity& area, const Quantity& mass) {
        for (const auto* q : {&omega1, &omega2})
            if (q->dim() != dims::frequency || !q->is_scalar())
                throw dimension_error("SagnacScenario: omega must be a scalar in rad/s");
        if (area.dim() != dims::area || area.si() <= 0.0)
            throw domain_error("SagnacScenario: area must be a positive m^2 scalar");
        if (mass.dim() != dims::mass || mass.si() <= 0.0)
            throw domain_error("SagnacScenario: mass must be a positive kg scalar");
        if (std::abs(std::norm(c1) + std::norm(c2) - 1.0) > 1e-9)
            throw domain_error("SagnacScenario: |c1|^2 + |c2|^2 must be 1 (tolerance 1e-9)");
        return SagnacScenario{omega1, omega2, c1, c2, area, mass};
    }
};

// Matter-wave rotation phase phi = 4 m A omega / hbar.
inline double sagnac_phase(const Quantity& omega, const Quantity& area, const Quantity& mass,
                           const Constants& k) {
    if (area.si() <= 0.0) throw domain_error("sagnac_phase: area must be positive");
    if (mass.si() <= 0.0) throw domain_error("sagnac_phase: mass must be positive");
    const Quantity phi = 4.0 * mass * area * omega / k.hbar;
    if (!phi.is_dimensionless())
        throw dimension_error("sagnac_phase: inputs have wrong dimensions");
    return phi.si();
}

/// Rotor (x) output-port amplitudes of the joint pure state
/// |Psi> = c1 |O1>|out(phi1)> + c2 |O2>|out(phi2)>,
/// |out(phi)> = cos(phi/2)|bright> + i sin(phi/2)|dark>.
struct JointState {
    Eigen::Matrix2cd amplitudes; // rows: rotor branch, cols: (bright, dark)
    double phi1 = 0.0;
    double phi2 = 0.0;

    double norm() const { return std::sqrt(amplitudes.squaredNorm()); }
};

inline JointState joint_state(const SagnacScenario& s, const Constants& k) {
    JointState js;
    js.phi1 = sagnac_phase(s.omega1, s.area, s.mass, k);
    js.phi2 = sagnac_phase(s.omega2, s.area, s.mass, k);
    const complexd i_unit(0.0, 1.0);
    js.amplitudes(0, 0) = s.c1 * std::cos(js.phi1 / 2.0);
    js.amplitudes(0, 1) = s.c1 * i_unit * std::sin(js.phi1 / 2.0);
    js.amplitudes(1, 0) = s.c2 * std::cos(js.phi2 / 2.0);
    js.amplitudes(1, 1) = s.c2 * i_unit * std::sin(js.phi2 / 2.0);
    return js;
}

// Von Neumann entropy of either reduced state, base 2. Schmidt rank is at
// most 2, so the result lies in [0, 1].
inline double rotor_particle_entanglement(const JointState& state) {
    if (std::abs(state.amplitudes.squaredNorm() - 1.0) > 1e-9)
        throw domain_error("rotor_particle_entanglement: state must be normalized");
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(state.amplitudes);
    const double total = svd.singularValues().squaredNorm();
    double entropy = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double p = svd.singularValues()(i) * svd.singularValues()(i) / total;
        if (p > 1e-15) entropy -= p * std::log2(p);
    }
    return entropy;
}

} // namespace gemq::sagnac
