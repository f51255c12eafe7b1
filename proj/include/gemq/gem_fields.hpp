#pragma once

#include <cmath>

#include "gemq/constants.hpp"
#include "gemq/quantity.hpp"

// Weak-field gravito-electromagnetism: the electric-like field sourced by a
// mass, the magnetic-like field sourced by a mass current, the gravitational
// Lorentz force F = M (E_g + v x B_g), and the two-mass force estimates.
namespace gemq::fields {

/// A point mass with velocity. Non-relativistic model: construction rejects
/// |v| >= c; is_relativistic() flags |v| > 0.1c so callers can warn.
struct MassBody {
    Quantity mass;     // kg
    Quantity velocity; // m/s, 3-vector

    static MassBody make(Quantity mass, Quantity velocity, const Constants& k) {
        if (mass.dim() != dims::mass || !mass.is_scalar())
            throw dimension_error("MassBody: mass must be a scalar in kg");
        if (velocity.dim() != dims::speed || !velocity.is_vector())
            throw dimension_error("MassBody: velocity must be a 3-vector in m/s");
        if (mass.si() <= 0.0) throw domain_error("MassBody: mass must be positive");
        if (velocity.vec().norm() >= k.c.si())
            throw domain_error("MassBody: |v| must be below c");
        MassBody b;
        b.mass = mass;
        b.velocity = velocity;
        return b;
    }

    bool is_relativistic(const Constants& k) const {
        return velocity.vec().norm() > 0.1 * k.c.si();
    }
};

enum class FieldForm {
    paper,    // E_g = (1/eps_g) M/r^2 = 4 pi G M / r^2
    newtonian // E_g = M / (4 pi eps_g r^2) = G M / r^2
};

// Electric-like field magnitude at distance r from mass M. Both conventions
// share eps_g, so the value depends only on the chosen form.
inline Quantity electric_like_field(const Quantity& M, const Quantity& r,
                                    const GemConvention& conv,
                                    FieldForm form = FieldForm::paper) {
    if (M.dim() != dims::mass) throw dimension_error("electric_like_field: M must be kg");
    if (r.dim() != dims::length) throw dimension_error("electric_like_field: r must be m");
    if (M.si() < 0.0) throw domain_error("electric_like_field: M must be non-negative");
    if (r.si() <= 0.0) throw domain_error("electric_like_field: r must be positive");
    Quantity e = M / (conv.eps_g * r * r);
    if (form == FieldForm::newtonian) e = e / (4.0 * M_PI);
    return e; // m/s^2
}

// Magnetic-like field of a line mass current I at distance r: mu_g I / r.
inline Quantity magnetic_like_field_line(const Quantity& I, const Quantity& r,
                                         const GemConvention& conv) {
    if (I.dim() != dims::mass_current)
        throw dimension_error("magnetic_like_field_line: I must be kg/s");
    if (r.dim() != dims::length) throw dimension_error("magnetic_like_field_line: r must be m");
    if (r.si() <= 0.0) throw domain_error("magnetic_like_field_line: r must be positive");
    return conv.mu_g * I / r; // 1/s
}

// Biot-Savart-style point closure: mu_g M |v| sin(theta) / (4 pi r^2).
// The line form above is the primary one; this covers a single moving mass.
inline Quantity magnetic_like_field_point(const MassBody& body, const Quantity& r,
                                          double theta, const GemConvention& conv) {
    if (r.dim() != dims::length) throw dimension_error("magnetic_like_field_point: r must be m");
    if (r.si() <= 0.0) throw domain_error("magnetic_like_field_point: r must be positive");
    const Quantity speed = norm(body.velocity);
    return conv.mu_g * body.mass * speed * std::sin(theta) / (4.0 * M_PI * r * r);
}

// F = M (E_g + v x B_g), all three-vector inputs, result in newtons.
inline Quantity lorentz_force(const MassBody& body, const Quantity& e_g, const Quantity& b_g) {
    if (e_g.dim() != dims::acceleration || !e_g.is_vector())
        throw dimension_error("lorentz_force: e_g must be a 3-vector in m/s^2");
    if (b_g.dim() != dims::frequency || !b_g.is_vector())
        throw dimension_error("lorentz_force: b_g must be a 3-vector in 1/s");
    return body.mass * (e_g + cross(body.velocity, b_g));
}

// Magnetic-to-electric force ratio for parallel line currents moving at
// speed v: eps_g mu_g v^2. Under maxwell_consistent this is (v/c)^2; under
// paper_literal it picks up an extra 1/pi.
inline Quantity force_ratio(const Quantity& v, const GemConvention& conv, const Constants& k) {
    if (v.dim() != dims::speed || !v.is_scalar())
        throw dimension_error("force_ratio: v must be a scalar speed in m/s");
    if (std::abs(v.si()) >= k.c.si()) throw domain_error("force_ratio: |v| must be below c");
    return conv.eps_g * conv.mu_g * v * v; // dimensionless
}

/// One consistent field sample: E-like, B-like and H-like (= B/mu_g)
/// magnitudes under a named convention.
struct GemFieldSample {
    Quantity e_g; // m/s^2
    Quantity b_g; // 1/s
    Quantity h_g; // kg/(m s)
    ConventionName convention;

    static GemFieldSample make(const Quantity& e_g, const Quantity& b_g,
                               const GemConvention& conv) {
        if (e_g.dim() != dims::acceleration)
            throw dimension_error("GemFieldSample: e_g must be m/s^2");
        if (b_g.dim() != dims::frequency)
            throw dimension_error("GemFieldSample: b_g must be 1/s");
        GemFieldSample s;
        s.e_g = e_g;
        s.b_g = b_g;
        s.h_g = b_g / conv.mu_g;
        s.convention = conv.name;
        return s;
    }
};

/// Force budget for two equal masses M moving parallel at distance r with
/// speed v: the electric-like force in both forms, the magnetic-like force
/// via the line-current ratio, and the implied field sample at r.
struct TwoMassReport {
    Quantity mass;
    Quantity separation;
    Quantity speed;
    ConventionName convention;

    Quantity e_field_paper;       // m/s^2, 4 pi G M / r^2
    Quantity e_field_newtonian;   // m/s^2, G M / r^2
    Quantity f_electric_paper;    // N
    Quantity f_electric_newtonian; // N
    Quantity ratio;               // dimensionless, eps_g mu_g v^2
    Quantity f_magnetic;          // N, f_electric_paper * ratio
    GemFieldSample sample;        // fields at separation r
    bool relativistic_warning;    // v > 0.1 c
};

inline TwoMassReport two_mass_scenario(const Quantity& M, const Quantity& r, const Quantity& v,
                                       const GemConvention& conv, const Constants& k) {
    if (v.dim() != dims::speed || !v.is_scalar())
        throw dimension_error("two_mass_scenario: v must be a scalar speed in m/s");
    if (M.si() <= 0.0) throw domain_error("two_mass_scenario: M must be positive");
    if (std::abs(v.si()) >= k.c.si()) throw domain_error("two_mass_scenario: |v| must be below c");

    TwoMassReport rep;
    rep.mass = M;
    rep.separation = r;
    rep.speed = v;
    rep.convention = conv.name;
    rep.e_field_paper = electric_like_field(M, r, conv, FieldForm::paper);
    rep.e_field_newtonian = electric_like_field(M, r, conv, FieldForm::newtonian);
    rep.f_electric_paper = M * rep.e_field_paper;
    rep.f_electric_newtonian = M * rep.e_field_newtonian;
    rep.ratio = force_ratio(v, conv, k);
    rep.f_magnetic = rep.f_electric_paper * rep.ratio;

    // Field sample at r implied by the force budget, F_mag = M v B_g,
    // written in the v = 0 safe form B_g = E_g eps_g mu_g v.
    const Quantity b_g = rep.e_field_paper * conv.eps_g * conv.mu_g * v;
    rep.sample = GemFieldSample::make(rep.e_field_paper, b_g, conv);
    rep.relativistic_warning = std::abs(v.si()) > 0.1 * k.c.si();
    return rep;
}

} // namespace gemq::fields
