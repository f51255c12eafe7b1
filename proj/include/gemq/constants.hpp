#pragma once

#include <cctype>
#include <cmath>
#include <string>

#include "gemq/errors.hpp"
#include "gemq/quantity.hpp"

namespace gemq {

/// Fundamental constants, CODATA-2018 SI values.
///
/// Natural-unit evaluation is done by substituting a record with unit
/// values, not by a separate code path.
struct Constants {
    Quantity G;    // m^3 kg^-1 s^-2
    Quantity hbar; // J s
    Quantity c;    // m/s (exact)
    Quantity mu0;  // kg m A^-2 s^-2

    static Constants codata() {
        using D = Dimension;
        Constants k;
        k.G = Quantity::scalar(6.67430e-11,
                               dims::length.pow(3) / dims::mass / dims::time.pow(2));
        k.hbar = Quantity::scalar(1.054571817e-34, dims::energy * dims::time);
        k.c = Quantity::scalar(299792458.0, dims::speed);
        k.mu0 = Quantity::scalar(1.25663706212e-6,
                                 dims::mass * dims::length /
                                     (D::current().pow(2) * dims::time.pow(2)));
        return k;
    }

    // Same dimensions, all values 1. Useful for unit-scaling checks.
    static Constants unit_values() {
        Constants k = codata();
        k.G = Quantity::scalar(1.0, k.G.dim());
        k.hbar = Quantity::scalar(1.0, k.hbar.dim());
        k.c = Quantity::scalar(1.0, k.c.dim());
        k.mu0 = Quantity::scalar(1.0, k.mu0.dim());
        return k;
    }
};

// l_P = sqrt(hbar G / c^3), carries length dimension.
inline Quantity planck_length(const Constants& k) {
    return sqrt(k.hbar * k.G / pow(k.c, 3));
}

// The gravitational permittivity/permeability analog pair comes in two
// conventions that cannot both hold: mu_g = 4G/c^2 keeps the literal
// field-equation prefactor but breaks eps*mu*c^2 = 1 by a factor pi;
// mu_g = 4*pi*G/c^2 restores the wave-speed identity. Both are first-class
// and every downstream result is labeled with the one it used.
enum class ConventionName { paper_literal, maxwell_consistent };

inline std::string to_string(ConventionName n) {
    return n == ConventionName::paper_literal ? "paper_literal" : "maxwell_consistent";
}

inline ConventionName convention_from_string(const std::string& s) {
    std::string t;
    for (char ch : s)
        t += (ch == '-') ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (t == "paper_literal" || t == "paperliteral") return ConventionName::paper_literal;
    if (t == "maxwell_consistent" || t == "maxwellconsistent")
        return ConventionName::maxwell_consistent;
    throw parse_error("unknown convention '" + s +
                      "' (expected paper_literal or maxwell_consistent)");
}

struct GemConvention {
    ConventionName name;
    Quantity eps_g; // kg s^2 m^-3  (inverse of G's dimension)
    Quantity mu_g;  // m/kg
};

inline GemConvention gem_constants(const Constants& k, ConventionName name) {
    GemConvention conv;
    conv.name = name;
    const Quantity four_pi = Quantity::dimensionless(4.0 * M_PI);
    conv.eps_g = Quantity::dimensionless(1.0) / (four_pi * k.G);
    switch (name) {
    case ConventionName::paper_literal:
        conv.mu_g = 4.0 * k.G / (k.c * k.c);
        break;
    case ConventionName::maxwell_consistent:
        conv.mu_g = four_pi * k.G / (k.c * k.c);
        break;
    }
    return conv;
}

// eps_g * mu_g * c^2; equals 1 under maxwell_consistent, 1/pi under
// paper_literal.
inline double convention_identity(const Constants& k, ConventionName name) {
    const GemConvention conv = gem_constants(k, name);
    return (conv.eps_g * conv.mu_g * k.c * k.c).si();
}

} // namespace gemq
