#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "gemq/errors.hpp"

namespace gemq {

// SI base dimension indices, in the order used everywhere in this library.
enum class BaseDim : int {
    mass = 0,     // kg
    length = 1,   // m
    time = 2,     // s
    current = 3,  // A
    temperature = 4, // K
    amount = 5,   // mol
    luminosity = 6 // cd
};

/// Exponent signature over the 7 SI base dimensions.
///
/// Exponents are stored as integer numerators over a fixed denominator of 2,
/// so half-integer powers (needed for square roots such as m^1/2) stay exact.
class Dimension {
public:
    static constexpr int kBaseCount = 7;

    constexpr Dimension() : num_{} {}

    // Single base dimension raised to numerator/2.
    static constexpr Dimension base(BaseDim which, int numerator = 2) {
        Dimension d;
        d.num_[static_cast<int>(which)] = static_cast<std::int8_t>(numerator);
        return d;
    }

    static constexpr Dimension none() { return Dimension{}; }
    static constexpr Dimension mass() { return base(BaseDim::mass); }
    static constexpr Dimension length() { return base(BaseDim::length); }
    static constexpr Dimension time() { return base(BaseDim::time); }
    static constexpr Dimension current() { return base(BaseDim::current); }
    static constexpr Dimension temperature() { return base(BaseDim::temperature); }
    static constexpr Dimension amount() { return base(BaseDim::amount); }
    static constexpr Dimension luminosity() { return base(BaseDim::luminosity); }

    constexpr bool is_dimensionless() const {
        for (auto n : num_)
            if (n != 0) return false;
        return true;
    }

    // Numerator of the exponent (denominator is always 2).
    constexpr int numerator(int i) const { return num_[static_cast<std::size_t>(i)]; }

    friend constexpr Dimension operator*(const Dimension& a, const Dimension& b) {
        Dimension r;
        for (int i = 0; i < kBaseCount; ++i)
            r.num_[static_cast<std::size_t>(i)] =
                static_cast<std::int8_t>(a.num_[static_cast<std::size_t>(i)] +
                                         b.num_[static_cast<std::size_t>(i)]);
        return r;
    }

    friend constexpr Dimension operator/(const Dimension& a, const Dimension& b) {
        Dimension r;
        for (int i = 0; i < kBaseCount; ++i)
            r.num_[static_cast<std::size_t>(i)] =
                static_cast<std::int8_t>(a.num_[static_cast<std::size_t>(i)] -
                                         b.num_[static_cast<std::size_t>(i)]);
        return r;
    }

    constexpr Dimension pow(int e) const {
        Dimension r;
        for (int i = 0; i < kBaseCount; ++i)
            r.num_[static_cast<std::size_t>(i)] =
                static_cast<std::int8_t>(num_[static_cast<std::size_t>(i)] * e);
        return r;
    }

    // Halves every exponent. Quarter-integer powers are not representable.
    Dimension sqrt() const {
        Dimension r;
        for (int i = 0; i < kBaseCount; ++i) {
            if (num_[static_cast<std::size_t>(i)] % 2 != 0)
                throw dimension_error("sqrt of dimension " + str() +
                                      " would need quarter-integer exponents");
            r.num_[static_cast<std::size_t>(i)] =
                static_cast<std::int8_t>(num_[static_cast<std::size_t>(i)] / 2);
        }
        return r;
    }

    friend constexpr bool operator==(const Dimension& a, const Dimension& b) {
        for (int i = 0; i < kBaseCount; ++i)
            if (a.num_[static_cast<std::size_t>(i)] != b.num_[static_cast<std::size_t>(i)])
                return false;
        return true;
    }
    friend constexpr bool operator!=(const Dimension& a, const Dimension& b) {
        return !(a == b);
    }

    // Renders as space-separated base symbols, e.g. "kg m s^-2", "m^1/2";
    // dimensionless renders as "1". parse_unit() accepts this format back.
    std::string str() const {
        static constexpr const char* sym[kBaseCount] = {"kg", "m", "s", "A", "K", "mol", "cd"};
        std::string out;
        for (int i = 0; i < kBaseCount; ++i) {
            const int n = num_[static_cast<std::size_t>(i)];
            if (n == 0) continue;
            if (!out.empty()) out += ' ';
            out += sym[i];
            if (n == 2) continue; // exponent 1
            out += '^';
            if (n % 2 == 0) {
                out += std::to_string(n / 2);
            } else {
                out += std::to_string(n);
                out += "/2";
            }
        }
        if (out.empty()) out = "1";
        return out;
    }

private:
    std::array<std::int8_t, kBaseCount> num_;
};

namespace dims {
inline constexpr Dimension scalar = Dimension::none();
inline constexpr Dimension mass = Dimension::mass();
inline constexpr Dimension length = Dimension::length();
inline constexpr Dimension time = Dimension::time();
inline constexpr Dimension speed = Dimension::length() / Dimension::time();
inline constexpr Dimension acceleration = speed / Dimension::time();
inline constexpr Dimension frequency = Dimension::none() / Dimension::time();
inline constexpr Dimension force = mass * acceleration;
inline constexpr Dimension energy = force * length;
inline constexpr Dimension area = length * length;
inline constexpr Dimension mass_current = mass / time; // kg/s
} // namespace dims

} // namespace gemq
