#pragma once

#include <cmath>
#include <string>
#include <variant>

#include "gemq/dimension.hpp"
#include "gemq/errors.hpp"

namespace gemq {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend constexpr Vec3 operator+(const Vec3& a, const Vec3& b) {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend constexpr Vec3 operator-(const Vec3& a, const Vec3& b) {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend constexpr Vec3 operator*(const Vec3& a, double s) {
        return {a.x * s, a.y * s, a.z * s};
    }
    friend constexpr Vec3 operator*(double s, const Vec3& a) { return a * s; }
    friend constexpr Vec3 operator/(const Vec3& a, double s) {
        return {a.x / s, a.y / s, a.z / s};
    }
    friend constexpr bool operator==(const Vec3& a, const Vec3& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }

    constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    constexpr Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
};

/// A dimensioned value: a real scalar or a 3-vector in SI units.
///
/// Every physical number in the library flows through this type. Addition,
/// subtraction and comparison demand identical dimensions; products and
/// quotients combine them. Mismatches throw dimension_error, never coerce.
class Quantity {
public:
    Quantity() : value_(0.0), dim_(Dimension::none()) {}

    static Quantity scalar(double v, Dimension d = Dimension::none()) {
        return Quantity(v, d);
    }
    static Quantity vector(Vec3 v, Dimension d = Dimension::none()) {
        return Quantity(v, d);
    }
    static Quantity dimensionless(double v) { return Quantity(v, Dimension::none()); }

    bool is_scalar() const { return std::holds_alternative<double>(value_); }
    bool is_vector() const { return !is_scalar(); }
    bool is_dimensionless() const { return dim_.is_dimensionless(); }

    const Dimension& dim() const { return dim_; }

    // SI numeric value of a scalar quantity.
    double si() const {
        if (!is_scalar()) throw dimension_error("si(): quantity is a 3-vector, not a scalar");
        return std::get<double>(value_);
    }

    const Vec3& vec() const {
        if (is_scalar()) throw dimension_error("vec(): quantity is a scalar, not a 3-vector");
        return std::get<Vec3>(value_);
    }

    friend Quantity operator+(const Quantity& a, const Quantity& b) {
        require_same_dim(a, b, "add");
        require_same_kind(a, b, "add");
        if (a.is_scalar()) return Quantity(a.si() + b.si(), a.dim_);
        return Quantity(a.vec() + b.vec(), a.dim_);
    }

    friend Quantity operator-(const Quantity& a, const Quantity& b) {
        require_same_dim(a, b, "subtract");
        require_same_kind(a, b, "subtract");
        if (a.is_scalar()) return Quantity(a.si() - b.si(), a.dim_);
        return Quantity(a.vec() - b.vec(), a.dim_);
    }

    Quantity operator-() const {
        if (is_scalar()) return Quantity(-si(), dim_);
        return Quantity(vec() * -1.0, dim_);
    }

    friend Quantity operator*(const Quantity& a, const Quantity& b) {
        const Dimension d = a.dim_ * b.dim_;
        if (a.is_scalar() && b.is_scalar()) return Quantity(a.si() * b.si(), d);
        if (a.is_scalar()) return Quantity(b.vec() * a.si(), d);
        if (b.is_scalar()) return Quantity(a.vec() * b.si(), d);
        throw dimension_error("mul: vector*vector is ambiguous, use dot() or cross()");
    }

    friend Quantity operator/(const Quantity& a, const Quantity& b) {
        const Dimension d = a.dim_ / b.dim_;
        if (!b.is_scalar())
            throw dimension_error("div: cannot divide by a 3-vector");
        if (a.is_scalar()) return Quantity(a.si() / b.si(), d);
        return Quantity(a.vec() / b.si(), d);
    }

    friend Quantity operator*(const Quantity& a, double s) {
        return a * Quantity::dimensionless(s);
    }
    friend Quantity operator*(double s, const Quantity& a) {
        return Quantity::dimensionless(s) * a;
    }
    friend Quantity operator/(const Quantity& a, double s) {
        return a / Quantity::dimensionless(s);
    }

    // Scalar comparisons, same dimension required.
    friend bool operator<(const Quantity& a, const Quantity& b) {
        require_same_dim(a, b, "compare");
        return a.si() < b.si();
    }
    friend bool operator>(const Quantity& a, const Quantity& b) { return b < a; }
    friend bool operator<=(const Quantity& a, const Quantity& b) { return !(b < a); }
    friend bool operator>=(const Quantity& a, const Quantity& b) { return !(a < b); }

private:
    Quantity(double v, Dimension d) : value_(v), dim_(d) {}
    Quantity(Vec3 v, Dimension d) : value_(v), dim_(d) {}

    static void require_same_dim(const Quantity& a, const Quantity& b, const char* op) {
        if (a.dim_ != b.dim_)
            throw dimension_error(std::string(op) + ": dimension mismatch, " + a.dim_.str() +
                                  " vs " + b.dim_.str());
    }
    static void require_same_kind(const Quantity& a, const Quantity& b, const char* op) {
        if (a.is_scalar() != b.is_scalar())
            throw dimension_error(std::string(op) + ": cannot mix scalar and 3-vector");
    }

    std::variant<double, Vec3> value_;
    Dimension dim_;
};

inline Quantity dot(const Quantity& a, const Quantity& b) {
    if (a.is_scalar() || b.is_scalar())
        throw dimension_error("dot: both operands must be 3-vectors");
    return Quantity::scalar(a.vec().dot(b.vec()), a.dim() * b.dim());
}

inline Quantity cross(const Quantity& a, const Quantity& b) {
    if (a.is_scalar() || b.is_scalar())
        throw dimension_error("cross: both operands must be 3-vectors");
    return Quantity::vector(a.vec().cross(b.vec()), a.dim() * b.dim());
}

inline Quantity norm(const Quantity& a) {
    return Quantity::scalar(a.vec().norm(), a.dim());
}

inline Quantity sqrt(const Quantity& a) {
    const double v = a.si();
    if (v < 0.0) throw domain_error("sqrt of negative quantity");
    return Quantity::scalar(std::sqrt(v), a.dim().sqrt());
}

inline Quantity pow(const Quantity& a, int e) {
    return Quantity::scalar(std::pow(a.si(), e), a.dim().pow(e));
}

// Shorthand constructors for the handful of SI dimensions used everywhere.
inline Quantity kilograms(double v) { return Quantity::scalar(v, dims::mass); }
inline Quantity meters(double v) { return Quantity::scalar(v, dims::length); }
inline Quantity seconds(double v) { return Quantity::scalar(v, dims::time); }
inline Quantity meters_per_second(double v) { return Quantity::scalar(v, dims::speed); }
inline Quantity per_second(double v) { return Quantity::scalar(v, dims::frequency); }
inline Quantity square_meters(double v) { return Quantity::scalar(v, dims::area); }
inline Quantity kg_per_second(double v) { return Quantity::scalar(v, dims::mass_current); }

enum class ArithOp { add, sub, mul, div, dot, cross };

// Checked dispatch over the elementary operations; the entry point the
// CLI and tests exercise. dot/cross demand 3-vector operands.
inline Quantity quantity_arith(const Quantity& a, const Quantity& b, ArithOp op) {
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
    case ArithOp::dot: return dot(a, b);
    case ArithOp::cross: return cross(a, b);
    }
    throw dimension_error("quantity_arith: unknown op");
}

} // namespace gemq
