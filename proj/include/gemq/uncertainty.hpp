#pragma once

#include <optional>
#include <string>

#include "gemq/constants.hpp"
#include "gemq/quantity.hpp"

// Confinement-scale uncertainty products. Comparisons against "unity" are
// made on SI numeric values, with the dimension carried alongside; that is
// the only reading under which the micron and sqrt(l_P) crossover claims
// are meaningful, and every report flags it.
namespace gemq::uncertainty {

enum class BoundKind { em, metric, christoffel, christoffel_product, gem_product };

inline std::string to_string(BoundKind k) {
    switch (k) {
    case BoundKind::em: return "em_product";
    case BoundKind::metric: return "metric";
    case BoundKind::christoffel: return "christoffel";
    case BoundKind::christoffel_product: return "christoffel_product";
    case BoundKind::gem_product: return "gem_product";
    }
    return "?";
}

/// A lower bound on an uncertainty product, with the confinement inputs it
/// was evaluated at. `unity_indicator` is the bare SI numeric of `value`.
struct UncertaintyBound {
    BoundKind kind;
    Quantity value;
    double unity_indicator;
    Quantity confinement;          // L
    std::optional<Quantity> separation; // r, gem_product only
};

namespace detail {
inline void require_positive_length(const Quantity& q, const char* name) {
    if (q.dim() != dims::length || !q.is_scalar())
        throw dimension_error(std::string(name) + " must be a scalar length in m");
    if (q.si() <= 0.0) throw domain_error(std::string(name) + " must be positive");
}

inline UncertaintyBound make_bound(BoundKind kind, Quantity value, Quantity L,
                                   std::optional<Quantity> r = std::nullopt) {
    UncertaintyBound b;
    b.kind = kind;
    b.value = value;
    b.unity_indicator = value.si();
    b.confinement = L;
    b.separation = r;
    return b;
}
} // namespace detail

// Electromagnetic product bound for confinement L: hbar c / L^4.
inline UncertaintyBound em_product_bound(const Quantity& L, const Constants& k) {
    detail::require_positive_length(L, "em_product_bound: L");
    return detail::make_bound(BoundKind::em, k.hbar * k.c / pow(L, 4), L);
}

// Metric uncertainty l_P / L, dimensionless.
inline UncertaintyBound metric_uncertainty(const Quantity& L, const Constants& k) {
    detail::require_positive_length(L, "metric_uncertainty: L");
    return detail::make_bound(BoundKind::metric, planck_length(k) / L, L);
}

// Connection-coefficient uncertainty l_P / L^2, in 1/m.
inline UncertaintyBound christoffel_uncertainty(const Quantity& L, const Constants& k) {
    detail::require_positive_length(L, "christoffel_uncertainty: L");
    return detail::make_bound(BoundKind::christoffel, planck_length(k) / (L * L), L);
}

// Product bound l_P^2 / L^4 = hbar G / (c^3 L^4), in 1/m^2.
inline UncertaintyBound christoffel_product_bound(const Quantity& L, const Constants& k) {
    detail::require_positive_length(L, "christoffel_product_bound: L");
    const Quantity lp = planck_length(k);
    return detail::make_bound(BoundKind::christoffel_product, lp * lp / pow(L, 4), L);
}

// Mixed field-product bound G hbar / (c^3 r^3 L). At L = r its SI numeric
// coincides with christoffel_product_bound(r).
inline UncertaintyBound gem_product_bound(const Quantity& r, const Quantity& L,
                                          const Constants& k) {
    detail::require_positive_length(r, "gem_product_bound: r");
    detail::require_positive_length(L, "gem_product_bound: L");
    const Quantity value = k.G * k.hbar / (pow(k.c, 3) * pow(r, 3) * L);
    return detail::make_bound(BoundKind::gem_product, value, L, r);
}

// The confinement at which the product bound crosses unity in SI numerics:
// L* = sqrt(l_P * 1 m), below nuclear size.
inline Quantity unity_scale(const Constants& k) {
    const Quantity one_meter = Quantity::scalar(1.0, dims::length);
    return sqrt(planck_length(k) * one_meter);
}

} // namespace gemq::uncertainty
