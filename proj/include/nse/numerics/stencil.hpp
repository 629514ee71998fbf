#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nse/errors.hpp"

namespace nse::numerics {

template <class T>
struct StencilResult {
    std::vector<T> values;
    /// values.front() and values.back() come from one-sided formulas.
    bool endpoints_one_sided = true;
};

namespace detail {
inline void require_samples(std::size_t n, std::size_t minimum) {
    if (n < minimum) throw ConfigurationError("finite-difference stencil needs at least 5 samples");
}
}  // namespace detail

/// Central 3-point second derivative, O(dx^2). Endpoints use the second-order
/// one-sided formula (2f0 - 5f1 + 4f2 - f3)/dx^2.
template <class T>
StencilResult<T> second_derivative(std::span<const T> f, double dx) {
    const std::size_t n = f.size();
    detail::require_samples(n, 5);
    const double inv = 1.0 / (dx * dx);
    StencilResult<T> out{std::vector<T>(n), true};
    for (std::size_t i = 1; i + 1 < n; ++i) out.values[i] = (f[i - 1] - 2.0 * f[i] + f[i + 1]) * inv;
    out.values[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) * inv;
    out.values[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) * inv;
    return out;
}

/// Central first derivative, O(dx^2); one-sided second-order endpoints.
template <class T>
StencilResult<T> first_derivative(std::span<const T> f, double dx) {
    const std::size_t n = f.size();
    detail::require_samples(n, 5);
    const double inv = 0.5 / dx;
    StencilResult<T> out{std::vector<T>(n), true};
    for (std::size_t i = 1; i + 1 < n; ++i) out.values[i] = (f[i + 1] - f[i - 1]) * inv;
    out.values[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) * inv;
    out.values[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) * inv;
    return out;
}

/// Central 5-point second derivative, O(dx^4). The two outermost points on
/// each side are left at zero and flagged via endpoints_one_sided = false;
/// callers must only read values[2 .. n-3].
template <class T>
StencilResult<T> second_derivative_fourth_order(std::span<const T> f, double dx) {
    const std::size_t n = f.size();
    detail::require_samples(n, 5);
    const double inv = 1.0 / (12.0 * dx * dx);
    StencilResult<T> out{std::vector<T>(n, T{}), false};
    for (std::size_t i = 2; i + 2 < n; ++i)
        out.values[i] = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) * inv;
    return out;
}

}  // namespace nse::numerics
