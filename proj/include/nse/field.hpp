#pragma once

#include <complex>
#include <cstddef>
#include <variant>
#include <vector>

#include "nse/numerics/fourier.hpp"

namespace nse {

using complex = std::complex<double>;

/// Closed interval [x_min, x_max] sampled at n points including both walls;
/// the field is pinned to zero at the two end samples.
struct BoxGrid {
    std::size_t n = 0;
    double x_min = 0.0;
    double x_max = 0.0;

    BoxGrid() = default;
    /// Throws ConfigurationError unless n >= 5 and x_max > x_min.
    BoxGrid(std::size_t n, double x_min, double x_max);

    double dx() const { return (x_max - x_min) / static_cast<double>(n - 1); }
    double position(std::size_t j) const { return x_min + static_cast<double>(j) * dx(); }
    std::vector<double> positions() const;
};

using FieldGrid = std::variant<numerics::SpectralGrid, BoxGrid>;

std::size_t grid_size(const FieldGrid& grid);
double grid_spacing(const FieldGrid& grid);
std::vector<double> grid_positions(const FieldGrid& grid);
bool is_periodic(const FieldGrid& grid);

/// Samples of Psi(t, x) on a 1D grid.
struct ComplexField {
    FieldGrid grid;
    std::vector<complex> samples;
    double time = 0.0;
};

/// Riemann sum of |Psi|^2 dx.
double mass(const ComplexField& field);

}  // namespace nse
