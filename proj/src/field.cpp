#include "nse/field.hpp"

#include "nse/errors.hpp"
#include "nse/kernels.hpp"

namespace nse {

BoxGrid::BoxGrid(std::size_t n_, double x_min_, double x_max_) : n(n_), x_min(x_min_), x_max(x_max_) {
    if (n < 5) throw ConfigurationError("BoxGrid: need at least 5 points");
    if (!(x_max > x_min)) throw ConfigurationError("BoxGrid: x_max must exceed x_min");
}

std::vector<double> BoxGrid::positions() const {
    std::vector<double> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = position(j);
    x.back() = x_max;
    return x;
}

std::size_t grid_size(const FieldGrid& grid) {
    return std::visit([](const auto& g) { return g.n; }, grid);
}

double grid_spacing(const FieldGrid& grid) {
    return std::visit([](const auto& g) { return g.dx(); }, grid);
}

std::vector<double> grid_positions(const FieldGrid& grid) {
    return std::visit([](const auto& g) { return g.positions(); }, grid);
}

bool is_periodic(const FieldGrid& grid) { return std::holds_alternative<numerics::SpectralGrid>(grid); }

double mass(const ComplexField& field) {
    return kernels::parallel::mass(field.samples, grid_spacing(field.grid));
}

}  // namespace nse
