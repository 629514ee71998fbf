#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace nse::numerics {

using complex = std::complex<double>;

/// Periodic grid of n points x_j = x_min + j*dx, dx = (x_max - x_min)/n.
/// The point x_max itself is the periodic image of x_min and is not stored.
struct SpectralGrid {
    std::size_t n = 0;
    double x_min = 0.0;
    double x_max = 0.0;

    SpectralGrid() = default;
    /// Throws ConfigurationError unless n >= 16 is a power of two and x_max > x_min.
    SpectralGrid(std::size_t n, double x_min, double x_max);

    double dx() const { return (x_max - x_min) / static_cast<double>(n); }
    double position(std::size_t j) const { return x_min + static_cast<double>(j) * dx(); }
    /// k_j = 2 pi j / (n dx) for j < n/2, then the negative frequencies.
    double wavenumber(std::size_t j) const;

    std::vector<double> positions() const;
    std::vector<double> wavenumbers() const;
};

bool is_power_of_two(std::size_t n);

/// X_k = sum_j x_j exp(-2 pi i jk/n), unnormalized.
std::vector<complex> dft_forward(std::span<const complex> field);
/// x_j = (1/n) sum_k X_k exp(+2 pi i jk/n).
std::vector<complex> dft_inverse(std::span<const complex> spectrum);

/// Reusable in-place transform pair for one length, same convention as above.
/// Plans are shared between instances; execution is safe from several threads.
class FourierTransform {
public:
    explicit FourierTransform(std::size_t n);

    std::size_t size() const { return n_; }
    void forward(std::span<complex> data) const;
    /// Includes the 1/n factor.
    void inverse(std::span<complex> data) const;

private:
    std::size_t n_;
    void* forward_plan_;
    void* inverse_plan_;
};

}  // namespace nse::numerics
