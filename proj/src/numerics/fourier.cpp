#include "nse/numerics/fourier.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <numbers>

#include "nse/errors.hpp"

namespace nse::numerics {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

SpectralGrid::SpectralGrid(std::size_t n_, double x_min_, double x_max_) : n(n_), x_min(x_min_), x_max(x_max_) {
    if (n < 16 || !is_power_of_two(n)) throw ConfigurationError("SpectralGrid: n must be a power of two >= 16");
    if (!(x_max > x_min)) throw ConfigurationError("SpectralGrid: x_max must exceed x_min");
}

double SpectralGrid::wavenumber(std::size_t j) const {
    const double base = 2.0 * std::numbers::pi / (static_cast<double>(n) * dx());
    const auto signed_j = j < n / 2 ? static_cast<double>(j) : static_cast<double>(j) - static_cast<double>(n);
    return base * signed_j;
}

std::vector<double> SpectralGrid::positions() const {
    std::vector<double> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = position(j);
    return x;
}

std::vector<double> SpectralGrid::wavenumbers() const {
    std::vector<double> k(n);
    for (std::size_t j = 0; j < n; ++j) k[j] = wavenumber(j);
    return k;
}

namespace {

struct PlanPair {
    fftw_plan forward;
    fftw_plan inverse;
};

// The FFTW planner is not re-entrant; plans live for the whole process.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

PlanPair plans_for(std::size_t n) {
    static std::map<std::size_t, PlanPair> cache;
    std::lock_guard lock(planner_mutex());
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    auto* scratch = fftw_alloc_complex(n);
    const int len = static_cast<int>(n);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    PlanPair p{fftw_plan_dft_1d(len, scratch, scratch, FFTW_FORWARD, flags),
               fftw_plan_dft_1d(len, scratch, scratch, FFTW_BACKWARD, flags)};
    fftw_free(scratch);
    cache.emplace(n, p);
    return p;
}

fftw_complex* as_fftw(complex* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

FourierTransform::FourierTransform(std::size_t n) : n_(n) {
    if (!is_power_of_two(n)) throw ConfigurationError("FourierTransform: length must be a power of two");
    const auto p = plans_for(n);
    forward_plan_ = p.forward;
    inverse_plan_ = p.inverse;
}

void FourierTransform::forward(std::span<complex> data) const {
    if (data.size() != n_) throw ConfigurationError("FourierTransform: length mismatch");
    fftw_execute_dft(static_cast<fftw_plan>(forward_plan_), as_fftw(data.data()), as_fftw(data.data()));
}

void FourierTransform::inverse(std::span<complex> data) const {
    if (data.size() != n_) throw ConfigurationError("FourierTransform: length mismatch");
    fftw_execute_dft(static_cast<fftw_plan>(inverse_plan_), as_fftw(data.data()), as_fftw(data.data()));
    const double scale = 1.0 / static_cast<double>(n_);
    for (auto& v : data) v *= scale;
}

std::vector<complex> dft_forward(std::span<const complex> field) {
    std::vector<complex> out(field.begin(), field.end());
    FourierTransform(out.size()).forward(out);
    return out;
}

std::vector<complex> dft_inverse(std::span<const complex> spectrum) {
    std::vector<complex> out(spectrum.begin(), spectrum.end());
    FourierTransform(out.size()).inverse(out);
    return out;
}

}  // namespace nse::numerics
