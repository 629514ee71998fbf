#include "nse/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace nse::kernels {

namespace {

inline double local_potential(const LocalPotential& p, double amplitude, double external) {
    const double phi = std::max(amplitude * p.inv_norm_const, p.amplitude_floor);
    return p.scale * p.shape(phi) + external;
}

inline complex phase(double angle) { return {std::cos(angle), -std::sin(angle)}; }

inline double residual_at(std::span<const double> r, std::span<const double> psi,
                          std::span<const double> external, const serial::StationaryOperator& op,
                          double dx, std::size_t i) {
    double laplacian = (psi[i - 1] - 2.0 * psi[i] + psi[i + 1]) / (dx * dx);
    if (op.dimension > 1) laplacian += (op.dimension - 1) / r[i] * (psi[i + 1] - psi[i - 1]) / (2.0 * dx);
    const double v = local_potential(op.potential, std::abs(psi[i]), external[i]);
    return -op.kinetic * laplacian + (v - op.energy) * psi[i];
}

inline double uniform_spacing(std::span<const double> r) {
    return (r.back() - r.front()) / static_cast<double>(r.size() - 1);
}

std::size_t block_count(std::size_t n) { return (n + reduction_block - 1) / reduction_block; }

}  // namespace

namespace serial {

void apply_nonlinear_phase(std::span<complex> psi, std::span<const double> external,
                           const LocalPotential& potential, double dt_over_hbar) {
    for (std::size_t j = 0; j < psi.size(); ++j)
        psi[j] *= phase(dt_over_hbar * local_potential(potential, std::abs(psi[j]), external[j]));
}

void apply_spectral_phase(std::span<complex> spectrum, std::span<const double> wavenumbers,
                          double coefficient) {
    for (std::size_t j = 0; j < spectrum.size(); ++j)
        spectrum[j] *= phase(coefficient * wavenumbers[j] * wavenumbers[j]);
}

double mass(std::span<const complex> psi, double dx) {
    double sum = 0.0;
    for (const auto& v : psi) sum += std::norm(v);
    return sum * dx;
}

double squared_distance(std::span<const complex> a, std::span<const complex> b, double dx) {
    double sum = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) sum += std::norm(a[j] - b[j]);
    return sum * dx;
}

ResidualSums stationary_residual(std::span<const double> r, std::span<const double> psi,
                                 std::span<const double> external, const StationaryOperator& op,
                                 std::span<double> out) {
    const std::size_t n = psi.size();
    const double dx = uniform_spacing(r);
    ResidualSums sums;
    out[0] = 0.0;
    out[n - 1] = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double res = residual_at(r, psi, external, op, dx, i);
        out[i] = res;
        sums.sum_squares += res * res;
        sums.max_abs = std::max(sums.max_abs, std::abs(res));
    }
    return sums;
}

}  // namespace serial

namespace parallel {

void apply_nonlinear_phase(std::span<complex> psi, std::span<const double> external,
                           const LocalPotential& potential, double dt_over_hbar) {
    const auto n = static_cast<std::ptrdiff_t>(psi.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < n; ++j)
        psi[j] *= phase(dt_over_hbar * local_potential(potential, std::abs(psi[j]), external[j]));
}

void apply_spectral_phase(std::span<complex> spectrum, std::span<const double> wavenumbers,
                          double coefficient) {
    const auto n = static_cast<std::ptrdiff_t>(spectrum.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < n; ++j)
        spectrum[j] *= phase(coefficient * wavenumbers[j] * wavenumbers[j]);
}

double mass(std::span<const complex> psi, double dx) {
    const std::size_t blocks = block_count(psi.size());
    std::vector<double> partial(blocks, 0.0);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * reduction_block;
        const std::size_t hi = std::min(lo + reduction_block, psi.size());
        double s = 0.0;
        for (std::size_t j = lo; j < hi; ++j) s += std::norm(psi[j]);
        partial[b] = s;
    }
    double sum = 0.0;
    for (double s : partial) sum += s;
    return sum * dx;
}

double squared_distance(std::span<const complex> a, std::span<const complex> b_, double dx) {
    const std::size_t blocks = block_count(a.size());
    std::vector<double> partial(blocks, 0.0);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * reduction_block;
        const std::size_t hi = std::min(lo + reduction_block, a.size());
        double s = 0.0;
        for (std::size_t j = lo; j < hi; ++j) s += std::norm(a[j] - b_[j]);
        partial[b] = s;
    }
    double sum = 0.0;
    for (double s : partial) sum += s;
    return sum * dx;
}

serial::ResidualSums stationary_residual(std::span<const double> r, std::span<const double> psi,
                                         std::span<const double> external,
                                         const serial::StationaryOperator& op, std::span<double> out) {
    const std::size_t n = psi.size();
    const double dx = uniform_spacing(r);
    out[0] = 0.0;
    out[n - 1] = 0.0;
    const std::size_t blocks = block_count(n);
    std::vector<serial::ResidualSums> partial(blocks);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
        const std::size_t lo = std::max<std::size_t>(1, static_cast<std::size_t>(b) * reduction_block);
        const std::size_t hi = std::min(static_cast<std::size_t>(b + 1) * reduction_block, n - 1);
        serial::ResidualSums s;
        for (std::size_t i = lo; i < hi; ++i) {
            const double res = residual_at(r, psi, external, op, dx, i);
            out[i] = res;
            s.sum_squares += res * res;
            s.max_abs = std::max(s.max_abs, std::abs(res));
        }
        partial[b] = s;
    }
    serial::ResidualSums sums;
    for (const auto& s : partial) {
        sums.sum_squares += s.sum_squares;
        sums.max_abs = std::max(sums.max_abs, s.max_abs);
    }
    return sums;
}

}  // namespace parallel

int configured_threads() {
    if (const char* env = std::getenv("NSE_THREADS")) {
        try {
            const int requested = std::stoi(env);
            if (requested > 0) return requested;
        } catch (const std::exception&) {
        }
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

void apply_thread_limit() { omp_set_num_threads(configured_threads()); }

}  // namespace nse::kernels
