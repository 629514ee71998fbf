#pragma once

// Data-parallel inner loops of the evolution and verification code.
//
// Every kernel exists twice: `serial` is the plain reference loop, `parallel`
// the OpenMP version used in production. Pointwise kernels produce bitwise
// identical output; reductions in `parallel` sum fixed-size blocks and then
// combine the partials in order, so their result does not depend on the
// thread count (it may differ from `serial` in the last few bits).

#include <complex>
#include <cstddef>
#include <functional>
#include <span>

namespace nse::kernels {

using complex = std::complex<double>;

/// Nonlinear potential F(phi) + U_ext(x) for one sample, with phi = |Psi|/c0.
struct LocalPotential {
    std::function<double(double)> shape;  // G, analytically continued
    double scale = 0.0;                   // A
    double inv_norm_const = 1.0;          // 1/c0
    double amplitude_floor = 1e-30;       // phi is clamped from below
};

inline constexpr std::size_t reduction_block = 1024;

namespace serial {

/// psi_j *= exp(-i * dt_over_hbar * (A G(max(|psi_j|/c0, floor)) + external_j)).
void apply_nonlinear_phase(std::span<complex> psi, std::span<const double> external,
                           const LocalPotential& potential, double dt_over_hbar);

/// spectrum_j *= exp(-i * coefficient * k_j^2).
void apply_spectral_phase(std::span<complex> spectrum, std::span<const double> wavenumbers,
                          double coefficient);

/// sum |psi_j|^2 * dx
double mass(std::span<const complex> psi, double dx);

/// sum |a_j - b_j|^2 * dx
double squared_distance(std::span<const complex> a, std::span<const complex> b, double dx);

/// Stationary NSE residual on a uniform grid of radii (or 1D positions):
///   R_j = -(hbar^2/2m) (psi'' + (N-1)/r psi') + (A G(psi/c0) + U_ext) psi - E psi
/// evaluated at interior indices 1..n-2. Returns {sum R^2, max |R|} and stores
/// R in `out` (endpoints set to 0).
struct ResidualSums {
    double sum_squares = 0.0;
    double max_abs = 0.0;
};

struct StationaryOperator {
    double kinetic = 0.5;       // hbar^2 / 2m
    double energy = 0.0;        // E0
    int dimension = 1;          // N; the (N-1)/r term is dropped for N = 1
    LocalPotential potential;
};

ResidualSums stationary_residual(std::span<const double> r, std::span<const double> psi,
                                 std::span<const double> external, const StationaryOperator& op,
                                 std::span<double> out);

}  // namespace serial

namespace parallel {

void apply_nonlinear_phase(std::span<complex> psi, std::span<const double> external,
                           const LocalPotential& potential, double dt_over_hbar);
void apply_spectral_phase(std::span<complex> spectrum, std::span<const double> wavenumbers,
                          double coefficient);
double mass(std::span<const complex> psi, double dx);
double squared_distance(std::span<const complex> a, std::span<const complex> b, double dx);
serial::ResidualSums stationary_residual(std::span<const double> r, std::span<const double> psi,
                                         std::span<const double> external,
                                         const serial::StationaryOperator& op, std::span<double> out);

}  // namespace parallel

/// Upper bound for OpenMP threads: NSE_THREADS if set, else the hardware count.
int configured_threads();
void apply_thread_limit();

}  // namespace nse::kernels
