// Serial reference loops vs. their OpenMP counterparts on evolution-sized
// fields. Run with NSE_THREADS to vary the thread count.

#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <vector>

#include "nse/kernels.hpp"
#include "nse/models.hpp"

namespace {

using nse::kernels::complex;

struct Fixture {
    std::vector<complex> psi;
    std::vector<double> external;
    std::vector<double> k;
    std::vector<double> r;
    std::vector<double> real_psi;
    std::vector<double> out;
    nse::kernels::LocalPotential potential;
    nse::kernels::serial::StationaryOperator op;

    explicit Fixture(std::size_t n) {
        const auto spec = nse::models::ModelSpec{nse::models::PowerLaw{1.0, 0.5}, {}};
        const auto problem = nse::models::make_problem(spec);
        const double dx = 40.0 / static_cast<double>(n);
        psi.resize(n);
        external.assign(n, 0.0);
        k.resize(n);
        r.resize(n);
        real_psi.resize(n);
        out.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double x = -20.0 + dx * static_cast<double>(j);
            r[j] = x;
            real_psi[j] = problem.ground.norm_const * problem.ground.profile(std::abs(x));
            psi[j] = std::polar(real_psi[j], 0.5 * x);
            k[j] = 0.01 * static_cast<double>(j) - 0.005 * static_cast<double>(n);
        }
        potential.shape = problem.nonlinearity.shape_fn;
        potential.scale = problem.nonlinearity.scale;
        potential.inv_norm_const = 1.0 / problem.ground.norm_const;
        op.kinetic = 0.5;
        op.energy = problem.ground.energy;
        op.potential = potential;
    }
};

template <bool Parallel>
void nonlinear_phase(benchmark::State& state) {
    Fixture f(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        if constexpr (Parallel)
            nse::kernels::parallel::apply_nonlinear_phase(f.psi, f.external, f.potential, 1e-3);
        else
            nse::kernels::serial::apply_nonlinear_phase(f.psi, f.external, f.potential, 1e-3);
        benchmark::DoNotOptimize(f.psi.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void spectral_phase(benchmark::State& state) {
    Fixture f(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        if constexpr (Parallel)
            nse::kernels::parallel::apply_spectral_phase(f.psi, f.k, 1e-3);
        else
            nse::kernels::serial::apply_spectral_phase(f.psi, f.k, 1e-3);
        benchmark::DoNotOptimize(f.psi.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void mass(benchmark::State& state) {
    Fixture f(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        double m = Parallel ? nse::kernels::parallel::mass(f.psi, 1e-2) : nse::kernels::serial::mass(f.psi, 1e-2);
        benchmark::DoNotOptimize(m);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void stationary_residual(benchmark::State& state) {
    Fixture f(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto sums = Parallel ? nse::kernels::parallel::stationary_residual(f.r, f.real_psi, f.external, f.op, f.out)
                             : nse::kernels::serial::stationary_residual(f.r, f.real_psi, f.external, f.op, f.out);
        benchmark::DoNotOptimize(sums);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(nonlinear_phase<false>)->Name("nonlinear_phase/serial")->RangeMultiplier(4)->Range(1 << 12, 1 << 18);
BENCHMARK(nonlinear_phase<true>)->Name("nonlinear_phase/parallel")->RangeMultiplier(4)->Range(1 << 12, 1 << 18);
BENCHMARK(spectral_phase<false>)->Name("spectral_phase/serial")->RangeMultiplier(4)->Range(1 << 12, 1 << 18);
BENCHMARK(spectral_phase<true>)->Name("spectral_phase/parallel")->RangeMultiplier(4)->Range(1 << 12, 1 << 18);
BENCHMARK(mass<false>)->Name("mass/serial")->RangeMultiplier(4)->Range(1 << 12, 1 << 18);
BENCHMARK(mass<true>)->Name("mass/parallel")->RangeMultiplier(4)->Range(1 << 12, 1 << 18);
BENCHMARK(stationary_residual<false>)->Name("stationary_residual/serial")->RangeMultiplier(4)->Range(1 << 12, 1 << 18);
BENCHMARK(stationary_residual<true>)->Name("stationary_residual/parallel")->RangeMultiplier(4)->Range(1 << 12, 1 << 18);

int main(int argc, char** argv) {
    nse::kernels::apply_thread_limit();
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
