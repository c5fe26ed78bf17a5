#include <benchmark/benchmark.h>

#include "cyclovortex/currents.hpp"
#include "cyclovortex/dynamics.hpp"
#include "cyclovortex/ensemble.hpp"

namespace cv = cyclovortex;

namespace {

const cv::PhysicalParams params{};
const cv::CyclotronOrbit orbit{2.0, 0.0, 1.0, 0.0};

void BM_Integrate(benchmark::State& state, cv::Method method) {
    const auto s0 = cv::orbit_state(orbit, params, 0.0);
    const auto steps = static_cast<std::size_t>(state.range(0));
    const double dt = params.period() / static_cast<double>(steps);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cv::integrate_lorentz(s0, params, dt, steps, method));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK_CAPTURE(BM_Integrate, rk4, cv::Method::rk4)->Arg(1024)->Arg(8192);
BENCHMARK_CAPTURE(BM_Integrate, boris, cv::Method::boris)->Arg(1024)->Arg(8192);

void BM_Observe(benchmark::State& state) {
    const auto ens = cv::build_vortex(params, 1.0, 2.0, 8, cv::phase_mode::Uniform{static_cast<std::size_t>(state.range(0))});
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cv::observe(ens, t));
        t += 0.01;
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ens.n_electrons()));
}
BENCHMARK(BM_Observe)->Arg(16)->Arg(256);

void BM_CurrentProfile(benchmark::State& state) {
    const auto ens = cv::build_vortex(params, 1.0, 2.0, 8, cv::phase_mode::Uniform{64});
    for (auto _ : state) {
        benchmark::DoNotOptimize(cv::current_profile(ens, 20, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_CurrentProfile)->Arg(32)->Arg(256);

void BM_WindingAngle(benchmark::State& state) {
    const cv::CyclotronOrbit zero{1.0, 0.0, 1.0, 0.3};
    for (auto _ : state) {
        benchmark::DoNotOptimize(cv::winding_angle(zero, params, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_WindingAngle)->Arg(4096)->Arg(65536);

}  // namespace

BENCHMARK_MAIN();
