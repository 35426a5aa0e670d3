#include <benchmark/benchmark.h>

#include "cpforge/asymptotics.hpp"
#include "cpforge/constants.hpp"
#include "cpforge/dynamics.hpp"
#include "cpforge/potential.hpp"

using namespace cpforge;
using constants::speed_of_light;

namespace {

const double w10 = 2.3e15;
const double lu = speed_of_light / w10;

Material plate() {
    return Material({Resonance(0.75 * w10, 1.03 * w10, 1e-3 * w10)},
                    {Resonance(2.0 * w10, 1.0 * w10, 1e-3 * w10)});
}

Atom probe() { return Atom::two_level_strength(w10, 1e-7, w10); }

void BM_ReflectionRecursive(benchmark::State& state) {
    Material m = plate();
    const double dlu = 0.4 * lu;
    LayerStack stack({{m, 0.0}, {Material{}, 2.0 * lu}, {m, dlu}, {Material{}, 0.0}}, 3);
    double u = 0.9 * w10, q = 1.3 * w10 / speed_of_light;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            reflection_recursive(stack, Side::minus, Polarization::p, u, q));
    }
}
BENCHMARK(BM_ReflectionRecursive);

void BM_HalfSpacePotential(benchmark::State& state) {
    quad::Spec spec;
    LayerStack stack = LayerStack::half_space(plate());
    Atom atom = probe();
    auto alpha = [&](double u) { return atom.polarizability_iu(u); };
    const double scale = default_omega_scale(stack, atom);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            potential_energy(stack, alpha, scale, 0.8 * lu, spec).value);
    }
}
BENCHMARK(BM_HalfSpacePotential);

void BM_CavityPotential(benchmark::State& state) {
    quad::Spec spec;
    LayerStack stack = LayerStack::cavity(plate(), 15.0 * lu);
    Atom atom = probe();
    auto alpha = [&](double u) { return atom.polarizability_iu(u); };
    const double scale = default_omega_scale(stack, atom);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            potential_energy(stack, alpha, scale, 7.5 * lu, spec).value);
    }
}
BENCHMARK(BM_CavityPotential);

void BM_RetardedCoefficient(benchmark::State& state) {
    quad::Spec spec;
    const double alpha0 = probe().static_polarizability();
    for (auto _ : state) {
        benchmark::DoNotOptimize(asymptotics::c4(1.53, 5.0, alpha0, spec));
    }
}
BENCHMARK(BM_RetardedCoefficient);

void BM_ImGreenNearField(benchmark::State& state) {
    quad::Spec spec;
    Material m({Resonance(0.75 * w10, w10, 0.01 * w10)}, {});
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            dynamics::im_green_zz(m, 0.05 * lu, 0.95 * w10, spec));
    }
}
BENCHMARK(BM_ImGreenNearField);

}  // namespace

BENCHMARK_MAIN();
