#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "hqc/catalog.hpp"
#include "hqc/contact.hpp"
#include "hqc/curves.hpp"
#include "hqc/grid.hpp"
#include "hqc/lifting.hpp"

using namespace hqc;

namespace {

void BM_PotentialFresh(benchmark::State& state) {
  const PlanarMap f = *make_spiral_stretch(1.0, 1.0).planar;
  const auto zetas = koranyi_images(standard_grid());
  for (auto _ : state) {
    const Potential psi([&f](cplx z) { return psi_gradient(f, z); }, {-1.0, 0.0});
    for (const cplx& z : zetas) benchmark::DoNotOptimize(psi(z));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(zetas.size()));
}
BENCHMARK(BM_PotentialFresh);

void BM_ContactResiduals(benchmark::State& state) {
  const StarMap F = lift_star(*make_twist(2.0).planar).map;
  const auto grid = standard_grid();
  const auto mode = state.range(0) ? DerivativeMode::finite_difference : DerivativeMode::automatic;
  for (auto _ : state)
    for (const HeisPoint& p : grid) benchmark::DoNotOptimize(contact_residuals(frame_derivatives(F, p, mode)).R1);
  state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.size()));
}
BENCHMARK(BM_ContactResiduals)->Arg(0)->Arg(1);

void BM_CurveLift(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Curve base = sample_curve(CurveSpace::half_plane, 0.0, 2 * std::numbers::pi, n, [](double s) {
    const cplx e = std::polar(1.0, s);
    return CurveSample{cplx(-1.0, 0.0) + 0.5 * e, I * 0.5 * e};
  });
  for (auto _ : state) benchmark::DoNotOptimize(lift_hyperbolic_curve(base, 0.0));
}
BENCHMARK(BM_CurveLift)->Arg(65)->Arg(513);

}  // namespace

BENCHMARK_MAIN();
