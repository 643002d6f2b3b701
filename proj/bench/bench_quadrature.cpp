// Compares the serial reference quadrature path with the OpenMP one on a
// representative weighted |f'|^p integral and reports timings and the
// agreement of the results.

#include <chrono>
#include <cstdio>
#include <vector>

#include "teichnum/norms.hpp"

using namespace teichnum;
using clk = std::chrono::steady_clock;

int main() {
  std::vector<cplx> c(64);
  c[1] = 1.0;
  for (std::size_t k = 2; k < 10; ++k) c[k] = cplx(0.3 / static_cast<double>(k * k), 0.01);
  const PowerSeries f(std::move(c));

  WeightedIntegralSpec spec;
  spec.p = 2.5;
  spec.alpha = 0.75;

  for (const std::size_t n : {128ul, 256ul, 512ul}) {
    const auto t0 = clk::now();
    const double serial = weighted_fprime_integral(f, spec, n, 2 * n, ExecPolicy::serial);
    const auto t1 = clk::now();
    const double parallel = weighted_fprime_integral(f, spec, n, 2 * n, ExecPolicy::parallel);
    const auto t2 = clk::now();
    const double ts = std::chrono::duration<double, std::milli>(t1 - t0).count();
    const double tp = std::chrono::duration<double, std::milli>(t2 - t1).count();
    std::printf("n_rad=%4zu n_ang=%4zu  serial %8.2f ms  parallel %8.2f ms  speedup %5.2fx"
                "  |diff| %.3e\n",
                n, 2 * n, ts, tp, ts / tp, std::abs(serial - parallel));
  }
  return 0;
}
