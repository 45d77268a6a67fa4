#ifndef ENTSIM_METRICS_HPP
#define ENTSIM_METRICS_HPP

#include <span>
#include <utility>
#include <vector>

#include "entsim/observables.hpp"
#include "entsim/params.hpp"
#include "entsim/xstate.hpp"

namespace entsim {

/// Concurrence of an X state: max{0, 2(|c| - sqrt(r1 r4))}.
double concurrence(const XState& s);

/// I_L(t) / (2 g |c(t)|) on the kernel grid. Converges to 1 whenever
/// the steady current is nonzero. Throws ZeroCoherence when
/// |c(t)| <= 1e-14, OffGrid for t outside the grid.
double current_coherence_ratio(const NoiseKernel& kernel, double t);

/// One steady-state solution per left-bath temperature.
struct SweepPoint {
  double t_l = 0.0;
  double steady_current = 0.0;
  double steady_concurrence = 0.0;
  double steady_coherence = 0.0;
};

/// Steady states along an ascending t_l grid, evaluated point-parallel
/// when threads != 1.
std::vector<SweepPoint> steady_sweep(const EngineParams& base,
                                     std::span<const double> t_l_grid,
                                     int threads = 0);

/// Bisection on T_L for the root of the concurrence witness
/// 2(|c| - sqrt(r1 r4)) = 0, to |dT_L| < 1e-8; returns the steady
/// current at the root. Throws NoSignChange unless the witness changes
/// sign across the bracket.
double critical_current(const EngineParams& base, std::pair<double, double> t_l_bracket);

} // namespace entsim

#endif
