#ifndef ENTSIM_KUR_HPP
#define ENTSIM_KUR_HPP

#include <optional>
#include <vector>

#include "entsim/observables.hpp"

namespace entsim {

/// Which jumps enter the activity bound. baths_only counts transitions
/// at the two reservoir interfaces; with_internal additionally counts
/// the coherent inter-qubit exchange A_S.
enum class ActivityMode { baths_only, with_internal };

enum class KurKind { left, asym };

/// Finite-time KUR ratios on a uniform grid (step in units 1/eps_s).
/// Entries are missing where the current denominator is below 1e-14,
/// e.g. along singlet trajectories crossing zero current.
struct KurSeries {
  double step = 0.0;
  ActivityMode mode = ActivityMode::baths_only;
  std::vector<std::optional<double>> r_left;
  std::vector<std::optional<double>> r_asym;
};

/// S_LL(t) A(t) / I_L(t)^2. Throws ZeroCurrent when |I_L(t)| <= 1e-14.
double kur_left(const NoiseKernel& kernel, double t, ActivityMode mode);

/// (S_LL + S_RR - S_LR - S_RL)(t) A(t) / (I_L(t) - I_R(t))^2.
/// Throws ZeroCurrent when |I_L - I_R| <= 1e-14.
double kur_asym(const NoiseKernel& kernel, double t, ActivityMode mode);

/// Both ratio series over the valid half of the kernel grid.
KurSeries kur_series(const NoiseKernel& kernel, ActivityMode mode, int threads = 0);

/// Half-open record [begin, end] of grid times (units 1/eps_s) where a
/// ratio stays below 1.
struct TimeInterval {
  double begin = 0.0;
  double end = 0.0;
};

/// Maximal grid intervals with ratio < 1. Missing entries interrupt a
/// window. Empty when the bound is never violated.
std::vector<TimeInterval> violation_windows(const KurSeries& series, KurKind which);

} // namespace entsim

#endif
