#ifndef ENTSIM_ANALYTIC_HPP
#define ENTSIM_ANALYTIC_HPP

#include <complex>

#include "entsim/model.hpp"
#include "entsim/params.hpp"

namespace entsim {

enum class AnalyticQuantity { current_l, coherence };

/// One of the six covered closed-form transients: left current or
/// coherence for the ground, thermal or singlet initial state.
struct AnalyticSelector {
  InitialStateKind initial_kind = InitialStateKind::ground;
  AnalyticQuantity quantity = AnalyticQuantity::current_l;
};

/// Closed-form transient value at time t (units 1/eps_s). eta is taken
/// as a complex square root, so overdamped and underdamped parameters
/// share one expression; current selectors return a value whose
/// imaginary part vanishes to rounding.
std::complex<double> analytic_transient(const AnalyticSelector& sel,
                                        const EngineParams& p, double t);

/// Steady-state current 4 g^2 gamma_l gamma_r (f_l - f_r) /
/// (Gamma (4 g^2 + gamma_l gamma_r)).
double steady_current(const EngineParams& p);

/// Steady-state coherence; real and proportional to -(f_l - f_r).
double steady_coherence(const EngineParams& p);

/// Steady-state zero-frequency auto-correlation. The term divided by
/// (f_l - f_r) is evaluated in product form so equal baths are regular.
double steady_noise(const EngineParams& p);

/// Steady-state bath activity A_L + A_R.
double steady_activity(const EngineParams& p);

/// Steady-state internal activity A_S.
double steady_internal_activity(const EngineParams& p);

/// Closed-form steady-state KUR ratio; equals
/// steady_noise * steady_activity / steady_current^2. Throws ZeroBias
/// when |f_l - f_r| < 1e-12.
double steady_kur(const EngineParams& p);

} // namespace entsim

#endif
