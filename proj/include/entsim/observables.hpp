#ifndef ENTSIM_OBSERVABLES_HPP
#define ENTSIM_OBSERVABLES_HPP

#include <utility>
#include <vector>

#include "entsim/liouville.hpp"
#include "entsim/model.hpp"
#include "entsim/params.hpp"
#include "entsim/xstate.hpp"

namespace entsim {

enum class Bath { left, right };

/// Net particle current entering the system from bath j,
/// Tr{(L_j^+ - L_j^-) rho}. For the left bath this is
/// gamma_l^+ (r1+r2) - gamma_l^- (r3+r4).
double current(Bath j, const XState& s, const EngineParams& p);

/// Coherent inter-qubit current -2 g Re c, positive when flowing from
/// the left to the right qubit.
double internal_current(const XState& s, const EngineParams& p);

/// Dynamical activity of bath j, Tr{(L_j^+ + L_j^-) rho} >= 0.
double activity(Bath j, const XState& s, const EngineParams& p);

/// A_L + A_R.
double total_activity(const XState& s, const EngineParams& p);

/// Internal-jump contribution (4 g^2 / Gamma)(r2 + r3).
double internal_activity(const XState& s, const EngineParams& p);

using Matrix6 = Eigen::Matrix<Complex, 6, 6>;
using Vector6 = Eigen::Matrix<Complex, 6, 1>;

/// Uniform-grid trajectory cache for the two-time correlation
/// quadratures: the state history, the single-step propagator
/// exp(L h) and per-point current/activity series. Construction is
/// single-threaded; afterwards the kernel is read-only and safe to
/// share across threads.
class NoiseKernel {
public:
  /// step in units 1/eps_s, count grid points covering
  /// [0, (count-1) step]. The trace is renormalized to 1 every 1000
  /// steps along the recursion.
  NoiseKernel(const EngineParams& p, const XState& initial, double step, int count);

  const EngineParams& params() const { return params_; }
  const RateSet& rate_set() const { return rates_; }
  double step() const { return h_; }
  int size() const { return static_cast<int>(history_.size()); }
  double time_at(int k) const { return h_ * k; }

  /// Grid index of t; throws OffGrid when t is not a grid point (to
  /// 1e-6 h) or lies outside the grid.
  int index_of(double t) const;

  XState state(int k) const;
  const Vector6& vector_at(int k) const { return history_[k]; }
  const Matrix6& step_propagator() const { return step_prop_; }
  const Matrix6& current_op(Bath j) const;
  const Matrix6& activity_op(Bath j) const;

  double current_at(Bath j, int k) const;
  double activity_at(Bath j, int k) const;
  double internal_activity_at(int k) const;
  double internal_current_at(int k) const;

private:
  EngineParams params_;
  RateSet rates_;
  double h_ = 0.0;
  Matrix6 step_prop_;
  Matrix6 op_current_[2];
  Matrix6 op_activity_[2];
  std::vector<Vector6> history_;
  std::vector<double> cur_l_, cur_r_, act_l_, act_r_, act_s_, int_cur_;
};

/// Two-time current correlation S_jj'(t, t'). The connected part keeps
/// the Heaviside structure of the defining expression; the equal-time
/// delta contribution is reported symbolically via has_delta and
/// delta_weight = A_j(t), never discretized.
struct CorrelationValue {
  double connected = 0.0;
  bool has_delta = false;
  double delta_weight = 0.0;
};

CorrelationValue two_time_correlation(Bath j, Bath jp, double t, double tp,
                                      const NoiseKernel& kernel);

/// Finite-time zero-frequency noise: delta_jj' A_j(t) plus the
/// trapezoidal lag integral of the connected correlation over
/// tau in [-t, t]. Requires both t and 2t on the kernel grid.
double finite_time_zero_freq_noise(Bath j, Bath jp, double t, const NoiseKernel& kernel);

/// S_jj'(t_k) for every grid index k with 2k < size(). OpenMP-parallel
/// over grid points when threads != 1; the result does not depend on
/// the thread count.
std::vector<double> noise_series(const NoiseKernel& kernel, Bath j, Bath jp,
                                 int threads = 0);

/// Serial reference for noise_series: evaluates each point through the
/// two-time correlation quadrature directly, without the shared
/// row-vector recursion. Used by tests and benchmarks.
std::vector<double> noise_series_reference(const NoiseKernel& kernel, Bath j, Bath jp);

/// Steady-state zero-frequency noise from the traceless pseudoinverse:
/// delta_jj' A_j(ss) - Tr{I_j R I_j' rho_ss} - Tr{I_j' R I_j rho_ss}.
double steady_state_noise(Bath j, Bath jp, const EngineParams& p);

/// Residuals of the two occupation balance equations at an interior
/// grid point, with the occupation derivatives taken by centered
/// differences: (dn_L - (-I_S + I_L), dn_R - (I_S + I_R)). Both vanish
/// as h^2.
std::pair<double, double> conservation_residual(const NoiseKernel& kernel, double t);

} // namespace entsim

#endif
