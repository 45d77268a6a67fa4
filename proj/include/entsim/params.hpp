#ifndef ENTSIM_PARAMS_HPP
#define ENTSIM_PARAMS_HPP

#include <complex>
#include <string>
#include <vector>

namespace entsim {

/// Fermi-Dirac occupation 1/(1+exp((eps-mu)/T)). Requires T > 0.
double fermi(double eps, double temperature, double mu);

enum class Regime { overdamped, underdamped, critical };

/// Physical parameters of the two-qubit engine. All energies, rates,
/// temperatures and potentials are expressed in units of the qubit
/// energy eps_s, which is therefore fixed to 1.
struct EngineParams {
  double eps_s = 1.0;
  double g = 0.0;        // inter-qubit coupling
  double gamma_l = 0.0;  // bare rate, left bath
  double gamma_r = 0.0;  // bare rate, right bath
  double t_l = 0.0;      // temperature, left bath
  double t_r = 0.0;      // temperature, right bath
  double mu_l = 0.0;     // chemical potential, left bath
  double mu_r = 0.0;     // chemical potential, right bath

  /// Total bare rate Gamma = gamma_l + gamma_r.
  double total_rate() const { return gamma_l + gamma_r; }

  /// eta^2 = (gamma_l - gamma_r)^2 - 16 g^2. Negative in the
  /// underdamped regime.
  double eta_squared() const {
    const double d = gamma_l - gamma_r;
    return d * d - 16.0 * g * g;
  }

  /// Principal complex square root of eta_squared(); imaginary for
  /// underdamped parameters.
  std::complex<double> eta() const;

  Regime regime() const {
    const double e2 = eta_squared();
    if (e2 > 0.0) return Regime::overdamped;
    if (e2 < 0.0) return Regime::underdamped;
    return Regime::critical;
  }

  double fermi_l() const { return fermi(eps_s, t_l, mu_l); }
  double fermi_r() const { return fermi(eps_s, t_r, mu_r); }

  /// Throws std::invalid_argument when rates or temperatures are not
  /// strictly positive, or g < 0.
  void check() const;

  /// Non-fatal validity diagnostics: the local master equation assumes
  /// gamma_j << eps_s and g of the order of gamma_j or smaller.
  std::vector<std::string> coupling_warnings() const;
};

/// Excitation/de-excitation rates gamma_j^+ = gamma_j f_j,
/// gamma_j^- = gamma_j (1 - f_j). Built so that the pair sums to
/// gamma_j exactly.
struct RateSet {
  double gamma_l_plus = 0.0;
  double gamma_l_minus = 0.0;
  double gamma_r_plus = 0.0;
  double gamma_r_minus = 0.0;
};

RateSet rates(const EngineParams& p);

} // namespace entsim

#endif
