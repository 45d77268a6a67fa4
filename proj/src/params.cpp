#include "entsim/params.hpp"

#include <cmath>
#include <stdexcept>

namespace entsim {

double fermi(double eps, double temperature, double mu) {
  if (!(temperature > 0.0)) {
    throw std::invalid_argument("fermi: temperature must be > 0");
  }
  return 1.0 / (1.0 + std::exp((eps - mu) / temperature));
}

std::complex<double> EngineParams::eta() const {
  return std::sqrt(std::complex<double>(eta_squared(), 0.0));
}

void EngineParams::check() const {
  if (!(gamma_l > 0.0)) throw std::invalid_argument("EngineParams: gamma_l must be > 0");
  if (!(gamma_r > 0.0)) throw std::invalid_argument("EngineParams: gamma_r must be > 0");
  if (!(t_l > 0.0)) throw std::invalid_argument("EngineParams: t_l must be > 0");
  if (!(t_r > 0.0)) throw std::invalid_argument("EngineParams: t_r must be > 0");
  if (!(g >= 0.0)) throw std::invalid_argument("EngineParams: g must be >= 0");
  if (!(eps_s > 0.0)) throw std::invalid_argument("EngineParams: eps_s must be > 0");
}

std::vector<std::string> EngineParams::coupling_warnings() const {
  std::vector<std::string> w;
  const double weak = 0.1 * eps_s;
  if (gamma_l > weak || gamma_r > weak) {
    w.push_back("bare rates are not small against the qubit energy; "
                "the local master equation assumes gamma_j << eps_s");
  }
  const double gmax = 10.0 * std::max(gamma_l, gamma_r);
  if (g > gmax) {
    w.push_back("inter-qubit coupling exceeds the bare rates by more than 10x; "
                "the local master equation assumes g of order gamma_j");
  }
  return w;
}

RateSet rates(const EngineParams& p) {
  p.check();
  RateSet r;
  r.gamma_l_plus = p.gamma_l * p.fermi_l();
  r.gamma_l_minus = p.gamma_l - r.gamma_l_plus;
  r.gamma_r_plus = p.gamma_r * p.fermi_r();
  r.gamma_r_minus = p.gamma_r - r.gamma_r_plus;
  return r;
}

} // namespace entsim
