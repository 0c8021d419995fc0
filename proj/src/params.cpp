#include "sosggm/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sosggm {

namespace {

void check_k(int k) {
  if (k < 2) {
    throw std::invalid_argument("branching order k must be >= 2, got " +
                                std::to_string(k));
  }
}

}  // namespace

Params Params::from_theta(int k, double theta) {
  check_k(k);
  if (!(theta > 0.0 && theta < 1.0)) {
    throw std::invalid_argument("theta must lie in (0,1), got " +
                                std::to_string(theta));
  }
  Params p;
  p.k = k;
  p.theta = theta;
  p.tau = theta + 1.0 / theta;
  return p;
}

Params Params::from_tau(int k, double tau) {
  check_k(k);
  if (!(tau > 2.0)) {
    throw std::invalid_argument("tau must be > 2, got " + std::to_string(tau));
  }
  // Smaller root of t^2 - tau t + 1; the stable form avoids cancellation.
  const double theta = 2.0 / (tau + std::sqrt(tau * tau - 4.0));
  return from_theta(k, theta);
}

Params Params::from_coupling(int k, double J, double beta) {
  Params p = from_theta(k, std::exp(J * beta));
  p.coupling_J = J;
  p.inverse_temperature_beta = beta;
  return p;
}

}  // namespace sosggm
