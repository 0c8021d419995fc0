#pragma once

#include <optional>

namespace sosggm {

/// Model parameters of the SOS transfer kernel on the k-regular tree.
///
/// theta in (0,1) is the primary parameter; tau = theta + 1/theta > 2 is
/// derived from it to full precision. When a user supplies tau, theta is the
/// root of t^2 - tau*t + 1 in (0,1); only that branch gives convergent
/// boundary-law series. The coupling pair (J, beta) with theta = exp(J*beta)
/// is carried for provenance only and never enters any computation.
struct Params {
  int k = 2;
  double theta = 0.5;
  double tau = 2.5;
  std::optional<double> coupling_J;
  std::optional<double> inverse_temperature_beta;

  static Params from_theta(int k, double theta);
  static Params from_tau(int k, double tau);
  static Params from_coupling(int k, double J, double beta);
};

}  // namespace sosggm
