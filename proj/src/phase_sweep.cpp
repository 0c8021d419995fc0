#include "sosggm/phase_sweep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sosggm {

std::string to_string(Regime r) {
  switch (r) {
    case Regime::below_critical: return "below_critical";
    case Regime::critical: return "critical";
    case Regime::above_critical: return "above_critical";
  }
  return "?";
}

PhaseRecord classify_point(const Params& params, const Tolerances& tol) {
  PhaseRecord rec;
  rec.k = params.k;
  rec.theta = params.theta;
  rec.tau = params.tau;
  rec.laws = enumerate_laws(params, tol);

  for (const LawRecord& law : rec.laws) {
    if (law.family == LawFamily::asymmetric) {
      ++rec.n_asymmetric_pairs;
    } else {
      ++rec.n_symmetric_distinct;
    }
    if (law.valid) ++rec.n_valid_laws;
  }
  rec.n_asymmetric_pairs /= 2;  // records hold ordered pairs

  rec.tau_c = critical_tau(params.k, tol);
  const double crit_tol = 1e-9 * std::max(1.0, rec.tau_c);
  if (std::abs(params.tau - rec.tau_c) <= crit_tol) {
    rec.regime = Regime::critical;
    rec.paper_discrepancy = true;
  } else if (params.tau < rec.tau_c) {
    rec.regime = Regime::below_critical;
  } else {
    rec.regime = Regime::above_critical;
  }
  return rec;
}

std::vector<PhaseRecord> sweep(const std::vector<int>& ks, double tau_lo,
                               double tau_hi, int steps,
                               const Tolerances& tol) {
  if (ks.empty()) throw std::invalid_argument("sweep needs at least one k");
  if (steps < 2) throw std::invalid_argument("sweep needs steps >= 2");
  if (!(tau_lo > 2.0) || !(tau_hi >= tau_lo)) {
    throw std::invalid_argument("sweep needs 2 < tau_lo <= tau_hi");
  }
  std::vector<PhaseRecord> rows;
  rows.reserve(ks.size() * static_cast<std::size_t>(steps));
  for (int k : ks) {
    for (int j = 0; j < steps; ++j) {
      const double tau = tau_lo + (tau_hi - tau_lo) * j / (steps - 1);
      rows.push_back(classify_point(Params::from_tau(k, tau), tol));
    }
  }
  return rows;
}

std::vector<std::pair<int, double>> tauc_curve(int k_min, int k_max,
                                               const Tolerances& tol) {
  if (k_min < 2 || k_min > k_max) {
    throw std::invalid_argument("need 2 <= k_min <= k_max");
  }
  std::vector<std::pair<int, double>> rows;
  for (int k = k_min; k <= k_max; ++k) {
    rows.emplace_back(k, critical_tau(k, tol));
  }
  return rows;
}

}  // namespace sosggm
