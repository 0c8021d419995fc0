#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sosggm/boundary_law.hpp"
#include "sosggm/params.hpp"

namespace sosggm {

enum class Regime { below_critical, critical, above_critical };

std::string to_string(Regime r);

/// Solution counts and critical data at one (k, tau) point. Every law
/// behind the counts has passed the three verification oracles.
struct PhaseRecord {
  int k = 2;
  double theta = 0.0;
  double tau = 0.0;
  int n_symmetric_distinct = 0;  // distinct roots of the full symmetric eq
  int n_asymmetric_pairs = 0;    // unordered pairs
  int n_valid_laws = 0;          // laws passing the a+b < tau filter
  double tau_c = 0.0;
  Regime regime = Regime::below_critical;
  // The merged tangent root at tau_c makes the distinct count 1 where the
  // source theorem announces two; flagged, not reconciled.
  bool paper_discrepancy = false;
  std::vector<LawRecord> laws;
};

PhaseRecord classify_point(const Params& params, const Tolerances& tol = {});

/// Grid evaluation, k-major then tau ascending; deterministic row order.
std::vector<PhaseRecord> sweep(const std::vector<int>& ks, double tau_lo,
                               double tau_hi, int steps,
                               const Tolerances& tol = {});

/// (k, tau_c) rows for k in [k_min, k_max].
std::vector<std::pair<int, double>> tauc_curve(int k_min, int k_max,
                                               const Tolerances& tol = {});

}  // namespace sosggm
