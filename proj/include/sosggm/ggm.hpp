#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "sosggm/boundary_law.hpp"
#include "sosggm/cayley_tree.hpp"
#include "sosggm/class_weights.hpp"
#include "sosggm/params.hpp"

namespace sosggm {

/// Boundary-law factor on Z4 classes entering the marginal formula:
/// l = z = u^k on classes, i.e. (1, b^k, 1, a^k). The exponent convention
/// is the one under which finite-volume tables are marginalization
/// consistent; consistency_check is its numerical arbiter.
Eigen::Array4d law_weights(const PeriodicBoundaryLaw& law,
                           const Params& params);

/// Exact probability table over truncated gradient assignments on the edges
/// of a ball, per the boundary-law marginal formula: the weight of zeta is
///
///   (sum_{s in Z4} prod_{y in boundary} l(s + pathsum(y) mod 4))
///     * prod_edges theta^|zeta_e|,
///
/// normalized over |zeta_e| <= truncation. Probabilities are stored densely
/// in mixed-radix order over the canonical edge order; under truncation
/// every assignment has positive weight, so there is nothing sparse to
/// exploit. tail_bound bounds the probability mass the truncation omits
/// from the untruncated measure.
struct MarginalTable {
  std::vector<std::pair<int, int>> edges;  // (parent, child), canonical order
  int truncation = 0;
  double tail_bound = 0.0;
  double normalizer = 0.0;  // Z_Lambda: sum of unnormalized weights
  std::vector<double> probs;

  int num_edges() const { return static_cast<int>(edges.size()); }
  std::size_t size() const { return probs.size(); }

  std::size_t index_of(const GradientAssignment& zeta) const;
  GradientAssignment assignment_at(std::size_t index) const;
  double prob(const GradientAssignment& zeta) const;
};

inline constexpr std::size_t kDefaultEntryBudget = 10'000'000;

MarginalTable marginal_table(const TreeBall& ball,
                             const PeriodicBoundaryLaw& law,
                             const Params& params, int truncation,
                             std::size_t entry_budget = kDefaultEntryBudget);

/// Same construction with an explicit class-weight vector; lets tests feed
/// alternative boundary-factor conventions through the identical machinery.
MarginalTable marginal_table_with_weights(
    const TreeBall& ball, const Eigen::Array4d& weights, const Params& params,
    int truncation, std::size_t entry_budget = kDefaultEntryBudget);

/// Untruncated single-edge marginal, computed by message passing over Z4
/// class variables: within a class, the increment is two-sided geometric,
/// so only the class distribution needs the tree.
struct EdgeMarginal {
  double theta = 0.5;
  Eigen::Array4d class_prob;  // P(zeta == d mod 4)
  Eigen::Array4d class_mass;  // T(d)

  /// P(zeta = j), exact.
  double prob(long j) const;
};

EdgeMarginal edge_marginal_exact(const PeriodicBoundaryLaw& law,
                                 const Params& params, const TreeBall& ball,
                                 int edge);
EdgeMarginal edge_marginal_exact_with_weights(const Eigen::Array4d& weights,
                                              const Params& params,
                                              const TreeBall& ball, int edge);

/// Marginalization compatibility at finite volume: builds the small-ball
/// table directly, marginalizes the big-ball table onto the small edge set
/// (deep shells are summed out exactly by a class DP, so the big joint is
/// never materialized), and returns the max absolute entry difference.
double consistency_check(const PeriodicBoundaryLaw& law, const Params& params,
                         int radius_small, int radius_big, int truncation,
                         std::size_t entry_budget = kDefaultEntryBudget);
double consistency_check_with_weights(
    const Eigen::Array4d& weights, const Params& params, int radius_small,
    int radius_big, int truncation,
    std::size_t entry_budget = kDefaultEntryBudget);

/// Exact i.i.d. samples of gradient assignments: ancestral sampling of the
/// class variables down the tree, then each increment within its class by
/// inverse CDF of the restricted two-sided geometric law. No truncation.
/// Deterministic for a fixed seed.
struct SampleRun {
  std::vector<GradientAssignment> samples;
  std::vector<std::map<int, long>> edge_frequency;  // per edge, value -> count
};

SampleRun sample(const TreeBall& ball, const PeriodicBoundaryLaw& law,
                 const Params& params, int n, std::uint64_t seed);

}  // namespace sosggm
