#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sosggm/params.hpp"
#include "sosggm/polynomial.hpp"

namespace sosggm {

enum class LawFamily { trivial, symmetric, asymmetric };

std::string to_string(LawFamily f);
LawFamily law_family_from_string(const std::string& s);

/// Period-4 height-periodic boundary law in u-representation:
/// u_n = 1 on even classes, b on n = 1 (mod 4), a on n = 3 (mod 4).
struct PeriodicBoundaryLaw {
  double a = 1.0;
  double b = 1.0;
  LawFamily family = LawFamily::trivial;
  bool valid = false;  // a + b < tau, set when attached to Params

  double u(long n) const;
};

/// Builds the period-4 law from the pair (a, b); rejects non-positive
/// values. The overload with Params also sets the validity flag.
PeriodicBoundaryLaw extend_periodic(double a, double b);
PeriodicBoundaryLaw extend_periodic(double a, double b, const Params& params);

/// Verification and refinement tolerances. Defaults are the module
/// contract; the CLI can override them, and effective values are recorded
/// in every run manifest.
struct Tolerances {
  double root_residual = 1e-12;   // monic-polynomial residual after bisection
  double asym_residual = 1e-10;   // both equations of the pair system
  double recursion = 1e-9;
  double fixed_point = 1e-10;
  double norm_identity = 1e-10;
  double tauc_crosscheck = 1e-9;
};

/// Q(a) = 2 a^k + (2 - tau)(a^{k-1} + ... + a) + 2, the nontrivial factor
/// of the symmetric-pair equation 2a^{k+1} - tau a^k + tau a - 2 = 0.
/// The coefficient sequence is a palindrome, so roots come in (r, 1/r) pairs.
Polynomial symmetric_polynomial(const Params& params);

struct SymmetricRoot {
  double a;
  int multiplicity;  // in the full equation 2a^{k+1} - tau a^k + tau a - 2
};

/// Distinct positive roots of the full symmetric equation, ascending, each
/// with multiplicity; always contains a = 1. At the tangency the merged
/// root is reported once as a = 1 with multiplicity 3.
std::vector<SymmetricRoot> solve_symmetric(const Params& params,
                                           const Tolerances& tol = {});

/// tau at which Q acquires a tangent positive root, found by bisection on
/// tau over the sign of min_{a>0} Q. Cross-checked against the closed form
/// 2 + 4/(k-1) forced by the palindrome (tangent root pinned to a = 1);
/// throws OracleFailure if the two disagree beyond tol.tauc_crosscheck.
double critical_tau(int k, const Tolerances& tol = {});

/// All positive solutions (a, b), a != b, of the pair system
///   (a+b-tau) a^k + tau a - 2 = 0,
///   (a+b-tau) b^k + tau b - 2 = 0.
/// Result is sorted by (a, b) and exactly closed under the swap
/// (a,b) -> (b,a). Every returned pair has both equation residuals below
/// tol.asym_residual.
std::vector<std::pair<double, double>> solve_asymmetric(
    const Params& params, const Tolerances& tol = {});

/// Max one-step defect of the boundary-law recursions
///   u_{i+1} = (u_{-1}+u_1-tau) u_i^k + tau u_i - u_{i-1}   (forward)
/// and its mirror for negative indices, evaluated on the period-4
/// extension for i = 1..n_steps. Zero (to rounding) iff (a,b) solves the
/// pair system. n_steps >= 4 covers a full period.
double recursion_residual(const PeriodicBoundaryLaw& law, const Params& params,
                          int n_steps);

/// One-sided tail sums of the boundary-law normalization series at i = 0,
/// with z_j = u_j^k:  r0 = sum_{j>=1} theta^j z_j,  l0 = sum_{j<=-1}
/// theta^|j| z_j. Closed forms from the period-4 grouping:
///   r0 = (b^k th + th^2 + a^k th^3 + th^4) / (1 - th^4)
///   l0 = (a^k th + th^2 + b^k th^3 + th^4) / (1 - th^4)
struct SeriesSums {
  double l0;
  double r0;
};
SeriesSums series_sums(const PeriodicBoundaryLaw& law, const Params& params);

/// Direct truncated summation of the same series (tail below tail_bound);
/// an independent check of the closed forms.
SeriesSums series_sums_direct(const PeriodicBoundaryLaw& law,
                              const Params& params, double tail_bound = 1e-14);

enum class NormIdentityStatus { ok, sign_contradiction, singular };

/// The summability identity 1 + l0 + r0 = (theta - 1/theta)/(a + b - tau).
/// For a + b > tau the right side is negative while the left is positive;
/// that sign contradiction (and the singular case a + b = tau) is reported
/// as a status instead of a residual.
struct NormIdentityReport {
  NormIdentityStatus status = NormIdentityStatus::ok;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // |lhs - rhs| when status == ok, NaN otherwise
};
NormIdentityReport norm_identity_residual(const PeriodicBoundaryLaw& law,
                                          const Params& params);

/// Residual of the boundary-law fixed-point equation in the z-variables,
///   z_i = ((theta^|i| + sum_j theta^|i-j| z_j) / (1 + sum_j theta^|j| z_j))^k,
/// evaluated with z_i = u_i^k over one period i in {-2,-1,1,2}. The
/// bi-infinite sums are collapsed through the Z4 class weights, so this
/// check is independent of the recursion/pair-system derivation.
double fixed_point_residual(const PeriodicBoundaryLaw& law,
                            const Params& params);

struct LawResiduals {
  double recursion;
  double fixed_point;
  double norm_identity;
};

/// One law with its parameters and verification residuals; the unit of the
/// JSON law-list contract.
struct LawRecord {
  int k;
  double theta;
  double tau;
  double a;
  double b;
  LawFamily family;
  int multiplicity;
  bool valid;
  LawResiduals residuals;
};

/// Number of recursion steps used when stamping records.
inline constexpr int kRecordRecursionSteps = 100;

/// Every period-4 law at the given parameters: the symmetric-family roots
/// (including the trivial law) followed by the asymmetric ordered pairs,
/// each stamped with its residual triple. Any law failing an oracle
/// tolerance raises OracleFailure: that is a solver bug, not a data point.
std::vector<LawRecord> enumerate_laws(const Params& params,
                                      const Tolerances& tol = {});

}  // namespace sosggm
