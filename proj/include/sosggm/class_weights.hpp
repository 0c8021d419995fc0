#pragma once

#include <Eigen/Core>

namespace sosggm {

/// Unnormalized transfer weight of an edge increment, Q(j) = theta^|j|.
struct TransferWeight {
  double theta;

  double operator()(long j) const;

  /// Sum over all integers, (1+theta)/(1-theta).
  double total_mass() const { return (1.0 + theta) / (1.0 - theta); }
};

/// Exact reduction of the integer increment alphabet to Z4 classes:
/// T(d) = sum of theta^|j| over all integers j congruent to d (mod 4).
///
///   T(0) = 1 + 2 theta^4 / (1 - theta^4)
///   T(1) = T(3) = (theta + theta^3) / (1 - theta^4)
///   T(2) = 2 theta^2 / (1 - theta^4)
///
/// and sum_d T(d) equals the total transfer mass.
struct ClassWeightTable {
  double theta;
  Eigen::Array4d T;
  double total;

  static ClassWeightTable make(double theta);
};

/// Euclidean representative of n mod 4, always in {0,1,2,3}.
inline int mod4(long n) {
  long m = n % 4;
  return static_cast<int>(m < 0 ? m + 4 : m);
}

}  // namespace sosggm
