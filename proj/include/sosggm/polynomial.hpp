#pragma once

#include <Eigen/Core>

namespace sosggm {

/// Dense real polynomial, coefficients in ascending powers.
///
/// Evaluation uses the compensated Horner scheme (error-free transformations
/// via fma), which behaves as if carried out in twice the working precision.
class Polynomial {
 public:
  /// coeffs[i] multiplies x^i; the leading coefficient must be nonzero.
  explicit Polynomial(Eigen::VectorXd coeffs);

  int degree() const { return static_cast<int>(coef_.size()) - 1; }
  const Eigen::VectorXd& coefficients() const { return coef_; }

  double operator()(double x) const;

  /// Value together with a running error bound for the *uncompensated*
  /// Horner recurrence (the classical gamma_{2n} |p~|(|x|) bound). The
  /// compensated value is well inside it.
  struct Evaluation {
    double value;
    double error_bound;
  };
  Evaluation eval_with_error(double x) const;

  Polynomial derivative() const;

  /// Same polynomial scaled to leading coefficient 1.
  Polynomial monic() const;

 private:
  Eigen::VectorXd coef_;
};

}  // namespace sosggm
