#include "sosggm/polynomial.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace sosggm {

namespace {

// TwoSum (Knuth): a + b = s + e exactly.
inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  const double z = s - a;
  e = (a - (s - z)) + (b - z);
}

// TwoProd via fma: a * b = p + e exactly.
inline void two_prod(double a, double b, double& p, double& e) {
  p = a * b;
  e = std::fma(a, b, -p);
}

}  // namespace

Polynomial::Polynomial(Eigen::VectorXd coeffs) : coef_(std::move(coeffs)) {
  if (coef_.size() == 0) {
    throw std::invalid_argument("polynomial needs at least one coefficient");
  }
  if (coef_.size() > 1 && coef_(coef_.size() - 1) == 0.0) {
    throw std::invalid_argument("leading coefficient must be nonzero");
  }
}

double Polynomial::operator()(double x) const {
  const Eigen::Index n = coef_.size();
  double s = coef_(n - 1);
  double c = 0.0;  // accumulated correction, itself a Horner recurrence
  for (Eigen::Index i = n - 2; i >= 0; --i) {
    double p, pi;
    two_prod(s, x, p, pi);
    double t, sigma;
    two_sum(p, coef_(i), t, sigma);
    s = t;
    c = c * x + (pi + sigma);
  }
  return s + c;
}

Polynomial::Evaluation Polynomial::eval_with_error(double x) const {
  const Eigen::Index n = coef_.size();
  const double ax = std::abs(x);
  double s = coef_(n - 1);
  double m = std::abs(coef_(n - 1));  // Horner on |coefficients| at |x|
  for (Eigen::Index i = n - 2; i >= 0; --i) {
    s = s * x + coef_(i);
    m = m * ax + std::abs(coef_(i));
  }
  const double u = std::numeric_limits<double>::epsilon() / 2.0;
  const double k2n = 2.0 * static_cast<double>(n - 1) * u;
  const double gamma = k2n / (1.0 - k2n);
  return {(*this)(x), gamma * m};
}

Polynomial Polynomial::derivative() const {
  const Eigen::Index n = coef_.size();
  if (n == 1) return Polynomial(Eigen::VectorXd::Zero(1));
  Eigen::VectorXd d(n - 1);
  for (Eigen::Index i = 1; i < n; ++i) {
    d(i - 1) = static_cast<double>(i) * coef_(i);
  }
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  return Polynomial(coef_ / coef_(coef_.size() - 1));
}

}  // namespace sosggm
