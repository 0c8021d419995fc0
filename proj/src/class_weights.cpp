#include "sosggm/class_weights.hpp"

#include <cmath>
#include <stdexcept>

namespace sosggm {

double TransferWeight::operator()(long j) const {
  return std::pow(theta, static_cast<double>(j < 0 ? -j : j));
}

ClassWeightTable ClassWeightTable::make(double theta) {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw std::invalid_argument("class weights need theta in (0,1)");
  }
  const double t2 = theta * theta;
  const double t3 = t2 * theta;
  const double t4 = t2 * t2;
  const double geom = 1.0 - t4;
  ClassWeightTable w;
  w.theta = theta;
  w.T << 1.0 + 2.0 * t4 / geom, (theta + t3) / geom, 2.0 * t2 / geom,
      (theta + t3) / geom;
  w.total = (1.0 + theta) / (1.0 - theta);
  return w;
}

}  // namespace sosggm
