#pragma once

// Minimal double-double arithmetic (Dekker/Knuth error-free transforms).
// Used by the verification oracles: their tolerances are absolute (1e-10
// and below) while the terms they cancel grow like a^k, so plain double
// runs out of headroom well before k ~ 20.

#include <cmath>

namespace sosggm::detail {

struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

inline DD two_sum(double a, double b) {
  const double s = a + b;
  const double z = s - a;
  return {s, (a - (s - z)) + (b - z)};
}

inline DD quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DD dd_add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DD dd_add(DD a, double b) { return dd_add(a, DD{b, 0.0}); }

inline DD dd_neg(DD a) { return {-a.hi, -a.lo}; }

inline DD dd_sub(DD a, DD b) { return dd_add(a, dd_neg(b)); }

inline DD dd_mul(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline DD dd_mul(DD a, double b) { return dd_mul(a, DD{b, 0.0}); }

inline DD dd_div(DD a, DD b) {
  const double q1 = a.hi / b.hi;
  DD r = dd_sub(a, dd_mul(b, q1));
  const double q2 = r.hi / b.hi;
  r = dd_sub(r, dd_mul(b, q2));
  const double q3 = r.hi / b.hi;
  DD q = quick_two_sum(q1, q2);
  return dd_add(q, q3);
}

inline DD dd_pow(DD x, int n) {
  DD r{1.0, 0.0};
  DD base = x;
  for (int e = n; e > 0; e >>= 1) {
    if (e & 1) r = dd_mul(r, base);
    base = dd_mul(base, base);
  }
  return r;
}

inline double to_double(DD a) { return a.hi + a.lo; }

}  // namespace sosggm::detail
